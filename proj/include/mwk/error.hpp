#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mwk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax error in one of the input languages. line/column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column, std::string token = {})
      : Error(format(message, line, column, token)), line_(line), column_(column), token_(std::move(token)) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& token() const { return token_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column,
                            const std::string& token) {
    std::string out = std::to_string(line) + ":" + std::to_string(column) + ": " + message;
    if (!token.empty()) out += " (at '" + token + "')";
    return out;
  }

  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

}  // namespace mwk
