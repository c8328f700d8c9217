#include "mwk/identity_parser.hpp"

#include <cctype>

namespace mwk {

namespace {

struct Token {
  enum class Kind { Int, Ident, Sym, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t column = 0;
};

std::vector<Token> lex(std::string_view s, std::size_t line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Token::Kind::Int, std::string(s.substr(start, i - start)), start + 1});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '\'')) ++i;
      out.push_back({Token::Kind::Ident, std::string(s.substr(start, i - start)), start + 1});
    } else if (std::string_view("[]<>()+-*/^=,;|").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::Sym, std::string(1, c), start + 1});
      ++i;
    } else {
      throw ParseError("unexpected character", line, start + 1, std::string(1, c));
    }
  }
  out.push_back({Token::Kind::End, "", s.size() + 1});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t line) : toks_(lex(text, line)), line_(line) {}

  bool at_end() const { return peek().kind == Token::Kind::End; }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw ParseError(msg, line_, t.column, t.kind == Token::Kind::End ? "<end>" : t.text);
  }

  const Token& peek() const { return toks_[pos_]; }
  bool is_sym(char c) const { return peek().kind == Token::Kind::Sym && peek().text[0] == c; }
  bool accept(char c) {
    if (!is_sym(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  long small_int() {
    if (peek().kind != Token::Kind::Int) fail("expected integer");
    if (peek().text.size() > 6) fail("exponent too large");
    return std::stol(toks_[pos_++].text);
  }

  // --- unit expressions

  UnitExpr usum() {
    std::vector<std::pair<Integer, UnitExpr>> terms;
    terms.emplace_back(1, uprod());
    while (is_sym('+') || is_sym('-')) {
      const bool minus = is_sym('-');
      ++pos_;
      terms.emplace_back(minus ? -1 : 1, uprod());
    }
    if (terms.size() == 1) return terms.front().second;
    const Token& at = peek();
    try {
      return UnitExpr::sum(terms);
    } catch (const Error& e) {
      throw ParseError(e.what(), line_, at.column);
    }
  }

  UnitExpr uprod() {
    UnitExpr u = ufactor();
    while (is_sym('*') || is_sym('/')) {
      const bool div = is_sym('/');
      ++pos_;
      const UnitExpr v = ufactor();
      u = div ? u / v : u * v;
    }
    return u;
  }

  UnitExpr ufactor() {
    if (accept('-')) return -ufactor();
    UnitExpr u = uprimary();
    if (accept('^')) {
      const bool neg = accept('-');
      const long n = small_int();
      u = u.pow(static_cast<int>(neg ? -n : n));
    }
    return u;
  }

  UnitExpr uprimary() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Ident) {
      ++pos_;
      return UnitExpr::var(t.text);
    }
    if (t.kind == Token::Kind::Int) {
      ++pos_;
      const Integer n(t.text);
      if (n == 0) {
        --pos_;
        fail("0 is not a unit");
      }
      return UnitExpr::integer(n);
    }
    if (accept('(')) {
      UnitExpr u = usum();
      expect(')');
      return u;
    }
    fail("expected unit expression");
  }

  // --- terms

  KmwTerm term() {
    KmwTerm t;
    bool minus = false;
    if (accept('-')) minus = true;
    else accept('+');
    t = prod();
    if (minus) t = -t;
    while (is_sym('+') || is_sym('-')) {
      const bool m = is_sym('-');
      ++pos_;
      const KmwTerm p = prod();
      if (m) t -= p;
      else t += p;
    }
    return t;
  }

  bool starts_atom() const {
    const Token& t = peek();
    if (t.kind == Token::Kind::Int) return true;
    if (t.kind == Token::Kind::Ident) return t.text == "eta" || t.text == "eps" || t.text == "h";
    return is_sym('[') || is_sym('<') || is_sym('(');
  }

  KmwTerm prod() {
    KmwTerm t = atom();
    while (true) {
      if (accept('*')) {
        t = t * atom();
      } else if (starts_atom()) {
        t = t * atom();
      } else {
        break;
      }
    }
    return t;
  }

  KmwTerm atom() {
    KmwTerm t = primary();
    while (accept('^')) t = t.pow(static_cast<unsigned>(small_int()));
    return t;
  }

  KmwTerm primary() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Int) {
      ++pos_;
      return KmwTerm::integer(Integer(t.text));
    }
    if (t.kind == Token::Kind::Ident) {
      if (t.text == "eta") {
        ++pos_;
        return KmwTerm::eta();
      }
      if (t.text == "eps") {
        ++pos_;
        return KmwTerm::epsilon();
      }
      if (t.text == "h") {
        ++pos_;
        return KmwTerm::hyperbolic();
      }
      fail("unknown term symbol; unit variables belong inside [..] or <..>");
    }
    if (accept('[')) {
      UnitExpr u = usum();
      expect(']');
      return KmwTerm::bracket(u);
    }
    if (accept('<')) {
      UnitExpr u = usum();
      expect('>');
      return KmwTerm::angle(u);
    }
    if (accept('(')) {
      KmwTerm inner = term();
      expect(')');
      return inner;
    }
    fail("expected term");
  }

  // --- hypotheses

  void hypotheses(Hypotheses& out) {
    while (!at_end()) {
      if (peek().kind != Token::Kind::Ident || peek().text != "unit") fail("expected unit(...)");
      ++pos_;
      expect('(');
      out.declare(usum());
      expect(')');
      if (!accept(',')) accept(';');
    }
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

}  // namespace

UnitExpr parse_unit_expr(std::string_view text, std::size_t line) {
  Parser p(text, line);
  UnitExpr u = p.usum();
  if (!p.at_end()) p.fail("unexpected trailing input");
  return u;
}

KmwTerm parse_term(std::string_view text, std::size_t line) {
  Parser p(text, line);
  KmwTerm t = p.term();
  if (!p.at_end()) p.fail("unexpected trailing input");
  return t;
}

Hypotheses parse_hypotheses(std::string_view text, std::size_t line) {
  Parser p(text, line);
  Hypotheses h;
  p.hypotheses(h);
  return h;
}

Identity parse_identity(std::string_view text, const Hypotheses& extra, std::size_t line) {
  Parser p(text, line);
  Identity id;
  id.text = std::string(text);
  id.hypotheses = extra;
  id.lhs = p.term();
  p.expect('=');
  id.rhs = p.term();
  if (p.accept('|')) p.hypotheses(id.hypotheses);
  if (!p.at_end()) p.fail("unexpected trailing input");
  try {
    validate(id);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), line, 1);
  }
  return id;
}

std::vector<Identity> parse_identity_file(std::string_view contents, const Hypotheses& extra) {
  std::vector<Identity> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= contents.size()) {
    std::size_t end = contents.find('\n', start);
    if (end == std::string_view::npos) end = contents.size();
    std::string_view line = contents.substr(start, end - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) out.push_back(parse_identity(line, extra, line_no));
    start = end + 1;
  }
  return out;
}

}  // namespace mwk
