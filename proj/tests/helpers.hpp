#pragma once

#include <string>
#include <vector>

#include "mwk/gwring.hpp"

namespace testing {

inline mwk::IntVector vec(std::initializer_list<long> xs) {
  mwk::IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline mwk::IntMatrix mat(std::size_t cols, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<mwk::IntVector> r;
  for (auto row : rows) r.push_back(vec(row));
  return mwk::IntMatrix::from_rows(cols, r);
}

inline std::vector<std::string> formatted(const mwk::Ring& r, const std::vector<mwk::Elem>& xs) {
  std::vector<std::string> out;
  for (auto x : xs) out.push_back(r.format(x));
  return out;
}

// <u> for an integer u
inline mwk::GroupRingVector angle(const mwk::Ring& r, long u) {
  return mwk::GroupRingVector::basis(r, r.from_int(u));
}

// rings used for the exhaustive property checks
inline const std::vector<std::string>& family() {
  static const std::vector<std::string> f{"GF(2)", "GF(3)",  "GF(4)",  "GF(5)",  "GF(7)",   "GF(8)",
                                          "GF(9)", "GF(11)", "GF(13)", "Z/4",    "Z/8",     "Z/9",
                                          "Z/12",  "Z/16",   "Z/25",   "GR(4,2)", "GR(4,3)"};
  return f;
}

}  // namespace testing
