#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mwk/finring.hpp"

namespace mwk {

// Minimal exponents of units as unit sums of squares.
struct SumSquareResult {
  Ring ring;
  std::map<Elem, int> exponent_of;
  // lexicographically smallest (b, c) by enumeration order with b + c = u
  std::map<Elem, std::pair<Elem, Elem>> witness;
  std::vector<Elem> unreachable;
  int rounds = 0;  // number of productive rounds after the seed

  std::optional<int> exponent(Elem u) const;
};

// Least fixpoint of S_0 = unit squares, S_{k+1} = S_k + {b + c unit : b, c in S_k}.
SumSquareResult unit_square_closure(const Ring& ring);

std::optional<int> minus_one_exponent(const Ring& ring);
std::optional<int> minus_one_exponent(const SumSquareResult& result);

}  // namespace mwk
