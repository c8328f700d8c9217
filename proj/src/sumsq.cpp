#include "mwk/sumsq.hpp"

namespace mwk {

std::optional<int> SumSquareResult::exponent(Elem u) const {
  auto it = exponent_of.find(u);
  if (it == exponent_of.end()) return std::nullopt;
  return it->second;
}

SumSquareResult unit_square_closure(const Ring& ring) {
  SumSquareResult out{ring, {}, {}, {}, 0};
  const auto& units = ring.units();
  std::vector<int> level(units.size(), -1);
  for (Elem s : ring.unit_squares()) level[static_cast<std::size_t>(ring.unit_index(s))] = 0;

  for (int k = 1;; ++k) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < units.size(); ++i)
      if (level[i] >= 0) members.push_back(i);
    bool grew = false;
    for (std::size_t bi : members)
      for (std::size_t ci : members) {
        const Elem s = ring.add(units[bi], units[ci]);
        const int si = ring.unit_index(s);
        if (si < 0 || level[static_cast<std::size_t>(si)] >= 0) continue;
        level[static_cast<std::size_t>(si)] = k;
        out.witness.emplace(s, std::pair{units[bi], units[ci]});
        grew = true;
      }
    if (!grew) break;
    out.rounds = k;
  }

  for (std::size_t i = 0; i < units.size(); ++i) {
    if (level[i] >= 0)
      out.exponent_of.emplace(units[i], level[i]);
    else
      out.unreachable.push_back(units[i]);
  }
  return out;
}

std::optional<int> minus_one_exponent(const SumSquareResult& result) {
  return result.exponent(result.ring.neg(result.ring.one()));
}

std::optional<int> minus_one_exponent(const Ring& ring) { return minus_one_exponent(unit_square_closure(ring)); }

}  // namespace mwk
