#pragma once

#include <cstddef>
#include <vector>

#include "mwk/finring.hpp"
#include "mwk/presab.hpp"

namespace mwk {

// Diagonal form <a1, ..., an> with unit entries.
struct DiagForm {
  std::vector<Elem> entries;

  std::size_t rank() const { return entries.size(); }
};

// Throws Error unless `field` is a field of odd order at most 13.
void require_oracle_field(const Ring& field);

// Whether P^T diag(f) P = diag(g) for some invertible P, by enumerating
// GL_1 or GL_2. Rank 1 or 2 only.
bool isometric(const Ring& field, const DiagForm& f, const DiagForm& g);

// Rows <a>-<c> for isometric rank-1 pairs and <a>+<b>-<c>-<d> for isometric
// rank-2 pairs, over Z^{units}, deduplicated in generation order.
IntMatrix oracle_lattice(const Ring& field);

struct CrossValidation {
  bool lattices_equal = false;
  bool oracle_in_gw = false;
  bool gw_in_oracle = false;
  std::size_t oracle_rows = 0;
  std::size_t gw_rows = 0;
  std::size_t rank = 0;
  std::vector<Integer> torsion;
};

// Mutual containment of oracle_lattice and the Reduced relation rows.
CrossValidation cross_validate(const Ring& field);

}  // namespace mwk
