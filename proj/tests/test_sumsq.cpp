#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "mwk/gwring.hpp"
#include "mwk/sumsq.hpp"

using namespace mwk;

TEST_CASE("closure examples") {
  const Ring f2 = make_ring("GF(2)");
  auto s = unit_square_closure(f2);
  CHECK(s.exponent(f2.one()) == 0);
  CHECK(s.unreachable.empty());

  const Ring z4 = make_ring("Z/4");
  s = unit_square_closure(z4);
  CHECK(s.exponent(z4.one()) == 0);
  CHECK(s.unreachable == std::vector<Elem>{z4.from_int(3)});

  const Ring f3 = make_ring("GF(3)");
  s = unit_square_closure(f3);
  CHECK(s.exponent(f3.from_int(2)) == 1);
  CHECK(s.witness.at(f3.from_int(2)) == std::pair{f3.one(), f3.one()});
}

TEST_CASE("minus one exponent") {
  CHECK_FALSE(minus_one_exponent(make_ring("Z/4")).has_value());
  for (const char* spec : {"Z/8", "Z/16"}) CHECK_FALSE(minus_one_exponent(make_ring(spec)).has_value());
  CHECK(minus_one_exponent(make_ring("GR(4,2)")) == 1);
  CHECK(minus_one_exponent(make_ring("GF(4)")) == 0);
  for (const char* spec : {"GF(3)", "GF(5)", "GF(7)", "GF(11)", "GF(13)"}) CHECK(minus_one_exponent(make_ring(spec)).has_value());
  // exponent 1 in GR(4,2): -1 = x + x^2 with x = (x^2)^2 a square
  const Ring gr = make_ring("GR(4,2)");
  const auto s = unit_square_closure(gr);
  const auto [b, c] = s.witness.at(gr.neg(gr.one()));
  CHECK(gr.add(b, c) == gr.neg(gr.one()));
  CHECK(s.exponent(b) == 0);
  CHECK(s.exponent(c) == 0);
}

TEST_CASE("closure invariants") {
  for (const auto& spec : testing::family()) {
    const Ring ring = make_ring(spec);
    const auto s = unit_square_closure(ring);
    CAPTURE(spec);
    // exponent 0 is exactly the unit squares
    const auto sq = ring.unit_squares();
    std::set<Elem> zero;
    for (const auto& [u, n] : s.exponent_of)
      if (n == 0) zero.insert(u);
    CHECK(zero == std::set<Elem>(sq.begin(), sq.end()));
    CHECK(s.rounds <= static_cast<int>(ring.units().size()));
    CHECK(s.exponent_of.size() + s.unreachable.size() == ring.units().size());

    // witnesses are minimal: b, c of exponent <= n-1, and no decomposition below
    for (const auto& [u, n] : s.exponent_of) {
      if (n == 0) continue;
      const auto [b, c] = s.witness.at(u);
      CHECK(ring.add(b, c) == u);
      CHECK(*s.exponent(b) <= n - 1);
      CHECK(*s.exponent(c) <= n - 1);
      for (const auto& [x, nx] : s.exponent_of)
        for (const auto& [y, ny] : s.exponent_of)
          if (nx < n - 1 && ny < n - 1) CHECK(ring.add(x, y) != u);
    }
  }
}

TEST_CASE("exponents are Frobenius invariant") {
  for (const char* spec : {"GF(4)", "GF(8)", "GF(9)", "GF(25)", "GF(27)"}) {
    const Ring ring = make_ring(spec);
    const auto s = unit_square_closure(ring);
    const auto p = static_cast<std::uint64_t>(ring.characteristic());
    for (Elem u : ring.units()) CHECK(s.exponent(u) == s.exponent(ring.pow(u, p)));
  }
}

TEST_CASE("2^n (<a> - <1>) lies in the reduced lattice") {
  for (const auto& spec : testing::family()) {
    const Ring ring = make_ring(spec);
    const auto s = unit_square_closure(ring);
    const auto p = present(ring, PresentationKind::Reduced);
    for (const auto& [u, n] : s.exponent_of) {
      const auto v = (GroupRingVector::basis(ring, u) - GroupRingVector::one(ring)) * (Integer(1) << n);
      CHECK(p.lattice().contains(v.dense()));
    }
  }
}

TEST_CASE("finite exponent of -1 kills the minus part") {
  for (const auto& spec : testing::family()) {
    const Ring ring = make_ring(spec);
    if (!minus_one_exponent(ring)) continue;
    CAPTURE(spec);
    const auto split = invert_two_split(present(ring, PresentationKind::Reduced));
    CHECK(split.minus.rank == 0);
    CHECK(split.minus.odd_torsion.empty());
  }
}
