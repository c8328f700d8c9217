#include <algorithm>
#include <set>

#include <doctest.h>

#include "helpers.hpp"
#include "mwk/gwring.hpp"
#include "mwk/sumsq.hpp"

using namespace mwk;
using testing::angle;
using testing::vec;

TEST_CASE("build_relations examples") {
  CHECK(build_relations(make_ring("Z/4"), PresentationKind::Reduced).rows() == 0);
  CHECK(build_relations(make_ring("GF(2)"), PresentationKind::Hopf).rows() == 0);
  CHECK(build_relations(make_ring("GF(2)"), PresentationKind::Reduced).rows() == 0);

  // F3 Hopf: spanned by 2<1> - 2<2>
  const IntMatrix r = build_relations(make_ring("GF(3)"), PresentationKind::Hopf);
  REQUIRE(r.rows() > 0);
  CHECK(contains(r, vec({2, -2})));
  for (std::size_t i = 0; i < r.rows(); ++i) CHECK(contains(testing::mat(2, {{2, -2}}), r.row(i)));
}

TEST_CASE("build_relations has no zero or duplicate rows") {
  for (const auto& spec : testing::family()) {
    const Ring ring = make_ring(spec);
    for (auto kind : {PresentationKind::Hopf, PresentationKind::Reduced}) {
      const IntMatrix r = build_relations(ring, kind);
      std::set<IntVector> seen;
      for (std::size_t i = 0; i < r.rows(); ++i) {
        const IntVector row = r.row(i);
        CHECK(std::any_of(row.begin(), row.end(), [](const Integer& x) { return x != 0; }));
        CHECK(seen.insert(row).second);
      }
    }
  }
}

TEST_CASE("present examples") {
  auto p = present(make_ring("GF(2)"), PresentationKind::Reduced);
  CHECK(p.rank() == 1);
  CHECK(p.torsion().empty());

  p = present(make_ring("Z/4"), PresentationKind::Reduced);
  CHECK(p.rank() == 2);
  CHECK(p.torsion().empty());

  p = present(make_ring("GF(7)"), PresentationKind::Reduced);
  CHECK(p.rank() == 1);
  CHECK(p.torsion() == std::vector<Integer>{2});
}

TEST_CASE("group ring multiplication") {
  const Ring f7 = make_ring("GF(7)");
  CHECK(mul(angle(f7, 3), angle(f7, 5)) == GroupRingVector::one(f7));
  const GroupRingVector x = angle(f7, 2) * Integer(3) - angle(f7, 6);
  CHECK(mul(GroupRingVector::one(f7), x) == x);
  CHECK(mul(angle(f7, 2) + angle(f7, 3), angle(f7, 4)) == angle(f7, 1) + angle(f7, 5));
  CHECK_THROWS_AS(mul(angle(f7, 1), angle(make_ring("GF(5)"), 1)), Error);
  CHECK(GroupRingVector::one(f7).to_string() == "<1>");
}

TEST_CASE("class_equal and torsion_exponent") {
  const Ring f5 = make_ring("GF(5)"), z4 = make_ring("Z/4"), f3 = make_ring("GF(3)");
  const auto p5 = present(f5, PresentationKind::Reduced);
  CHECK(class_equal(p5, angle(f5, 4), angle(f5, 1)));
  CHECK(class_equal(p5, angle(f5, 2), angle(f5, 2)));
  const auto p4 = present(z4, PresentationKind::Reduced);
  CHECK_FALSE(class_equal(p4, angle(z4, 3), angle(z4, 1)));

  const auto p3 = present(f3, PresentationKind::Reduced);
  CHECK(torsion_exponent(p3, angle(f3, 2) - angle(f3, 1)) == Integer(2));
  CHECK_FALSE(torsion_exponent(p4, angle(z4, 3) - angle(z4, 1)).has_value());
  CHECK(torsion_exponent(p4, GroupRingVector(z4)) == Integer(1));
}

TEST_CASE("invert_two_split examples") {
  auto s = invert_two_split(present(make_ring("GF(3)"), PresentationKind::Reduced));
  CHECK(s.plus.rank == 1);
  CHECK(s.minus.rank == 0);
  s = invert_two_split(present(make_ring("Z/4"), PresentationKind::Reduced));
  CHECK(s.plus.rank == 1);
  CHECK(s.minus.rank == 1);
  s = invert_two_split(present(make_ring("GF(2)"), PresentationKind::Reduced));
  CHECK(s.plus.rank == 1);
  CHECK(s.minus.rank == 0);
}

TEST_CASE("compare_presentations") {
  for (const char* f : {"GF(3)", "GF(4)", "GF(5)", "GF(7)", "GF(9)", "GF(11)", "GF(13)"}) {
    CAPTURE(f);
    const auto c = compare_presentations(make_ring(f));
    CHECK(c.extra_relations_implied);
    CHECK_FALSE(c.witness.has_value());
  }
  const auto a = compare_presentations(make_ring("Z/16"));
  const auto b = compare_presentations(make_ring("Z/16"));
  CHECK(a.extra_relations_implied == b.extra_relations_implied);
  CHECK(a.witness.has_value() == !a.extra_relations_implied);
  if (a.witness) CHECK(a.witness->to_string() == b.witness->to_string());
}

TEST_CASE("multiplication descends to the quotient") {
  for (const auto& spec : testing::family()) {
    const Ring ring = make_ring(spec);
    for (auto kind : {PresentationKind::Hopf, PresentationKind::Reduced}) {
      const auto p = present(ring, kind);
      bool ok = true;
      for (const auto& g : p.lattice().basis()) {
        const auto gv = GroupRingVector::from_dense(ring, g);
        for (Elem u : ring.units()) ok = ok && p.lattice().contains(mul(GroupRingVector::basis(ring, u), gv).dense());
      }
      CAPTURE(spec);
      CHECK(ok);
    }
  }
}

TEST_CASE("group ring identities") {
  for (const auto& spec : testing::family()) {
    const Ring ring = make_ring(spec);
    const auto& units = ring.units();
    if (units.size() > 20) continue;
    const GroupRingVector one = GroupRingVector::one(ring);
    const GroupRingVector m1 = GroupRingVector::basis(ring, ring.neg(ring.one()));
    CHECK(mul(m1, m1) == one);
    for (Elem a : units) {
      const auto x = GroupRingVector::basis(ring, a) * Integer(2) - one;
      CHECK(mul(one, x) == x);
      CHECK(mul(x, one) == x);
      for (Elem b : units) {
        const auto y = GroupRingVector::basis(ring, b) + m1;
        CHECK(mul(x, y) == mul(y, x));
        for (Elem c : units) {
          const auto z = GroupRingVector::basis(ring, c);
          CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
        }
      }
    }
    // with 2e+ = 1 + <-1> and 2e- = 1 - <-1>
    const auto ep = one + m1, em = one - m1;
    CHECK(ep + em == one * Integer(2));
    CHECK(mul(ep, ep) == ep * Integer(2));
    CHECK(mul(em, em) == em * Integer(2));
    CHECK(mul(ep, em).is_zero());
  }
}

TEST_CASE("reduced presentations of fields have rank one") {
  for (const char* f : {"GF(2)", "GF(3)", "GF(4)", "GF(5)", "GF(7)", "GF(8)", "GF(9)", "GF(11)", "GF(13)"}) {
    const Ring ring = make_ring(f);
    const auto p = present(ring, PresentationKind::Reduced);
    CHECK(p.rank() == 1);
    // the augmentation kills every relation, so Z splits off
    for (std::size_t i = 0; i < p.relations().rows(); ++i)
      CHECK(augmentation(GroupRingVector::from_dense(ring, p.relations().row(i))) == 0);
    CHECK(augmentation(GroupRingVector::one(ring)) == 1);
  }
}

TEST_CASE("2^n (<a> - 1) vanishes when a is a sum of 2^n unit squares") {
  for (const char* spec : {"GF(3)", "GF(5)", "GF(7)", "GF(9)", "GF(11)", "GF(13)", "Z/9", "Z/25", "GR(4,2)"}) {
    const Ring ring = make_ring(spec);
    const auto p = present(ring, PresentationKind::Reduced);
    const auto s = unit_square_closure(ring);
    for (Elem a : ring.units()) {
      const auto n = s.exponent(a);
      if (!n) continue;
      const auto order = torsion_exponent(p, GroupRingVector::basis(ring, a) - GroupRingVector::one(ring));
      REQUIRE(order.has_value());
      CHECK((Integer(1) << *n) % *order == 0);
    }
  }
}

TEST_CASE("presentation kind names") {
  CHECK(parse_presentation_kind("hopf") == PresentationKind::Hopf);
  CHECK(to_string(PresentationKind::Reduced) == "reduced");
  CHECK_THROWS_AS(parse_presentation_kind("witt"), Error);
}
