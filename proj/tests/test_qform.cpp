#include <doctest.h>

#include "helpers.hpp"
#include "mwk/qform.hpp"

using namespace mwk;

namespace {
DiagForm form(const Ring& r, std::initializer_list<long> xs) {
  DiagForm f;
  for (long x : xs) f.entries.push_back(r.from_int(x));
  return f;
}
}  // namespace

TEST_CASE("isometric examples") {
  const Ring f3 = make_ring("GF(3)"), f5 = make_ring("GF(5)"), f7 = make_ring("GF(7)");
  CHECK(isometric(f3, form(f3, {1, 1}), form(f3, {2, 2})));
  CHECK_FALSE(isometric(f5, form(f5, {1}), form(f5, {2})));
  CHECK(isometric(f5, form(f5, {1}), form(f5, {4})));
  CHECK_FALSE(isometric(f7, form(f7, {1, 1}), form(f7, {1, 3})));  // discriminants differ
  CHECK(isometric(f7, form(f7, {1, 3}), form(f7, {3, 1})));
}

TEST_CASE("scaling by squares") {
  for (const char* spec : {"GF(3)", "GF(5)", "GF(7)", "GF(9)", "GF(11)", "GF(13)"}) {
    const Ring f = make_ring(spec);
    for (Elem a : f.units())
      for (Elem b : f.units()) CHECK(isometric(f, DiagForm{{a}}, DiagForm{{f.mul(a, f.mul(b, b))}}));
  }
}

TEST_CASE("isometry is an equivalence relation on rank 2") {
  for (const char* spec : {"GF(3)", "GF(5)"}) {
    const Ring f = make_ring(spec);
    std::vector<DiagForm> forms;
    for (Elem a : f.units())
      for (Elem b : f.units()) forms.push_back(DiagForm{{a, b}});
    for (const auto& x : forms) {
      CHECK(isometric(f, x, x));
      for (const auto& y : forms) {
        const bool xy = isometric(f, x, y);
        CHECK(xy == isometric(f, y, x));
        if (!xy) continue;
        for (const auto& z : forms)
          if (isometric(f, y, z)) CHECK(isometric(f, x, z));
      }
    }
  }
}

TEST_CASE("oracle preconditions") {
  CHECK_THROWS_AS(oracle_lattice(make_ring("GF(2)")), Error);
  CHECK_THROWS_AS(oracle_lattice(make_ring("GF(4)")), Error);
  CHECK_THROWS_AS(oracle_lattice(make_ring("GF(17)")), Error);
  CHECK_THROWS_AS(oracle_lattice(make_ring("Z/9")), Error);
  const Ring f5 = make_ring("GF(5)");
  CHECK_THROWS_AS(isometric(f5, form(f5, {1, 1, 1}), form(f5, {1, 1, 1})), Error);
  CHECK_THROWS_AS(isometric(f5, form(f5, {1}), form(f5, {1, 1})), Error);
  CHECK_THROWS_AS(isometric(f5, form(f5, {0}), form(f5, {1})), Error);
}

TEST_CASE("oracle lattice examples") {
  const Ring f3 = make_ring("GF(3)");
  CHECK(contains(oracle_lattice(f3), testing::vec({2, -2})));
  const Ring f5 = make_ring("GF(5)");
  IntVector v(4);
  v[static_cast<std::size_t>(f5.unit_index(f5.from_int(4)))] = 1;
  v[static_cast<std::size_t>(f5.unit_index(f5.one()))] = -1;
  CHECK(contains(oracle_lattice(f5), v));
}

TEST_CASE("oracle agrees with the reduced presentation") {
  for (const char* spec : {"GF(3)", "GF(5)", "GF(7)", "GF(9)", "GF(11)", "GF(13)"}) {
    CAPTURE(spec);
    const auto r = cross_validate(make_ring(spec));
    CHECK(r.lattices_equal);
    CHECK(r.rank == 1);
    CHECK(r.torsion == std::vector<Integer>{2});
  }
}
