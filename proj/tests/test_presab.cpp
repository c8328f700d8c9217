#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mwk/presab.hpp"

using namespace mwk;
using testing::mat;
using testing::vec;

namespace {

void check_smith(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  CHECK(s.u * m * s.v == s.d);
  CHECK(s.d.is_diagonal());
  CHECK(abs(determinant(s.u)) == 1);
  CHECK(abs(determinant(s.v)) == 1);
  const std::size_t k = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const Integer& a = s.d(i, i);
    const Integer& b = s.d(i + 1, i + 1);
    CHECK(a >= 0);
    if (a == 0)
      CHECK(b == 0);
    else
      CHECK(b % a == 0);
  }
}

// random unimodular n x n: product of elementary operations and swaps
IntMatrix random_unimodular(std::size_t n, std::mt19937& rng) {
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int step = 0; step < 12; ++step) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    if (step % 5 == 4) {
      u.swap_rows(i, j);
      continue;
    }
    const Integer c = coef(rng);
    for (std::size_t col = 0; col < n; ++col) u(i, col) += c * u(j, col);
  }
  return u;
}

}  // namespace

TEST_CASE("smith normal form examples") {
  auto s = smith_normal_form(mat(2, {{2, -2}}));
  CHECK(s.d == mat(2, {{2, 0}}));
  check_smith(mat(2, {{2, -2}}));

  s = smith_normal_form(IntMatrix(2, 2));
  CHECK(s.d == IntMatrix(2, 2));
  CHECK(s.u == IntMatrix::identity(2));
  CHECK(s.v == IntMatrix::identity(2));

  s = smith_normal_form(mat(2, {{2, 0}, {0, 3}}));
  CHECK(s.d == mat(2, {{1, 0}, {0, 6}}));
  check_smith(mat(2, {{2, 0}, {0, 3}}));

  check_smith(mat(3, {{6, 4, 2}, {-3, 9, 12}, {0, 0, 5}}));
  check_smith(mat(4, {{0, 0, 0, 8}, {0, 12, 0, 0}}));
}

TEST_CASE("quotient examples") {
  auto q = quotient(2, mat(2, {{2, -2}}));
  CHECK(q.rank == 1);
  CHECK(q.torsion == std::vector<Integer>{2});

  q = quotient(2, IntMatrix(0, 2));
  CHECK(q.rank == 2);
  CHECK(q.torsion.empty());

  q = quotient(1, mat(1, {{0}}));
  CHECK(q.rank == 1);
  CHECK(q.torsion.empty());

  q = quotient(3, mat(3, {{2, 0, 0}, {0, 4, 0}, {0, 0, 3}}));
  CHECK(q.rank == 0);
  CHECK(q.torsion == std::vector<Integer>{2, 12});
}

TEST_CASE("contains examples") {
  const IntMatrix r = mat(2, {{2, -2}});
  CHECK(contains(r, vec({4, -4})));
  CHECK_FALSE(contains(r, vec({1, -1})));
  CHECK(contains(IntMatrix(0, 2), vec({0, 0})));
  CHECK_FALSE(contains(IntMatrix(0, 2), vec({0, 1})));
}

TEST_CASE("element order examples") {
  const auto q = quotient(2, mat(2, {{2, -2}}));
  CHECK(element_order(q, vec({1, -1})) == Integer(2));
  CHECK(element_order(q, vec({0, 0})) == Integer(1));
  CHECK_FALSE(element_order(q, vec({1, 0})).has_value());
}

TEST_CASE("canonical coordinates are additive and lift back") {
  const IntMatrix r = mat(4, {{2, -2, 0, 0}, {0, 3, 3, 0}, {1, 1, 1, 1}});
  const auto q = quotient(4, r);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int t = 0; t < 50; ++t) {
    const IntVector v = vec({d(rng), d(rng), d(rng), d(rng)});
    const IntVector w = vec({d(rng), d(rng), d(rng), d(rng)});
    IntVector s(4);
    for (std::size_t i = 0; i < 4; ++i) s[i] = v[i] + w[i];
    const IntVector cv = q.canonical(v), cw = q.canonical(w), cs = q.canonical(s);
    IntVector sum(cv.size());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = cv[i] + cw[i];
    CHECK(q.canonical(q.lift(sum)) == cs);
    CHECK(q.canonical(q.lift(cv)) == cv);
  }
}

TEST_CASE("relation rows are contained") {
  const IntMatrix r = mat(3, {{4, 6, 0}, {0, 3, 9}, {2, 2, 2}});
  for (std::size_t i = 0; i < r.rows(); ++i) CHECK(contains(r, r.row(i)));
}

TEST_CASE("invariants are stable under unimodular premultiplication") {
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix m(4, 5);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 5; ++j) m(i, j) = d(rng);
    const auto base = quotient(5, m);
    const IntMatrix u = random_unimodular(4, rng);
    CHECK(abs(determinant(u)) == 1);
    const auto moved = quotient(5, u * m);
    CHECK(moved.rank == base.rank);
    CHECK(moved.torsion == base.torsion);
    check_smith(m);
  }
}

TEST_CASE("lattice coordinates reproduce members") {
  Lattice l(3);
  l.insert(vec({2, 4, 6}));
  l.insert(vec({0, 3, 3}));
  CHECK(l.rank() == 2);
  CHECK(l.contains(vec({2, 7, 9})));
  CHECK_FALSE(l.contains(vec({1, 2, 3})));
  const auto c = l.coordinates(vec({4, 11, 15}));
  REQUIRE(c.has_value());
  IntVector back(3);
  for (std::size_t i = 0; i < l.rank(); ++i)
    for (std::size_t j = 0; j < 3; ++j) back[j] += (*c)[i] * l.basis()[i][j];
  CHECK(back == vec({4, 11, 15}));
}
