#include <doctest.h>

#include "helpers.hpp"
#include "mwk/identity_parser.hpp"
#include "mwk/kmwterm.hpp"

using namespace mwk;

namespace {
UnitExpr u(const char* s) { return parse_unit_expr(s); }
KmwTerm t(const char* s) { return parse_term(s); }
}  // namespace

TEST_CASE("unit expressions are canonical") {
  CHECK(u("a*b") == u("b*a"));
  CHECK(u("a/a").is_one());
  CHECK(u("-(-a)") == u("a"));
  CHECK(u("a^2/a") == u("a"));
  CHECK(u("(-1)*(-1)").is_one());
  CHECK(u("6") == u("2*3"));
  CHECK(u("1-a") == u("a").one_minus());
  CHECK(u("2-2*a") == u("2*(1-a)"));
  CHECK(u("a-a^2") == u("a*(1-a)"));
  CHECK(u("a-1") == -u("1-a"));
  CHECK(u("a*b^2").size() == 3);
  CHECK(u("a^2*b^4").square_root() == u("a*b^2"));
  CHECK_FALSE(u("-a^2").square_root().has_value());
  CHECK(u("a*b^2/c").to_string() == "a*b^2/c");
  CHECK(u("1-a").bare_string() == "1-a");
  CHECK_THROWS_AS(u("a-a"), Error);
  CHECK_THROWS_AS(u("0"), ParseError);
}

TEST_CASE("hypotheses") {
  Hypotheses h;
  CHECK(h.is_unit(u("a*b/c")));
  CHECK_FALSE(h.is_unit(u("1-a")));
  CHECK_FALSE(h.is_unit(u("2")));
  h.declare(u("1-a"));
  CHECK(h.is_unit(u("a*(1-a)")));
  CHECK(h.is_unit(u("a-1")));
  CHECK(h.to_string() == "unit(1-a)");
}

TEST_CASE("evaluation in a ring") {
  const Ring f7 = make_ring("GF(7)");
  const Assignment asg{{"a", f7.from_int(3)}, {"b", f7.from_int(5)}};
  CHECK(evaluate(u("a*b"), f7, asg) == f7.one());
  CHECK(evaluate(u("1-a"), f7, asg) == f7.from_int(5));
  CHECK(evaluate(u("a/b^2"), f7, asg) == f7.mul(f7.from_int(3), f7.inv(f7.from_int(4))));
  CHECK_THROWS_AS(evaluate(u("c"), f7, asg), Error);
  Hypotheses h;
  h.declare(u("1-a"));
  CHECK(satisfies(h, f7, asg));
  CHECK_FALSE(satisfies(h, f7, {{"a", f7.one()}}));
}

TEST_CASE("normalize examples") {
  CHECK(normalize(t("[a] eta [b]")) == t("eta[a][b]"));
  CHECK(normalize(t("[1]")).is_zero());
  CHECK(normalize(t("2 eta[a] - 2 eta[a]")).is_zero());
  CHECK(normalize(t("[a][1][b] + eta")) == t("eta"));
}

TEST_CASE("normalize is idempotent and linear") {
  const std::vector<KmwTerm> terms{t("[a] eta [b] + 3 [c] eta"), t("eps * <a> * h"), t("[1] eta [a] - [a] eta"),
                                   t("(eta + [a])^3")};
  for (const auto& x : terms) {
    CHECK(normalize(normalize(x)) == normalize(x));
    for (const auto& y : terms) CHECK(normalize(x + y) == normalize(normalize(x) + normalize(y)));
  }
  const KmwTerm n = normalize(t("[a] eta [b] eta"));
  for (const auto& [w, c] : n.summands()) CHECK(w.eta_fronted());
}

TEST_CASE("abbreviations") {
  CHECK(t("<a>") == t("eta[a] + 1"));
  CHECK(t("eps") == t("-eta[-1] - 1"));
  CHECK(t("h") == t("eta[-1] + 2"));
  CHECK(t("2 eta^2[a][b] - [c] + 3").to_string() == "3 + 2 eta^2[a][b] - [c]");  // words in lexicographic order, eta first
}

TEST_CASE("degrees") {
  CHECK(t("eta[a][b]").degree() == 1);
  CHECK(t("eta").degree() == -1);
  CHECK(t("<a>").degree() == 0);
  CHECK_FALSE(t("[a] + 1").homogeneous());
  CHECK(KmwTerm{}.homogeneous());
}

TEST_CASE("axioms per mode") {
  const auto ids = [](Mode m) {
    std::vector<Axiom> out;
    for (const auto& s : axioms(m))
      if (!s.absorbed) out.push_back(s.id);
    return out;
  };
  CHECK(ids(Mode::Hopf) == std::vector<Axiom>{Axiom::R2, Axiom::R4});
  CHECK(ids(Mode::HopfSteinberg) == std::vector<Axiom>{Axiom::R1, Axiom::R2, Axiom::R4});
  CHECK(ids(Mode::Reduced) == std::vector<Axiom>{Axiom::R1, Axiom::R2, Axiom::R4, Axiom::R5});
  CHECK(axioms(Mode::Hopf).size() == 4);  // R3 and R6 are absorbed
  for (Mode m : {Mode::Hopf, Mode::HopfSteinberg, Mode::Reduced}) {
    CHECK(parse_mode(to_string(m)) == m);
    for (const auto& s : axioms(m)) {
      // every schema is homogeneous
      Binding b;
      for (const auto& v : s.variables) b[v] = UnitExpr::var(v);
      Hypotheses h;
      h.declare(u("1-a"));
      const auto sides = instantiate(s.id, b, h);
      const auto both = normalize(sides.lhs - sides.rhs);
      CHECK(both.homogeneous());
    }
  }
}

TEST_CASE("instantiate checks side conditions") {
  CHECK_THROWS_AS(instantiate(Axiom::R1, {{"a", u("a")}}, {}), Error);
  Hypotheses h;
  h.declare(u("1-a"));
  CHECK_NOTHROW(instantiate(Axiom::R1, {{"a", u("a")}}, h));
  CHECK_THROWS_AS(instantiate(Axiom::R2, {{"a", u("a")}}, h), Error);
}

TEST_CASE("parser errors carry positions") {
  try {
    parse_identity("<a> + [b = 1");
    FAIL("expected error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 10);
  }
  CHECK_THROWS_AS(parse_identity("a = 1"), ParseError);
  CHECK_THROWS_AS(parse_identity("[a] = 1"), ParseError);          // mixed degree
  CHECK_THROWS_AS(parse_identity("<1-a> = <1-a>"), ParseError);    // 1-a not declared
  CHECK_NOTHROW(parse_identity("<1-a> = <1-a> | unit(1-a)"));
  CHECK_THROWS_AS(parse_identity("<a> = <a> $"), ParseError);
  try {
    parse_identity_file("<a> = <a>\n# comment\n\n<a> = [a]\n");
    FAIL("expected error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  CHECK(parse_identity_file("<a> = <a>  # trailing\n\neta h = 0\n").size() == 2);
}

TEST_CASE("eval_in_ring examples") {
  const Ring f7 = make_ring("GF(7)");
  const Assignment asg{{"a", f7.from_int(3)}, {"b", f7.from_int(5)}};
  CHECK(eval_in_ring(t("<a><b>"), f7, asg) == GroupRingVector::one(f7));

  const Ring f5 = make_ring("GF(5)");
  CHECK(eval_in_ring(t("eps"), f5, {}) == GroupRingVector::basis(f5, f5.from_int(4)) * Integer(-1));

  const Ring f3 = make_ring("GF(3)");
  CHECK(eval_in_ring(t("h"), f3, {}) == testing::angle(f3, 1) + testing::angle(f3, 2));

  CHECK_THROWS_AS(eval_in_ring(t("[a]"), f7, asg), Error);
  CHECK_THROWS_AS(eval_in_ring(t("<c>"), f7, asg), Error);
}
