// Acceptance checks, one line per criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "helpers.hpp"
#include "mwk/gwring.hpp"
#include "mwk/qform.hpp"
#include "mwk/sumsq.hpp"

using namespace mwk;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (out.ok && s > budget_s) out.fail("over time budget");
  if (!out.ok) ++failures;
  std::printf("%s %d %-28s %8.3fs (budget %gs)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, s, budget_s,
              out.detail.empty() ? "" : "  ", out.detail.c_str());
  std::fflush(stdout);
}

std::string str(const std::vector<Integer>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  return os.str() + ']';
}

}  // namespace

int main() {
  criterion(1, "sum-of-squares exponents", 6.0, [](Outcome& o) {
    if (minus_one_exponent(make_ring("Z/4"))) o.fail("Z/4 has a finite exponent");
    for (const char* s : {"GF(3)", "GF(5)", "GF(7)", "GF(11)", "GF(13)", "GR(4,2)", "GR(4,3)"}) {
      const auto t0 = std::chrono::steady_clock::now();
      if (!minus_one_exponent(make_ring(s))) o.fail(std::string(s) + " has no finite exponent");
      if (std::chrono::steady_clock::now() - t0 > std::chrono::seconds(1)) o.fail(std::string(s) + " took over 1s");
    }
    if (minus_one_exponent(make_ring("GR(4,2)")) != 1) o.fail("GR(4,2) exponent is not 1");
  });

  criterion(2, "2^n(<a>-1) = 0", 30.0, [](Outcome& o) {
    for (const char* s : {"GF(3)", "GF(5)", "GF(7)", "GF(9)", "GF(11)", "GF(13)", "Z/9", "Z/25", "GR(4,2)"}) {
      const Ring r = make_ring(s);
      const auto p = present(r, PresentationKind::Reduced);
      const auto sq = unit_square_closure(r);
      int checked = 0;
      for (Elem a : r.units()) {
        const auto n = sq.exponent(a);
        if (!n) continue;
        ++checked;
        const auto ord = torsion_exponent(p, GroupRingVector::basis(r, a) - GroupRingVector::one(r));
        if (!ord || (Integer(1) << *n) % *ord != 0) o.fail(std::string(s) + ": order of <" + r.format(a) + ">-1");
      }
      if (checked == 0) o.fail(std::string(s) + ": no unit was checked");
    }
  });

  criterion(3, "form oracle equivalence", 60.0, [](Outcome& o) {
    for (const char* s : {"GF(3)", "GF(5)", "GF(7)", "GF(9)", "GF(11)", "GF(13)"}) {
      const auto v = cross_validate(make_ring(s));
      if (!v.lattices_equal || v.rank != 1 || v.torsion != std::vector<Integer>{2})
        o.fail(std::string(s) + ": equal=" + (v.lattices_equal ? "1" : "0") + " rank=" + std::to_string(v.rank) +
               " torsion=" + str(v.torsion));
    }
  });

  criterion(4, "presentation comparison", 10.0, [](Outcome& o) {
    for (const char* s : {"GF(4)", "GF(5)", "GF(7)", "GF(9)", "GF(11)", "GF(13)"})
      if (!compare_presentations(make_ring(s)).extra_relations_implied) o.fail(std::string(s) + " is false");
    for (const char* s : {"Z/16", "Z/4"}) {
      const auto a = compare_presentations(make_ring(s)), b = compare_presentations(make_ring(s));
      if (a.extra_relations_implied != b.extra_relations_implied) o.fail(std::string(s) + " is not stable");
      if (a.witness.has_value() != b.witness.has_value() || (a.witness && a.witness->to_string() != b.witness->to_string()))
        o.fail(std::string(s) + " witness is not stable");
    }
  });

  criterion(5, "eigenspace splitting", 5.0, [](Outcome& o) {
    for (const auto& s : testing::family()) {
      const Ring r = make_ring(s);
      if (!minus_one_exponent(r)) continue;
      const auto split = invert_two_split(present(r, PresentationKind::Reduced));
      if (split.minus.rank != 0 || !split.minus.odd_torsion.empty()) o.fail(s + " has a minus part");
    }
    const auto z4 = invert_two_split(present(make_ring("Z/4"), PresentationKind::Reduced));
    if (z4.plus.rank != 1 || z4.minus.rank != 1) o.fail("Z/4 split is not (1,1)");
  });

  criterion(6, "prover regression corpus", 80.0, [](Outcome& o) {
    for (const auto& [text, mode] : testing::corpus()) {
      const auto r = prove(parse_identity(text), mode);
      if (!r.proof) {
        o.fail("unknown: " + text);
        continue;
      }
      if (r.stats.seconds > 10.0) o.fail("over 10s: " + text);
      if (r.proof->steps.size() > 12) o.fail("deeper than 12: " + text);
      if (!check_proof(*r.proof).ok) o.fail("replay failed: " + text);
    }
  });

  criterion(7, "degree-0 numeric cross-check", 30.0, [](Outcome& o) {
    int checked = 0;
    for (const char* s : {"GF(5)", "GF(7)"}) {
      const Ring r = make_ring(s);
      const auto p = present(r, PresentationKind::Reduced);
      for (const auto& [text, mode] : testing::corpus()) {
        const Identity id = parse_identity(text);
        if (id.lhs.degree().value_or(0) != 0 || id.rhs.degree().value_or(0) != 0) continue;
        int seen = 0;
        testing::for_each_assignment(id, r, [&](const Assignment& asg) {
          ++seen;
          if (!class_equal(p, eval_in_ring(id.lhs, r, asg), eval_in_ring(id.rhs, r, asg)))
            o.fail(std::string(s) + ": " + text);
        });
        if (seen == 0) o.fail(std::string(s) + ": no admissible assignment for " + text);
        checked += seen;
      }
    }
    if (o.ok) o.detail = std::to_string(checked) + " assignments";
    if (checked == 0) o.fail("nothing checked");
  });

  criterion(8, "elementary factorization", 1.0, [](Outcome& o) {
    for (const auto& s : testing::family()) {
      const Ring r = make_ring(s);
      for (Elem a : r.units()) {
        const auto f = r.elementary_factorization(a);
        if (!f.verified || !(f.product == Mat2{{a, 0, 0, r.inv(a)}})) o.fail(s + ": " + r.format(a));
      }
    }
  });

  criterion(9, "multiplication well-defined", 30.0, [](Outcome& o) {
    for (const auto& s : testing::family()) {
      const Ring r = make_ring(s);
      for (auto kind : {PresentationKind::Hopf, PresentationKind::Reduced}) {
        const auto p = present(r, kind);
        for (const auto& g : p.lattice().basis()) {
          const auto gv = GroupRingVector::from_dense(r, g);
          for (Elem u : r.units())
            if (!p.lattice().contains(mul(GroupRingVector::basis(r, u), gv).dense()))
              o.fail(s + " " + to_string(kind));
        }
      }
    }
  });

  std::printf("%s: %d of 9 criteria failed\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures;
}
