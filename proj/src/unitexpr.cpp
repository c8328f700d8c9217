#include "mwk/unitexpr.hpp"

#include <algorithm>
#include <cstdlib>

namespace mwk {

namespace {

std::string monomial_string(int sign, const Exponents& exps) {
  std::string num, den;
  for (const auto& [atom, e] : exps) {
    const std::string base = atom.key + (std::abs(e) != 1 ? "^" + std::to_string(std::abs(e)) : "");
    if (e > 0) {
      if (!num.empty()) num += '*';
      num += base;
    } else {
      den += '/' + base;
    }
  }
  if (num.empty()) num = "1";
  std::string s = num + den;
  return sign < 0 ? "-" + s : s;
}

std::string poly_string(const Poly& p) {
  std::string s;
  bool first = true;
  for (const auto& [m, c] : p) {
    const Integer a = abs(c);
    if (c < 0)
      s += '-';
    else if (!first)
      s += '+';
    first = false;
    if (m.empty()) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + "*";
      s += monomial_string(1, m);
    }
  }
  return s;
}

void add_exponent(Exponents& exps, const Atom& atom, int e) {
  if (e == 0) return;
  auto [it, inserted] = exps.try_emplace(atom, e);
  if (!inserted) {
    it->second += e;
    if (it->second == 0) exps.erase(it);
  }
}

Exponents exps_add(const Exponents& a, const Exponents& b) {
  Exponents r = a;
  for (const auto& [atom, e] : b) add_exponent(r, atom, e);
  return r;
}

void poly_add_term(Poly& p, const Exponents& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) poly_add_term(r, exps_add(ma, mb), ca * cb);
  return r;
}

// Expands positive powers of sum and prime atoms into an honest polynomial.
Poly expand(int sign, const Exponents& exps) {
  Poly p{{Exponents{}, Integer(sign)}};
  for (const auto& [atom, e] : exps) {
    if (e > 0 && atom.kind == Atom::Kind::Sum) {
      for (int i = 0; i < e; ++i) p = poly_mul(p, *atom.sum);
    } else if (e > 0 && atom.kind == Atom::Kind::Prime) {
      Integer f = 1;
      for (int i = 0; i < e; ++i) f *= atom.prime;
      for (auto& [m, c] : p) c *= f;
    } else {
      Poly q;
      for (const auto& [m, c] : p) {
        Exponents m2 = m;
        add_exponent(m2, atom, e);
        q.emplace(std::move(m2), c);
      }
      p = std::move(q);
    }
  }
  return p;
}

}  // namespace

Atom Atom::var(const std::string& name) {
  Atom a;
  a.kind = Kind::Var;
  a.key = name;
  return a;
}

Atom Atom::prime_atom(std::int64_t p) {
  Atom a;
  a.kind = Kind::Prime;
  a.key = std::to_string(p);
  a.prime = p;
  return a;
}

Atom Atom::sum_atom(Poly primitive) {
  Atom a;
  a.kind = Kind::Sum;
  a.key = "(" + poly_string(primitive) + ")";
  a.sum = std::make_shared<const Poly>(std::move(primitive));
  return a;
}

UnitExpr::UnitExpr(int sign, Exponents exps) : sign_(sign), exps_(std::move(exps)) { rebuild_key(); }

void UnitExpr::rebuild_key() { key_ = monomial_string(sign_, exps_); }

UnitExpr UnitExpr::minus_one() { return UnitExpr(-1, {}); }

UnitExpr UnitExpr::var(const std::string& name) { return UnitExpr(1, {{Atom::var(name), 1}}); }

UnitExpr UnitExpr::atom_power(const Atom& atom, int e) {
  if (e == 0) return one();
  return UnitExpr(1, {{atom, e}});
}

UnitExpr UnitExpr::integer(const Integer& n) {
  if (n == 0) throw Error("0 is not a unit");
  Integer m = abs(n);
  Exponents exps;
  for (std::int64_t p = 2; m > 1; ++p) {
    if (Integer(p) * p > m) {
      add_exponent(exps, Atom::prime_atom(m.get_si()), 1);
      break;
    }
    while (m % p == 0) {
      add_exponent(exps, Atom::prime_atom(p), 1);
      m /= p;
    }
  }
  return UnitExpr(n < 0 ? -1 : 1, std::move(exps));
}

UnitExpr UnitExpr::sum(const std::vector<std::pair<Integer, UnitExpr>>& terms) {
  Poly acc;
  for (const auto& [c, u] : terms)
    for (const auto& [m, d] : expand(u.sign_, u.exps_)) poly_add_term(acc, m, c * d);
  if (acc.empty()) throw Error("sum evaluates to 0, which is not a unit");

  // monomial content: minimum exponent of every atom over all terms
  Exponents content;
  {
    std::set<Atom> atoms;
    for (const auto& [m, c] : acc)
      for (const auto& [a, e] : m) atoms.insert(a);
    for (const auto& a : atoms) {
      int lo = 0;
      bool first = true;
      for (const auto& [m, c] : acc) {
        auto it = m.find(a);
        const int e = it == m.end() ? 0 : it->second;
        lo = first ? e : std::min(lo, e);
        first = false;
      }
      if (lo != 0) content.emplace(a, lo);
    }
  }
  Integer g = 0;
  for (const auto& [m, c] : acc) g = gcd(g, c);
  const int sign = sgn(acc.begin()->second) < 0 ? -1 : 1;

  Poly prim;
  for (const auto& [m, c] : acc) {
    Exponents shifted = m;
    for (const auto& [a, e] : content) add_exponent(shifted, a, -e);
    prim.emplace(std::move(shifted), c / (g * sign));
  }
  UnitExpr out = UnitExpr(sign, content) * integer(g);
  if (prim.size() == 1) return out;
  return out * UnitExpr(1, {{Atom::sum_atom(std::move(prim)), 1}});
}

UnitExpr UnitExpr::operator*(const UnitExpr& o) const { return UnitExpr(sign_ * o.sign_, exps_add(exps_, o.exps_)); }

UnitExpr UnitExpr::inverse() const {
  Exponents e;
  for (const auto& [a, x] : exps_) e.emplace(a, -x);
  return UnitExpr(sign_, std::move(e));
}

UnitExpr UnitExpr::operator/(const UnitExpr& o) const { return *this * o.inverse(); }
UnitExpr UnitExpr::operator-() const { return UnitExpr(-sign_, exps_); }

UnitExpr UnitExpr::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  Exponents e;
  for (const auto& [a, x] : exps_)
    if (n != 0) e.emplace(a, x * n);
  return UnitExpr((n % 2 != 0) ? sign_ : 1, std::move(e));
}

UnitExpr UnitExpr::one_minus() const { return sum({{1, one()}, {-1, *this}}); }

std::optional<UnitExpr> UnitExpr::square_root() const {
  if (sign_ != 1) return std::nullopt;
  Exponents half;
  for (const auto& [a, e] : exps_) {
    if (e % 2 != 0) return std::nullopt;
    half.emplace(a, e / 2);
  }
  return UnitExpr(1, std::move(half));
}

std::string UnitExpr::bare_string() const {
  if (sign_ == 1 && exps_.size() == 1 && exps_.begin()->first.kind == Atom::Kind::Sum && exps_.begin()->second == 1)
    return key_.substr(1, key_.size() - 2);
  return key_;
}

int UnitExpr::size() const {
  int s = sign_ < 0 ? 1 : 0;
  for (const auto& [a, e] : exps_) s += std::abs(e);
  return s;
}

namespace {

void collect_vars(const Exponents& exps, std::set<std::string>& out) {
  for (const auto& [a, e] : exps) {
    if (a.kind == Atom::Kind::Var) out.insert(a.key);
    if (a.kind == Atom::Kind::Sum)
      for (const auto& [m, c] : *a.sum) collect_vars(m, out);
  }
}

void collect_unit_atoms(const Exponents& exps, bool top, std::vector<Atom>& out) {
  for (const auto& [a, e] : exps) {
    if (a.kind == Atom::Kind::Var) continue;
    // inside a sum only inverted atoms must be units
    if (top || e < 0) out.push_back(a);
    if (a.kind == Atom::Kind::Sum)
      for (const auto& [m, c] : *a.sum) collect_unit_atoms(m, false, out);
  }
}

}  // namespace

std::set<std::string> UnitExpr::variables() const {
  std::set<std::string> out;
  collect_vars(exps_, out);
  return out;
}

std::vector<Atom> UnitExpr::atoms_needing_units() const {
  std::vector<Atom> out;
  collect_unit_atoms(exps_, true, out);
  return out;
}

// ---------------------------------------------------------------------------

void Hypotheses::declare(const UnitExpr& u) {
  if (std::find(declared_.begin(), declared_.end(), u) == declared_.end()) declared_.push_back(u);
  for (const auto& [a, e] : u.exponents())
    if (a.kind != Atom::Kind::Var) atoms_.insert(a.key);
}

std::optional<std::string> Hypotheses::undeclared_atom(const UnitExpr& u) const {
  for (const auto& a : u.atoms_needing_units())
    if (!atoms_.contains(a.key)) return a.key;
  return std::nullopt;
}

bool Hypotheses::is_unit(const UnitExpr& u) const { return !undeclared_atom(u).has_value(); }

std::string Hypotheses::to_string() const {
  std::string s;
  for (const auto& u : declared_) {
    if (!s.empty()) s += ",";
    s += "unit(" + u.bare_string() + ")";
  }
  return s;
}

// ---------------------------------------------------------------------------

namespace {

Elem eval_exps(int sign, const Exponents& exps, const Ring& ring, const Assignment& asg);

Elem eval_poly(const Poly& p, const Ring& ring, const Assignment& asg) {
  const Integer ch = ring.characteristic();
  Elem acc = ring.zero();
  for (const auto& [m, c] : p) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), ch.get_mpz_t());
    acc = ring.add(acc, ring.mul(ring.from_int(r.get_si()), eval_exps(1, m, ring, asg)));
  }
  return acc;
}

Elem eval_atom(const Atom& a, const Ring& ring, const Assignment& asg) {
  switch (a.kind) {
    case Atom::Kind::Var: {
      auto it = asg.find(a.key);
      if (it == asg.end()) throw Error("assignment incomplete: no value for variable " + a.key);
      return it->second;
    }
    case Atom::Kind::Prime:
      return ring.from_int(a.prime);
    case Atom::Kind::Sum:
      return eval_poly(*a.sum, ring, asg);
  }
  return ring.zero();
}

Elem eval_exps(int sign, const Exponents& exps, const Ring& ring, const Assignment& asg) {
  Elem r = sign < 0 ? ring.neg(ring.one()) : ring.one();
  for (const auto& [a, e] : exps) {
    Elem v = eval_atom(a, ring, asg);
    if (e < 0) {
      auto vi = ring.inverse(v);
      if (!vi) throw Error(a.key + " evaluates to the non-unit " + ring.format(v));
      v = *vi;
    }
    r = ring.mul(r, ring.pow(v, static_cast<std::uint64_t>(std::abs(e))));
  }
  return r;
}

}  // namespace

Elem evaluate(const UnitExpr& u, const Ring& ring, const Assignment& assignment) {
  return eval_exps(u.sign(), u.exponents(), ring, assignment);
}

bool satisfies(const Hypotheses& hyps, const Ring& ring, const Assignment& assignment) {
  try {
    for (const auto& u : hyps.declared())
      for (const auto& a : u.atoms_needing_units())
        if (!ring.is_unit(eval_atom(a, ring, assignment))) return false;
  } catch (const Error&) {
    return false;
  }
  return true;
}

}  // namespace mwk
