#include "mwk/kmwterm.hpp"

#include <algorithm>

namespace mwk {

int Word::eta_count() const {
  return static_cast<int>(std::count_if(letters.begin(), letters.end(), [](const Letter& l) { return l.is_eta; }));
}

std::vector<UnitExpr> Word::brackets() const {
  std::vector<UnitExpr> out;
  for (const auto& l : letters)
    if (!l.is_eta) out.push_back(l.unit);
  return out;
}

int Word::degree() const { return static_cast<int>(letters.size()) - 2 * eta_count(); }

bool Word::eta_fronted() const {
  bool seen_bracket = false;
  for (const auto& l : letters) {
    if (!l.is_eta) seen_bracket = true;
    else if (seen_bracket) return false;
  }
  return true;
}

Word Word::make(int etas, const std::vector<UnitExpr>& brackets) {
  Word w;
  w.letters.assign(static_cast<std::size_t>(etas), Letter::eta());
  for (const auto& u : brackets) w.letters.push_back(Letter::bracket(u));
  return w;
}

Word operator*(const Word& a, const Word& b) {
  Word w = a;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

// ---------------------------------------------------------------------------

KmwTerm KmwTerm::integer(const Integer& n) {
  KmwTerm t;
  t.add(Word{}, n);
  return t;
}

KmwTerm KmwTerm::word(Word w, const Integer& c) {
  KmwTerm t;
  t.add(w, c);
  return t;
}

KmwTerm KmwTerm::eta() { return word(Word{{Letter::eta()}}); }
KmwTerm KmwTerm::bracket(const UnitExpr& u) { return word(Word{{Letter::bracket(u)}}); }
KmwTerm KmwTerm::angle(const UnitExpr& u) { return eta() * bracket(u) + integer(1); }
KmwTerm KmwTerm::epsilon() { return -(eta() * bracket(UnitExpr::minus_one())) - integer(1); }
KmwTerm KmwTerm::hyperbolic() { return eta() * bracket(UnitExpr::minus_one()) + integer(2); }

Integer KmwTerm::coeff(const Word& w) const {
  auto it = summands_.find(w);
  return it == summands_.end() ? Integer(0) : it->second;
}

void KmwTerm::add(const Word& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = summands_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) summands_.erase(it);
  }
}

KmwTerm& KmwTerm::operator+=(const KmwTerm& o) {
  for (const auto& [w, c] : o.summands_) add(w, c);
  return *this;
}

KmwTerm& KmwTerm::operator-=(const KmwTerm& o) {
  for (const auto& [w, c] : o.summands_) add(w, -c);
  return *this;
}

KmwTerm& KmwTerm::operator*=(const Integer& c) {
  if (c == 0) summands_.clear();
  for (auto& [w, x] : summands_) x *= c;
  return *this;
}

KmwTerm operator*(const KmwTerm& a, const KmwTerm& b) {
  KmwTerm r;
  for (const auto& [wa, ca] : a.summands_)
    for (const auto& [wb, cb] : b.summands_) r.add(wa * wb, ca * cb);
  return r;
}

KmwTerm KmwTerm::pow(unsigned n) const {
  KmwTerm r = integer(1);
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

std::optional<int> KmwTerm::degree() const {
  std::optional<int> d;
  for (const auto& [w, c] : summands_) {
    if (d && *d != w.degree()) return std::nullopt;
    d = w.degree();
  }
  return d;
}

bool KmwTerm::homogeneous() const { return is_zero() || degree().has_value(); }

std::vector<UnitExpr> KmwTerm::units() const {
  std::vector<UnitExpr> out;
  for (const auto& [w, c] : summands_)
    for (const auto& u : w.brackets())
      if (std::find(out.begin(), out.end(), u) == out.end()) out.push_back(u);
  return out;
}

std::set<std::string> KmwTerm::variables() const {
  std::set<std::string> out;
  for (const auto& u : units()) out.merge(u.variables());
  return out;
}

namespace {

std::string word_string(const Word& w) {
  std::string s;
  std::size_t i = 0;
  while (i < w.letters.size()) {
    if (w.letters[i].is_eta) {
      std::size_t j = i;
      while (j < w.letters.size() && w.letters[j].is_eta) ++j;
      if (!s.empty()) s += ' ';
      s += "eta";
      if (j - i > 1) s += "^" + std::to_string(j - i);
      i = j;
    } else {
      s += "[" + w.letters[i].unit.bare_string() + "]";
      ++i;
    }
  }
  return s;
}

}  // namespace

std::string KmwTerm::to_string() const {
  if (summands_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : summands_) {
    const Integer a = abs(c);
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    first = false;
    const std::string ws = word_string(w);
    if (ws.empty())
      s += a.get_str();
    else if (a == 1)
      s += ws;
    else
      s += a.get_str() + " " + ws;
  }
  return s;
}

KmwTerm normalize(const KmwTerm& t) {
  KmwTerm out;
  for (const auto& [w, c] : t.summands()) {
    const auto brs = w.brackets();
    if (std::any_of(brs.begin(), brs.end(), [](const UnitExpr& u) { return u.is_one(); })) continue;
    out.add(Word::make(w.eta_count(), brs), c);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::Hopf:
      return "hopf";
    case Mode::HopfSteinberg:
      return "hopf-steinberg";
    case Mode::Reduced:
      return "reduced";
  }
  return {};
}

Mode parse_mode(const std::string& text) {
  if (text == "hopf") return Mode::Hopf;
  if (text == "hopf-steinberg") return Mode::HopfSteinberg;
  if (text == "reduced") return Mode::Reduced;
  throw Error("unknown mode '" + text + "' (expected hopf, hopf-steinberg or reduced)");
}

std::string to_string(Axiom a) { return "R" + std::to_string(static_cast<int>(a) + 1); }

Axiom parse_axiom(const std::string& text) {
  for (Axiom a : {Axiom::R1, Axiom::R2, Axiom::R3, Axiom::R4, Axiom::R5, Axiom::R6})
    if (to_string(a) == text) return a;
  throw Error("unknown axiom '" + text + "'");
}

bool axiom_in_mode(Axiom a, Mode mode) {
  switch (a) {
    case Axiom::R1:
      return mode != Mode::Hopf;
    case Axiom::R5:
      return mode == Mode::Reduced;
    default:
      return true;
  }
}

std::vector<AxiomSchema> axioms(Mode mode) {
  const std::vector<AxiomSchema> all{
      {Axiom::R1, "[a][1-a] = 0", {"a"}, "a and 1-a are units", false},
      {Axiom::R2, "[a*b] = [a] + [b] + eta[a][b]", {"a", "b"}, "a and b are units", false},
      {Axiom::R3, "eta[a] = [a]eta", {"a"}, "a is a unit", true},
      {Axiom::R4, "eta^2[-1] = -2 eta", {}, "", false},
      {Axiom::R5, "eta[a^2] = 0", {"a"}, "a is a unit", false},
      {Axiom::R6, "[1] = 0", {}, "", true},
  };
  std::vector<AxiomSchema> out;
  for (const auto& s : all)
    if (axiom_in_mode(s.id, mode)) out.push_back(s);
  return out;
}

namespace {

const UnitExpr& bound(const Binding& b, const std::string& var, Axiom a) {
  auto it = b.find(var);
  if (it == b.end()) throw Error(to_string(a) + " instance lacks a value for '" + var + "'");
  return it->second;
}

void require_unit(const UnitExpr& u, const Hypotheses& hyps, Axiom a) {
  if (auto missing = hyps.undeclared_atom(u))
    throw Error(to_string(a) + " instance needs " + *missing + " to be a declared unit");
}

}  // namespace

AxiomSides instantiate(Axiom a, const Binding& binding, const Hypotheses& hyps) {
  const auto br = [](const UnitExpr& u) { return KmwTerm::bracket(u); };
  switch (a) {
    case Axiom::R1: {
      const UnitExpr& x = bound(binding, "a", a);
      require_unit(x, hyps, a);
      const UnitExpr y = x.one_minus();
      require_unit(y, hyps, a);
      return {br(x) * br(y), KmwTerm{}};
    }
    case Axiom::R2: {
      const UnitExpr& x = bound(binding, "a", a);
      const UnitExpr& y = bound(binding, "b", a);
      require_unit(x, hyps, a);
      require_unit(y, hyps, a);
      return {br(x * y), br(x) + br(y) + KmwTerm::eta() * br(x) * br(y)};
    }
    case Axiom::R3: {
      const UnitExpr& x = bound(binding, "a", a);
      require_unit(x, hyps, a);
      return {KmwTerm::eta() * br(x), br(x) * KmwTerm::eta()};
    }
    case Axiom::R4:
      return {KmwTerm::eta() * KmwTerm::eta() * br(UnitExpr::minus_one()), KmwTerm::eta() * Integer(-2)};
    case Axiom::R5: {
      const UnitExpr& x = bound(binding, "a", a);
      require_unit(x, hyps, a);
      return {KmwTerm::eta() * br(x * x), KmwTerm{}};
    }
    case Axiom::R6:
      return {br(UnitExpr::one()), KmwTerm{}};
  }
  throw Error("invalid axiom");
}

KmwTerm embed(const Context& ctx, const KmwTerm& t) {
  if (ctx.eta < 0) throw Error("negative eta count in context");
  const KmwTerm pre = KmwTerm::word(Word::make(ctx.eta, ctx.prefix));
  const KmwTerm suf = KmwTerm::word(Word::make(0, ctx.suffix));
  return normalize(pre * t * suf);
}

void validate(const Identity& id) {
  if (!id.lhs.homogeneous()) throw Error("left-hand side is not homogeneous: " + id.lhs.to_string());
  if (!id.rhs.homogeneous()) throw Error("right-hand side is not homogeneous: " + id.rhs.to_string());
  const auto dl = id.lhs.degree(), dr = id.rhs.degree();
  if (dl && dr && *dl != *dr)
    throw Error("sides have different degrees (" + std::to_string(*dl) + " vs " + std::to_string(*dr) + ")");
  for (const KmwTerm* side : {&id.lhs, &id.rhs})
    for (const auto& u : side->units())
      if (auto missing = id.hypotheses.undeclared_atom(u))
        throw Error("[" + u.to_string() + "] needs " + *missing + " to be a unit; declare unit(" +
                    (missing->front() == '(' ? missing->substr(1, missing->size() - 2) : *missing) + ")");
}

GroupRingVector eval_in_ring(const KmwTerm& t, const Ring& ring, const Assignment& assignment) {
  GroupRingVector out(ring);
  const GroupRingVector one = GroupRingVector::one(ring);
  const KmwTerm n = normalize(t);
  for (const auto& [w, c] : n.summands()) {
    const auto brs = w.brackets();
    if (w.eta_count() != static_cast<int>(brs.size()))
      throw Error("term is not in the degree-0 span: " + KmwTerm::word(w).to_string());
    GroupRingVector v = one;
    for (const auto& u : brs) {
      const Elem x = evaluate(u, ring, assignment);
      if (!ring.is_unit(x)) throw Error(u.to_string() + " evaluates to the non-unit " + ring.format(x));
      v = mul(v, GroupRingVector::basis(ring, x) - one);
    }
    out += v * c;
  }
  return out;
}

}  // namespace mwk
