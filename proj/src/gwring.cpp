#include "mwk/gwring.hpp"

#include <set>

namespace mwk {

std::string to_string(PresentationKind kind) { return kind == PresentationKind::Hopf ? "hopf" : "reduced"; }

PresentationKind parse_presentation_kind(const std::string& text) {
  if (text == "hopf") return PresentationKind::Hopf;
  if (text == "reduced") return PresentationKind::Reduced;
  throw Error("unknown presentation kind '" + text + "' (expected hopf or reduced)");
}

// ---------------------------------------------------------------------------
// GroupRingVector

GroupRingVector GroupRingVector::basis(const Ring& ring, Elem unit) {
  GroupRingVector v(ring);
  v.add_term(unit, 1);
  return v;
}

Integer GroupRingVector::coeff(Elem unit) const {
  const int i = ring_.unit_index(unit);
  if (i < 0) return 0;
  auto it = coeffs_.find(static_cast<std::size_t>(i));
  return it == coeffs_.end() ? Integer(0) : it->second;
}

void GroupRingVector::add_term(Elem unit, const Integer& c) {
  const int i = ring_.unit_index(unit);
  if (i < 0) throw Error(ring_.format(unit) + " is not a unit of " + ring_.name());
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(static_cast<std::size_t>(i), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

IntVector GroupRingVector::dense() const {
  IntVector v(ring_.units().size());
  for (const auto& [i, c] : coeffs_) v[i] = c;
  return v;
}

GroupRingVector GroupRingVector::from_dense(const Ring& ring, std::span<const Integer> v) {
  if (v.size() != ring.units().size()) throw Error("dense vector length does not match the unit group");
  GroupRingVector out(ring);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.coeffs_.emplace(i, v[i]);
  return out;
}

void GroupRingVector::check_same(const GroupRingVector& o) const {
  if (!(ring_ == o.ring_)) throw Error("group ring vectors over different rings: " + ring_.name() + " vs " + o.ring_.name());
}

GroupRingVector& GroupRingVector::operator+=(const GroupRingVector& o) {
  check_same(o);
  for (const auto& [i, c] : o.coeffs_) add_term(ring_.units()[i], c);
  return *this;
}

GroupRingVector& GroupRingVector::operator-=(const GroupRingVector& o) {
  check_same(o);
  for (const auto& [i, c] : o.coeffs_) add_term(ring_.units()[i], -c);
  return *this;
}

GroupRingVector& GroupRingVector::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [i, x] : coeffs_) x *= c;
  return *this;
}

bool operator==(const GroupRingVector& a, const GroupRingVector& b) { return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_; }

std::string GroupRingVector::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (const auto& [i, c] : coeffs_) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const Integer a = abs(c);
    if (a != 1) s += a.get_str();
    s += "<" + ring_.format(ring_.units()[i]) + ">";
  }
  return s;
}

GroupRingVector mul(const GroupRingVector& x, const GroupRingVector& y) {
  if (!(x.ring() == y.ring())) throw Error("ring mismatch in group ring multiplication");
  const Ring& r = x.ring();
  GroupRingVector out(r);
  for (const auto& [i, a] : x.coeffs())
    for (const auto& [j, b] : y.coeffs()) out.add_term(r.mul(r.units()[i], r.units()[j]), a * b);
  return out;
}

Integer augmentation(const GroupRingVector& x) {
  Integer s = 0;
  for (const auto& [i, c] : x.coeffs()) s += c;
  return s;
}

// ---------------------------------------------------------------------------
// relations

namespace {

class RowCollector {
 public:
  explicit RowCollector(const Ring& ring) : ring_(ring), n_(ring.units().size()), rows_(0, n_) {}

  // sum of sign * <unit>
  void add(std::initializer_list<std::pair<int, Elem>> terms) {
    std::vector<long> row(n_, 0);
    for (const auto& [sign, u] : terms) row[static_cast<std::size_t>(ring_.unit_index(u))] += sign;
    if (std::all_of(row.begin(), row.end(), [](long c) { return c == 0; })) return;
    if (!seen_.insert(row).second) return;
    IntVector v(row.begin(), row.end());
    rows_.append_row(v);
  }

  IntMatrix take() { return std::move(rows_); }

 private:
  const Ring& ring_;
  std::size_t n_;
  IntMatrix rows_;
  std::set<std::vector<long>> seen_;
};

void square_class_rows(const Ring& r, RowCollector& rows) {
  for (Elem a : r.units())
    for (Elem b : r.units()) rows.add({{1, r.mul(a, r.mul(b, b))}, {-1, a}});
}

}  // namespace

IntMatrix build_relations(const Ring& r, PresentationKind kind) {
  RowCollector rows(r);
  const Elem one = r.one(), minus_one = r.neg(one);
  if (kind == PresentationKind::Reduced) square_class_rows(r, rows);
  for (Elem a : r.units()) rows.add({{1, a}, {1, r.neg(a)}, {-1, one}, {-1, minus_one}});
  const auto& units = r.units();
  for (std::size_t i = 0; i < units.size(); ++i)
    for (std::size_t j = i; j < units.size(); ++j) {
      const Elem a = units[i], b = units[j];
      const Elem s = r.add(a, b);
      if (!r.is_unit(s)) continue;
      rows.add({{1, a}, {1, b}, {-1, s}, {-1, r.mul(s, r.mul(a, b))}});
    }
  return rows.take();
}

namespace {

IntVector scale_by_unit(const Ring& r, Elem u, const IntVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out[static_cast<std::size_t>(r.unit_index(r.mul(u, r.units()[i])))] = v[i];
  return out;
}

// Closes the lattice under multiplication by units; returns false if that added anything.
bool close_under_units(const Ring& r, Lattice& l) {
  bool already_closed = true;
  bool grew = true;
  while (grew) {
    grew = false;
    const auto basis = l.basis();
    for (const auto& g : basis)
      for (Elem u : r.units())
        if (l.insert(scale_by_unit(r, u, g))) grew = true;
    if (grew) already_closed = false;
  }
  return already_closed;
}

}  // namespace

GwPresentedRing::GwPresentedRing(Ring ring, PresentationKind kind)
    : ring_(std::move(ring)), kind_(kind), lattice_(ring_.units().size()) {
  relations_ = build_relations(ring_, kind_);
  lattice_.insert_rows(relations_);
  relations_form_ideal_ = close_under_units(ring_, lattice_);
  pres_ = quotient(lattice_);
}

GwPresentedRing present(const Ring& ring, PresentationKind kind) { return GwPresentedRing(ring, kind); }

bool class_equal(const GwPresentedRing& p, const GroupRingVector& x, const GroupRingVector& y) {
  if (!(x.ring() == p.ring()) || !(y.ring() == p.ring())) throw Error("vector over a different ring");
  return p.lattice().contains((x - y).dense());
}

std::optional<Integer> torsion_exponent(const GwPresentedRing& p, const GroupRingVector& x) {
  if (!(x.ring() == p.ring())) throw Error("vector over a different ring");
  return element_order(p.presentation(), x.dense());
}

namespace {

EigenPiece localized_image(const GwPresentedRing& p, int sign) {
  const Ring& r = p.ring();
  std::vector<IntVector> gens;
  for (Elem u : r.units()) {
    GroupRingVector g = GroupRingVector::basis(r, u);
    g.add_term(r.neg(u), sign);
    gens.push_back(g.dense());
  }
  const auto inv = subquotient_invariants(p.lattice(), gens);
  EigenPiece piece;
  piece.rank = inv.rank;
  for (Integer d : inv.torsion) {
    while (d % 2 == 0) d /= 2;
    if (d != 1) piece.odd_torsion.push_back(d);
  }
  return piece;
}

}  // namespace

TwoSplit invert_two_split(const GwPresentedRing& p) { return {localized_image(p, 1), localized_image(p, -1)}; }

PresentationComparison compare_presentations(const Ring& ring) {
  const auto hopf = present(ring, PresentationKind::Hopf);
  RowCollector rows(ring);
  square_class_rows(ring, rows);
  const IntMatrix extra = rows.take();
  PresentationComparison out;
  for (std::size_t i = 0; i < extra.rows(); ++i) {
    if (!hopf.lattice().contains(extra.row(i))) {
      out.witness = GroupRingVector::from_dense(ring, extra.row(i));
      return out;
    }
  }
  out.extra_relations_implied = true;
  return out;
}

}  // namespace mwk
