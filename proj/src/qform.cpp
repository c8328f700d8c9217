#include "mwk/qform.hpp"

#include <set>

#include "mwk/gwring.hpp"

namespace mwk {

namespace {

// Addition and multiplication tables; the oracle avoids the ring's own
// polynomial code paths as far as it reasonably can.
struct Tables {
  std::size_t q = 0;
  std::vector<Elem> add, mul;

  explicit Tables(const Ring& f) : q(f.size()), add(q * q), mul(q * q) {
    for (Elem x = 0; x < q; ++x)
      for (Elem y = 0; y < q; ++y) {
        add[x * q + y] = f.add(x, y);
        mul[x * q + y] = f.mul(x, y);
      }
  }
  Elem plus(Elem x, Elem y) const { return add[x * q + y]; }
  Elem times(Elem x, Elem y) const { return mul[x * q + y]; }
  Elem minus(Elem x, Elem y) const {
    for (Elem z = 0; z < q; ++z)
      if (plus(y, z) == x) return z;
    return 0;
  }
};

// Calls visit(c, d) for every diagonal P^T diag(a, b) P with P invertible;
// stops early when visit returns true.
template <class Visit>
bool for_each_rank2_image(const Tables& t, Elem a, Elem b, Visit&& visit) {
  const Elem q = static_cast<Elem>(t.q);
  for (Elem p = 0; p < q; ++p)
    for (Elem r = 0; r < q; ++r)
      for (Elem s = 0; s < q; ++s)
        for (Elem u = 0; u < q; ++u) {
          // P = [[p, s], [r, u]]
          if (t.minus(t.times(p, u), t.times(s, r)) == 0) continue;
          if (t.plus(t.times(a, t.times(p, s)), t.times(b, t.times(r, u))) != 0) continue;
          const Elem c = t.plus(t.times(a, t.times(p, p)), t.times(b, t.times(r, r)));
          const Elem d = t.plus(t.times(a, t.times(s, s)), t.times(b, t.times(u, u)));
          if (visit(c, d)) return true;
        }
  return false;
}

IntVector form_row(const Ring& f, std::initializer_list<Elem> plus, std::initializer_list<Elem> minus) {
  IntVector v(f.units().size());
  for (Elem x : plus) v[static_cast<std::size_t>(f.unit_index(x))] += 1;
  for (Elem x : minus) v[static_cast<std::size_t>(f.unit_index(x))] -= 1;
  return v;
}

}  // namespace

void require_oracle_field(const Ring& field) {
  if (!field.is_field()) throw Error(field.name() + " is not a field; the form oracle needs a finite field");
  if (field.characteristic() == 2) throw Error(field.name() + " has characteristic 2; the form oracle needs odd order");
  if (field.size() > 13) throw Error(field.name() + " has more than 13 elements; the form oracle supports q <= 13");
}

bool isometric(const Ring& field, const DiagForm& f, const DiagForm& g) {
  require_oracle_field(field);
  if (f.rank() != g.rank()) throw Error("forms of different rank");
  if (f.rank() < 1 || f.rank() > 2) throw Error("the form oracle supports rank 1 and 2 only");
  for (const auto* form : {&f, &g})
    for (Elem x : form->entries)
      if (!field.is_unit(x)) throw Error("form entry " + field.format(x) + " is not a unit");
  const Tables t(field);
  if (f.rank() == 1) {
    for (Elem p = 1; p < t.q; ++p)
      if (t.times(f.entries[0], t.times(p, p)) == g.entries[0]) return true;
    return false;
  }
  return for_each_rank2_image(t, f.entries[0], f.entries[1],
                              [&](Elem c, Elem d) { return c == g.entries[0] && d == g.entries[1]; });
}

IntMatrix oracle_lattice(const Ring& field) {
  require_oracle_field(field);
  const Tables t(field);
  const auto& units = field.units();
  IntMatrix out(0, units.size());
  std::set<IntVector> seen;
  const auto push = [&](IntVector v) {
    bool zero = true;
    for (const auto& x : v) zero = zero && x == 0;
    if (!zero && seen.insert(v).second) out.append_row(v);
  };
  for (Elem a : units)
    for (Elem p = 1; p < t.q; ++p) push(form_row(field, {a}, {t.times(a, t.times(p, p))}));
  for (Elem a : units)
    for (Elem b : units) {
      std::set<std::pair<Elem, Elem>> images;
      for_each_rank2_image(t, a, b, [&](Elem c, Elem d) {
        images.emplace(c, d);
        return false;
      });
      for (const auto& [c, d] : images) push(form_row(field, {a, b}, {c, d}));
    }
  return out;
}

CrossValidation cross_validate(const Ring& field) {
  const IntMatrix oracle = oracle_lattice(field);
  const IntMatrix gw = build_relations(field, PresentationKind::Reduced);
  Lattice lo(oracle.cols()), lg(gw.cols());
  lo.insert_rows(oracle);
  lg.insert_rows(gw);

  CrossValidation r;
  r.oracle_rows = oracle.rows();
  r.gw_rows = gw.rows();
  r.oracle_in_gw = true;
  for (std::size_t i = 0; i < oracle.rows() && r.oracle_in_gw; ++i) r.oracle_in_gw = lg.contains(oracle.row(i));
  r.gw_in_oracle = true;
  for (std::size_t i = 0; i < gw.rows() && r.gw_in_oracle; ++i) r.gw_in_oracle = lo.contains(gw.row(i));
  r.lattices_equal = r.oracle_in_gw && r.gw_in_oracle;

  const GwPresentedRing p(field, PresentationKind::Reduced);
  r.rank = p.rank();
  r.torsion = p.torsion();
  return r;
}

}  // namespace mwk
