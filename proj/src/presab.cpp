#include "mwk/presab.hpp"

#include <algorithm>
#include <utility>

#include "mwk/error.hpp"

namespace mwk {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::size_t cols, const std::vector<IntVector>& rows) {
  IntMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void IntMatrix::append_row(std::span<const Integer> row) {
  if (row.size() != cols_) throw Error("row length " + std::to_string(row.size()) + " != " + std::to_string(cols_));
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix dimension mismatch");
  IntMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

struct SmithWork {
  IntMatrix a, u, v, v_inv;
};

// floor division rounded toward the nearest integer keeps remainders small
Integer nearest_quotient(const Integer& x, const Integer& d) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  Integer r = x - q * d;
  if (2 * abs(r) > abs(d)) ++q;  // r has the sign of d
  return q;
}

void row_addmul(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += q * m(src, c);
}

void col_addmul(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) += q * m(r, src);
}

SmithWork smith_work(const IntMatrix& m) {
  SmithWork w{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), IntMatrix::identity(m.cols())};
  auto& a = w.a;
  const std::size_t rows = a.rows(), cols = a.cols();

  // column ops on a are mirrored on v; v_inv receives the inverse row op
  const auto swap_cols = [&](std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    w.v.swap_cols(x, y);
    w.v_inv.swap_rows(x, y);
  };
  const auto swap_rows = [&](std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    w.u.swap_rows(x, y);
  };
  // col_dst += q * col_src
  const auto col_op = [&](std::size_t dst, std::size_t src, const Integer& q) {
    col_addmul(a, dst, src, q);
    col_addmul(w.v, dst, src, q);
    row_addmul(w.v_inv, src, dst, -q);
  };
  const auto row_op = [&](std::size_t dst, std::size_t src, const Integer& q) {
    row_addmul(a, dst, src, q);
    row_addmul(w.u, dst, src, q);
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a(i, j) != 0 && (pr == rows || abs(a(i, j)) < abs(a(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    swap_rows(t, pr);
    swap_cols(t, pc);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        row_op(i, t, -nearest_quotient(a(i, t), a(t, t)));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        col_op(j, t, -nearest_quotient(a(t, j), a(t, t)));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        std::size_t best_r = t, best_c = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < abs(a(best_r, best_c))) {
            best_r = i;
            best_c = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < abs(a(best_r, best_c))) {
            best_r = t;
            best_c = j;
          }
        swap_rows(t, best_r);
        swap_cols(t, best_c);
        continue;
      }
      // divisibility: pull an offending row into the pivot row
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            row_op(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      for (std::size_t c = 0; c < cols; ++c) a(t, c) = -a(t, c);
      for (std::size_t c = 0; c < rows; ++c) w.u(t, c) = -w.u(t, c);
    }
  }
  return w;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  auto w = smith_work(m);
  return {std::move(w.u), std::move(w.a), std::move(w.v)};
}

// ---------------------------------------------------------------------------
// Lattice

namespace {

std::size_t leading(const IntVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

void axpy(IntVector& y, const Integer& a, const IntVector& x) {
  if (a == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (x[i] != 0) y[i] += a * x[i];
}

}  // namespace

void Lattice::reduce(IntVector& v, IntVector* coeffs) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t c = pivots_[i];
    if (v[c] == 0) continue;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v[c].get_mpz_t(), basis_[i][c].get_mpz_t());
    axpy(v, -q, basis_[i]);
    if (coeffs) (*coeffs)[i] = q;
  }
}

bool Lattice::insert(IntVector v) {
  if (v.size() != n_) throw Error("vector length " + std::to_string(v.size()) + " != " + std::to_string(n_));
  bool grew = false;
  while (true) {
    const std::size_t c = leading(v);
    if (c == n_) break;
    const auto it = std::lower_bound(pivots_.begin(), pivots_.end(), c);
    if (it == pivots_.end() || *it != c) {
      if (v[c] < 0)
        for (auto& x : v) x = -x;
      const auto pos = it - pivots_.begin();
      basis_.insert(basis_.begin() + pos, std::move(v));
      pivots_.insert(it, c);
      grew = true;
      break;
    }
    const auto i = static_cast<std::size_t>(it - pivots_.begin());
    const Integer& p = basis_[i][c];
    if (v[c] % p == 0) {
      axpy(v, -Integer(v[c] / p), basis_[i]);
      continue;
    }
    // replace the basis row by a gcd combination and eliminate v at c
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t(), v[c].get_mpz_t());
    const Integer vp = v[c] / g, pp = p / g;
    IntVector row(n_);
    IntVector rest(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      row[j] = s * basis_[i][j] + t * v[j];
      rest[j] = pp * v[j] - vp * basis_[i][j];
    }
    basis_[i] = std::move(row);
    v = std::move(rest);
    grew = true;
  }
  if (grew) {
    // restore Hermite form: reduce later rows first, then entries above pivots
    for (std::size_t i = basis_.size(); i-- > 0;) {
      for (std::size_t j = i + 1; j < basis_.size(); ++j) {
        const std::size_t c = pivots_[j];
        if (basis_[i][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), basis_[i][c].get_mpz_t(), basis_[j][c].get_mpz_t());
        axpy(basis_[i], -q, basis_[j]);
      }
    }
  }
  return grew;
}

void Lattice::insert_rows(const IntMatrix& rows) {
  for (std::size_t r = 0; r < rows.rows(); ++r) insert(rows.row(r));
}

bool Lattice::contains(IntVector v) const {
  if (v.size() != n_) throw Error("vector length mismatch");
  reduce(v, nullptr);
  return leading(v) == n_;
}

std::optional<IntVector> Lattice::coordinates(IntVector v) const {
  if (v.size() != n_) throw Error("vector length mismatch");
  IntVector x(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t c = pivots_[i];
    if (v[c] == 0) continue;
    if (v[c] % basis_[i][c] != 0) return std::nullopt;
    x[i] = v[c] / basis_[i][c];
    axpy(v, -x[i], basis_[i]);
  }
  if (leading(v) != n_) return std::nullopt;
  return x;
}

// ---------------------------------------------------------------------------
// Presentations

IntVector SnfPresentation::canonical(std::span<const Integer> v) const {
  if (v.size() != ambient) throw Error("vector length mismatch");
  IntVector c(canonical_dim());
  for (std::size_t j = 0; j < c.size(); ++j) {
    for (std::size_t i = 0; i < ambient; ++i)
      if (v[i] != 0) c[j] += v[i] * to_canonical(i, j);
    if (j < torsion.size()) mpz_fdiv_r(c[j].get_mpz_t(), c[j].get_mpz_t(), torsion[j].get_mpz_t());
  }
  return c;
}

IntVector SnfPresentation::lift(std::span<const Integer> c) const {
  if (c.size() != canonical_dim()) throw Error("canonical vector length mismatch");
  IntVector v(ambient);
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c[j] != 0)
      for (std::size_t i = 0; i < ambient; ++i) v[i] += c[j] * from_canonical(j, i);
  return v;
}

bool SnfPresentation::is_zero(std::span<const Integer> v) const {
  const auto c = canonical(v);
  return std::all_of(c.begin(), c.end(), [](const Integer& x) { return x == 0; });
}

SnfPresentation quotient(const Lattice& lattice) {
  const std::size_t n = lattice.ambient();
  const IntMatrix b = lattice.basis_matrix();
  auto w = smith_work(b);
  const std::size_t r = lattice.rank();

  std::vector<std::size_t> keep;
  SnfPresentation pres;
  pres.ambient = n;
  for (std::size_t i = 0; i < r; ++i) {
    if (w.a(i, i) == 0) throw Error("lattice basis is not of full row rank");
    if (w.a(i, i) != 1) {
      keep.push_back(i);
      pres.torsion.push_back(w.a(i, i));
    }
  }
  for (std::size_t i = r; i < n; ++i) keep.push_back(i);
  pres.rank = n - r;
  pres.to_canonical = IntMatrix(n, keep.size());
  pres.from_canonical = IntMatrix(keep.size(), n);
  for (std::size_t j = 0; j < keep.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) {
      pres.to_canonical(i, j) = w.v(i, keep[j]);
      pres.from_canonical(j, i) = w.v_inv(keep[j], i);
    }
  return pres;
}

SnfPresentation quotient(std::size_t ambient_rank, const IntMatrix& relations) {
  if (relations.rows() > 0 && relations.cols() != ambient_rank)
    throw Error("relation matrix has " + std::to_string(relations.cols()) + " columns, expected " +
                std::to_string(ambient_rank));
  Lattice l(ambient_rank);
  l.insert_rows(relations);
  return quotient(l);
}

bool contains(const IntMatrix& relations, std::span<const Integer> v) {
  if (relations.rows() > 0 && relations.cols() != v.size()) throw Error("dimension mismatch in contains");
  Lattice l(v.size());
  l.insert_rows(relations);
  return l.contains(IntVector(v.begin(), v.end()));
}

std::optional<Integer> element_order(const SnfPresentation& pres, std::span<const Integer> v) {
  const auto c = pres.canonical(v);
  for (std::size_t j = pres.torsion.size(); j < c.size(); ++j)
    if (c[j] != 0) return std::nullopt;
  Integer order = 1;
  for (std::size_t j = 0; j < pres.torsion.size(); ++j) {
    const Integer& d = pres.torsion[j];
    Integer g = gcd(c[j], d);
    Integer o = d / g;
    order = lcm(order, o);
  }
  return order;
}

GroupInvariants subquotient_invariants(const Lattice& relations, const std::vector<IntVector>& generators) {
  Lattice h = relations;
  for (const auto& g : generators) h.insert(g);
  IntMatrix x(0, h.rank());
  for (const auto& row : relations.basis()) {
    auto c = h.coordinates(row);
    if (!c) throw Error("relation lattice not contained in subgroup");
    x.append_row(*c);
  }
  const auto q = quotient(h.rank(), x);
  return {q.rank, q.torsion};
}

std::string to_string(const IntVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s + "]";
}

}  // namespace mwk
