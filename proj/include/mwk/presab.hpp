#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mwk {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

// Dense exact integer matrix, row major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::size_t cols, const std::vector<IntVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  void append_row(std::span<const Integer> row);
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  bool is_diagonal() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Determinant by fraction-free elimination (Bareiss).
Integer determinant(const IntMatrix& m);

struct SmithForm {
  IntMatrix u, d, v;  // u * m * v == d
};

// Unimodular U, V with U*M*V = D diagonal, nonnegative, d1 | d2 | ... and
// zeros last. Pivots are chosen by minimal absolute value.
SmithForm smith_normal_form(const IntMatrix& m);

// Subgroup of Z^n kept as a row-echelon basis in Hermite normal form
// (positive pivots, entries above each pivot reduced into [0, pivot)).
class Lattice {
 public:
  explicit Lattice(std::size_t ambient) : n_(ambient) {}

  std::size_t ambient() const { return n_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntVector>& basis() const { return basis_; }
  IntMatrix basis_matrix() const { return IntMatrix::from_rows(n_, basis_); }

  // Adds v to the generating set. Returns true when the lattice grew.
  bool insert(IntVector v);
  void insert_rows(const IntMatrix& rows);
  bool contains(IntVector v) const;
  // Coefficients of v in basis(); nullopt when v is not in the lattice.
  std::optional<IntVector> coordinates(IntVector v) const;

 private:
  // reduces v in place against the basis, records coefficients if asked
  void reduce(IntVector& v, IntVector* coeffs) const;

  std::size_t n_;
  std::vector<IntVector> basis_;
  std::vector<std::size_t> pivots_;
};

// Z^n / L in canonical coordinates: first the torsion factors, then the free part.
struct SnfPresentation {
  std::size_t ambient = 0;
  std::size_t rank = 0;
  std::vector<Integer> torsion;  // invariant factors >= 2, d1 | d2 | ...
  IntMatrix to_canonical;        // ambient x (|torsion| + rank); row vector times this
  IntMatrix from_canonical;      // (|torsion| + rank) x ambient section

  std::size_t canonical_dim() const { return torsion.size() + rank; }
  // Canonical coordinates of the class of v, torsion entries reduced into [0, d).
  IntVector canonical(std::span<const Integer> v) const;
  // Ambient representative of a canonical vector.
  IntVector lift(std::span<const Integer> c) const;
  bool is_zero(std::span<const Integer> v) const;
};

SnfPresentation quotient(std::size_t ambient_rank, const IntMatrix& relations);
SnfPresentation quotient(const Lattice& lattice);

bool contains(const IntMatrix& relations, std::span<const Integer> v);

// Additive order of the class of v; nullopt means infinite.
std::optional<Integer> element_order(const SnfPresentation& pres, std::span<const Integer> v);

// Invariants of a subgroup H/L of Z^n/L, given generators of H modulo L.
struct GroupInvariants {
  std::size_t rank = 0;
  std::vector<Integer> torsion;
};
GroupInvariants subquotient_invariants(const Lattice& relations, const std::vector<IntVector>& generators);

std::string to_string(const IntVector& v);

}  // namespace mwk
