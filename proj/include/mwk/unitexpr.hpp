#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mwk/finring.hpp"
#include "mwk/presab.hpp"

namespace mwk {

class UnitExpr;
struct Atom;

// Exponent vector of a monomial, sign excluded.
using Exponents = std::map<Atom, int>;
// Laurent polynomial with integer coefficients.
using Poly = std::map<Exponents, Integer>;

// Generator of the multiplicative group of unit expressions. Sum atoms carry
// a primitive polynomial: no monomial content, coprime coefficients, first
// coefficient positive, at least two terms.
struct Atom {
  enum class Kind { Var, Prime, Sum };

  Kind kind = Kind::Var;
  std::string key;  // canonical spelling; decides order and equality
  std::int64_t prime = 0;
  std::shared_ptr<const Poly> sum;

  static Atom var(const std::string& name);
  static Atom prime_atom(std::int64_t p);
  static Atom sum_atom(Poly primitive);

  friend bool operator<(const Atom& a, const Atom& b) { return a.key < b.key; }
  friend bool operator==(const Atom& a, const Atom& b) { return a.key == b.key; }
};

// Canonical unit expression: sign * prod atom^e. Syntactic equality is the
// intended equality of units in the free abelian group on atoms.
class UnitExpr {
 public:
  UnitExpr() = default;

  static UnitExpr one() { return {}; }
  static UnitExpr minus_one();
  static UnitExpr var(const std::string& name);
  static UnitExpr atom_power(const Atom& atom, int e);
  // nonzero integer as sign times prime atoms
  static UnitExpr integer(const Integer& n);
  // sum of c_i * m_i, canonicalized; throws Error if the sum is zero
  static UnitExpr sum(const std::vector<std::pair<Integer, UnitExpr>>& terms);

  int sign() const { return sign_; }
  const Exponents& exponents() const { return exps_; }
  bool is_one() const { return sign_ == 1 && exps_.empty(); }
  bool is_minus_one() const { return sign_ == -1 && exps_.empty(); }

  UnitExpr operator*(const UnitExpr& o) const;
  UnitExpr operator/(const UnitExpr& o) const;
  UnitExpr operator-() const;
  UnitExpr inverse() const;
  UnitExpr pow(int n) const;
  // 1 - this
  UnitExpr one_minus() const;
  // r with r*r == this and positive sign, when it exists
  std::optional<UnitExpr> square_root() const;
  // sum of |exponents| plus one for a minus sign
  int size() const;

  const std::string& key() const { return key_; }
  std::string to_string() const { return key_; }
  // to_string without the parentheses of a lone sum atom: "1-a", not "(1-a)"
  std::string bare_string() const;

  // variable names, including those inside sum atoms
  std::set<std::string> variables() const;
  // sum and prime atoms, recursively including inverted atoms inside sums
  std::vector<Atom> atoms_needing_units() const;

  friend bool operator==(const UnitExpr& a, const UnitExpr& b) { return a.key_ == b.key_; }
  friend bool operator<(const UnitExpr& a, const UnitExpr& b) { return a.key_ < b.key_; }

 private:
  UnitExpr(int sign, Exponents exps);
  void rebuild_key();

  int sign_ = 1;
  Exponents exps_;
  std::string key_ = "1";
};

// Atoms declared to be units. Variables are always units.
class Hypotheses {
 public:
  Hypotheses() = default;

  // Declares every atom of u (a product is a unit iff its factors are).
  void declare(const UnitExpr& u);
  const std::vector<UnitExpr>& declared() const { return declared_; }
  bool is_unit(const UnitExpr& u) const;
  // First atom of u that is not known to be a unit, if any.
  std::optional<std::string> undeclared_atom(const UnitExpr& u) const;
  std::string to_string() const;

 private:
  std::vector<UnitExpr> declared_;
  std::set<std::string> atoms_;
};

using Assignment = std::map<std::string, Elem>;

// Value of u in the ring; throws Error on a missing variable or when an
// inverted subexpression is not a unit.
Elem evaluate(const UnitExpr& u, const Ring& ring, const Assignment& assignment);

// Whether every hypothesis evaluates to a unit.
bool satisfies(const Hypotheses& hyps, const Ring& ring, const Assignment& assignment);

}  // namespace mwk
