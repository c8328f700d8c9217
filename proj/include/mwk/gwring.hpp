#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mwk/finring.hpp"
#include "mwk/presab.hpp"

namespace mwk {

// Hopf: relation families <a>+<-a>=<1>+<-1> and <a>+<b>=<a+b>+<(a+b)ab>.
// Reduced: additionally <ab^2>=<a>.
enum class PresentationKind { Hopf, Reduced };

std::string to_string(PresentationKind kind);
PresentationKind parse_presentation_kind(const std::string& text);

// Element of Z[R^x]: finitely supported integer combination of units.
class GroupRingVector {
 public:
  explicit GroupRingVector(Ring ring) : ring_(std::move(ring)) {}

  // basis vector <u> for a unit u
  static GroupRingVector basis(const Ring& ring, Elem unit);
  static GroupRingVector one(const Ring& ring) { return basis(ring, ring.one()); }

  const Ring& ring() const { return ring_; }
  // keyed by unit index; zero coefficients are never stored
  const std::map<std::size_t, Integer>& coeffs() const { return coeffs_; }
  Integer coeff(Elem unit) const;
  bool is_zero() const { return coeffs_.empty(); }

  void add_term(Elem unit, const Integer& c);
  IntVector dense() const;
  static GroupRingVector from_dense(const Ring& ring, std::span<const Integer> v);

  GroupRingVector& operator+=(const GroupRingVector& o);
  GroupRingVector& operator-=(const GroupRingVector& o);
  GroupRingVector& operator*=(const Integer& c);
  friend GroupRingVector operator+(GroupRingVector a, const GroupRingVector& b) { return a += b; }
  friend GroupRingVector operator-(GroupRingVector a, const GroupRingVector& b) { return a -= b; }
  friend GroupRingVector operator*(GroupRingVector a, const Integer& c) { return a *= c; }
  friend bool operator==(const GroupRingVector& a, const GroupRingVector& b);

  std::string to_string() const;

 private:
  void check_same(const GroupRingVector& o) const;

  Ring ring_;
  std::map<std::size_t, Integer> coeffs_;
};

// Bilinear extension of <a><b> = <ab>.
GroupRingVector mul(const GroupRingVector& x, const GroupRingVector& y);

// Instances of the chosen relation families as rows over Z^{units}, zero and
// duplicate rows removed, in generation order.
IntMatrix build_relations(const Ring& ring, PresentationKind kind);

// Z[R^x]/I with I the ideal generated by build_relations.
class GwPresentedRing {
 public:
  GwPresentedRing(Ring ring, PresentationKind kind);

  const Ring& ring() const { return ring_; }
  PresentationKind kind() const { return kind_; }
  std::size_t n_units() const { return ring_.units().size(); }
  const IntMatrix& relations() const { return relations_; }
  // relation rows plus their unit multiples, as a Hermite basis
  const Lattice& lattice() const { return lattice_; }
  const SnfPresentation& presentation() const { return pres_; }
  // whether the relation rows alone were already closed under unit multiplication
  bool relations_form_ideal() const { return relations_form_ideal_; }

  std::size_t rank() const { return pres_.rank; }
  const std::vector<Integer>& torsion() const { return pres_.torsion; }

 private:
  Ring ring_;
  PresentationKind kind_;
  IntMatrix relations_;
  Lattice lattice_;
  SnfPresentation pres_;
  bool relations_form_ideal_ = true;
};

GwPresentedRing present(const Ring& ring, PresentationKind kind);

bool class_equal(const GwPresentedRing& p, const GroupRingVector& x, const GroupRingVector& y);
// Additive order of the class of x; nullopt means infinite.
std::optional<Integer> torsion_exponent(const GwPresentedRing& p, const GroupRingVector& x);

struct EigenPiece {
  std::size_t rank = 0;               // rank over Z[1/2]
  std::vector<Integer> odd_torsion;   // invariant factors with 2-parts removed
};

struct TwoSplit {
  EigenPiece plus;   // image of (1 + <-1>)
  EigenPiece minus;  // image of (1 - <-1>)
};

// Splitting of P[1/2] by the idempotents (1 +- <-1>)/2.
TwoSplit invert_two_split(const GwPresentedRing& p);

struct PresentationComparison {
  bool extra_relations_implied = false;
  std::optional<GroupRingVector> witness;
};

// Whether every row <ab^2>-<a> lies in the Hopf ideal.
PresentationComparison compare_presentations(const Ring& ring);

// augmentation <a> -> 1
Integer augmentation(const GroupRingVector& x);

}  // namespace mwk
