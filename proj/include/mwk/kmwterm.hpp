#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mwk/gwring.hpp"
#include "mwk/unitexpr.hpp"

namespace mwk {

// Eta (degree -1) or a symbol [u] (degree 1).
struct Letter {
  bool is_eta = false;
  UnitExpr unit;

  static Letter eta() { return {true, {}}; }
  static Letter bracket(UnitExpr u) { return {false, std::move(u)}; }

  friend bool operator==(const Letter& a, const Letter& b) { return a.is_eta == b.is_eta && a.unit == b.unit; }
  friend bool operator<(const Letter& a, const Letter& b) {
    if (a.is_eta != b.is_eta) return a.is_eta;
    return a.unit < b.unit;
  }
};

struct Word {
  std::vector<Letter> letters;

  int eta_count() const;
  std::vector<UnitExpr> brackets() const;
  int degree() const;
  // all eta letters precede all brackets
  bool eta_fronted() const;

  static Word make(int etas, const std::vector<UnitExpr>& brackets);

  friend bool operator==(const Word&, const Word&) = default;
  friend bool operator<(const Word& a, const Word& b) { return a.letters < b.letters; }
};

Word operator*(const Word& a, const Word& b);

// Finite integer combination of words. Arithmetic never reorders letters;
// call normalize() to reach the eta-fronted, collected form.
class KmwTerm {
 public:
  KmwTerm() = default;

  static KmwTerm integer(const Integer& n);
  static KmwTerm word(Word w, const Integer& c = 1);
  static KmwTerm eta();
  static KmwTerm bracket(const UnitExpr& u);
  // <u> = eta[u] + 1
  static KmwTerm angle(const UnitExpr& u);
  // eps = -eta[-1] - 1
  static KmwTerm epsilon();
  // h = eta[-1] + 2
  static KmwTerm hyperbolic();

  const std::map<Word, Integer>& summands() const { return summands_; }
  bool is_zero() const { return summands_.empty(); }
  std::size_t size() const { return summands_.size(); }
  Integer coeff(const Word& w) const;

  void add(const Word& w, const Integer& c);
  KmwTerm& operator+=(const KmwTerm& o);
  KmwTerm& operator-=(const KmwTerm& o);
  KmwTerm& operator*=(const Integer& c);
  friend KmwTerm operator+(KmwTerm a, const KmwTerm& b) { return a += b; }
  friend KmwTerm operator-(KmwTerm a, const KmwTerm& b) { return a -= b; }
  friend KmwTerm operator-(KmwTerm a) { return a *= Integer(-1); }
  friend KmwTerm operator*(KmwTerm a, const Integer& c) { return a *= c; }
  friend KmwTerm operator*(const KmwTerm& a, const KmwTerm& b);
  KmwTerm pow(unsigned n) const;

  // single common degree of all words; nullopt for 0 or mixed terms
  std::optional<int> degree() const;
  bool homogeneous() const;
  std::vector<UnitExpr> units() const;
  std::set<std::string> variables() const;

  std::string to_string() const;

  friend bool operator==(const KmwTerm&, const KmwTerm&) = default;

 private:
  std::map<Word, Integer> summands_;
};

// Moves eta letters to the front, drops words containing [1], collects like
// words and removes zero coefficients. Idempotent.
KmwTerm normalize(const KmwTerm& t);

enum class Mode { Hopf, HopfSteinberg, Reduced };
std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

enum class Axiom { R1, R2, R3, R4, R5, R6 };
std::string to_string(Axiom a);
Axiom parse_axiom(const std::string& text);

struct AxiomSchema {
  Axiom id;
  std::string statement;
  std::vector<std::string> variables;
  std::string side_condition;
  bool absorbed = false;  // applied by normalize instead of by rewriting
};

// R1 [a][1-a]=0, R2 [ab]=[a]+[b]+eta[a][b], R3 eta[a]=[a]eta,
// R4 eta^2[-1]+2eta=0, R5 eta[a^2]=0, R6 [1]=0.
std::vector<AxiomSchema> axioms(Mode mode);
bool axiom_in_mode(Axiom a, Mode mode);

using Binding = std::map<std::string, UnitExpr>;

// lhs and rhs of an instantiated schema
struct AxiomSides {
  KmwTerm lhs;
  KmwTerm rhs;
};

// Throws Error if the binding is incomplete or violates the side condition.
AxiomSides instantiate(Axiom a, const Binding& binding, const Hypotheses& hyps);

// Placement eta^eta * prefix * (.) * suffix of a pattern inside a word.
struct Context {
  int eta = 0;
  std::vector<UnitExpr> prefix;
  std::vector<UnitExpr> suffix;

  friend bool operator==(const Context&, const Context&) = default;
};

KmwTerm embed(const Context& ctx, const KmwTerm& t);

struct Identity {
  KmwTerm lhs;
  KmwTerm rhs;
  Hypotheses hypotheses;
  std::string text;  // source spelling, for reports
};

// Throws Error unless both sides are homogeneous of one degree and every
// bracket names a unit under the hypotheses.
void validate(const Identity& id);

// Image of a degree-0 term in Z[R^x]: eta^k[a1]...[ak] -> prod (<ai> - <1>).
GroupRingVector eval_in_ring(const KmwTerm& t, const Ring& ring, const Assignment& assignment);

}  // namespace mwk
