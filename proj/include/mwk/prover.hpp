#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mwk/kmwterm.hpp"

namespace mwk {

enum class Direction { Forward, Backward };
std::string to_string(Direction d);
Direction parse_direction(const std::string& text);

// after = normalize(before + multiplier * embed(pos, to - from)), where
// (from, to) is (lhs, rhs) of the instance for Forward and (rhs, lhs) for
// Backward.
struct ProofStep {
  Context pos;
  Axiom axiom = Axiom::R2;
  Direction direction = Direction::Forward;
  Binding instance;
  Integer multiplier = 1;
  KmwTerm before;
  KmwTerm after;
};

struct Proof {
  Identity identity;
  Mode mode = Mode::Hopf;
  std::vector<ProofStep> steps;
};

// Recomputes step.after from the other fields. Throws Error when the
// instance is invalid or the axiom is not part of the mode.
KmwTerm apply_step(const ProofStep& step, Mode mode, const Hypotheses& hyps);

struct ProverConfig {
  int max_depth = 12;
  int max_term_words = 32;
  std::vector<UnitExpr> hints;
  std::size_t max_states = 200000;
  std::chrono::milliseconds timeout{10000};
};

struct ProverStats {
  std::size_t states = 0;
  int depth = 0;  // forward plus backward levels explored
  bool exhausted = false;  // frontier ran dry inside the limits
  bool timed_out = false;
  double seconds = 0;
};

struct ProveResult {
  std::optional<Proof> proof;  // nullopt means Unknown
  ProverStats stats;
};

// Bidirectional breadth-first search over single axiom applications. Throws
// Error for non-positive limits or an invalid identity.
ProveResult prove(const Identity& id, Mode mode, const ProverConfig& config = {});

struct CheckResult {
  bool ok = false;
  std::optional<std::size_t> failing_index;  // == steps.size() for an endpoint mismatch
  std::string message;
};

// Replays every step independently of the search.
CheckResult check_proof(const Proof& proof);

}  // namespace mwk
