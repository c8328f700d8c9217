#include "mwk/prover.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>

namespace mwk {

std::string to_string(Direction d) { return d == Direction::Forward ? "forward" : "backward"; }

Direction parse_direction(const std::string& text) {
  if (text == "forward") return Direction::Forward;
  if (text == "backward") return Direction::Backward;
  throw Error("unknown direction '" + text + "'");
}

KmwTerm apply_step(const ProofStep& step, Mode mode, const Hypotheses& hyps) {
  if (!axiom_in_mode(step.axiom, mode)) throw Error(to_string(step.axiom) + " is not an axiom of mode " + to_string(mode));
  const AxiomSides sides = instantiate(step.axiom, step.instance, hyps);
  const KmwTerm delta = step.direction == Direction::Forward ? sides.rhs - sides.lhs : sides.lhs - sides.rhs;
  return normalize(step.before + embed(step.pos, delta) * step.multiplier);
}

namespace {

std::vector<UnitExpr> slice(const std::vector<UnitExpr>& v, std::size_t from, std::size_t to) {
  return {v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(to)};
}

// All sub-monomials x of u (sign included when u is negative).
std::vector<UnitExpr> sub_monomials(const UnitExpr& u) {
  std::vector<UnitExpr> out{UnitExpr::one()};
  if (u.sign() < 0) out.push_back(UnitExpr::minus_one());
  for (const auto& [atom, e] : u.exponents()) {
    const UnitExpr step = UnitExpr::atom_power(atom, e > 0 ? 1 : -1);
    std::vector<UnitExpr> next;
    for (const auto& x : out) {
      UnitExpr acc = x;
      next.push_back(acc);
      for (int i = 0; i < std::abs(e); ++i) next.push_back(acc = acc * step);
    }
    out = std::move(next);
  }
  return out;
}

class Expander {
 public:
  Expander(Mode mode, const Hypotheses& hyps, const ProverConfig& cfg) : mode_(mode), hyps_(hyps), cfg_(cfg) {}

  // Every admissible single step out of `t`, in a fixed order.
  std::vector<ProofStep> moves(const KmwTerm& t) const {
    std::vector<ProofStep> out;
    for (const auto& [w, k] : t.summands()) {
      const int e = w.eta_count();
      const auto brs = w.brackets();
      const std::size_t n = brs.size();
      for (std::size_t i = 0; i < n; ++i) {
        const UnitExpr& u = brs[i];
        const Context at{e, slice(brs, 0, i), slice(brs, i + 1, n)};
        // R2 split [xy] -> [x]+[y]+eta[x][y]
        for (const auto& x : split_candidates(u)) {
          const UnitExpr y = u / x;
          add(out, t, at, Axiom::R2, Direction::Forward, {{"a", x}, {"b", y}}, k);
        }
        if (e >= 1 && mode_ == Mode::Reduced) {
          if (auto r = u.square_root()) add(out, t, {e - 1, at.prefix, at.suffix}, Axiom::R5, Direction::Forward, {{"a", *r}}, k);
        }
        if (e >= 2 && u.is_minus_one()) add(out, t, {e - 2, at.prefix, at.suffix}, Axiom::R4, Direction::Forward, {}, k);
      }
      for (std::size_t i = 0; i + 1 < n; ++i) {
        const Context pair{e, slice(brs, 0, i), slice(brs, i + 2, n)};
        if (mode_ != Mode::Hopf && is_one_minus(brs[i], brs[i + 1]))
          add(out, t, pair, Axiom::R1, Direction::Forward, {{"a", brs[i]}}, k);
        if (e >= 1)
          add(out, t, {e - 1, pair.prefix, pair.suffix}, Axiom::R2, Direction::Backward, {{"a", brs[i]}, {"b", brs[i + 1]}}, k);
      }
      // R4 backward: -2 eta -> eta^2[-1], inserting [-1] at each position
      if (e >= 1 && k % 2 == 0) {
        const Integer c = -k / 2;
        for (std::size_t j = 0; j <= n; ++j)
          add(out, t, {e - 1, slice(brs, 0, j), slice(brs, j, n)}, Axiom::R4, Direction::Backward, {}, c);
      }
    }
    return out;
  }

 private:
  static bool is_one_minus(const UnitExpr& x, const UnitExpr& y) {
    try {
      return y == x.one_minus();
    } catch (const Error&) {
      return false;
    }
  }

  std::vector<UnitExpr> split_candidates(const UnitExpr& u) const {
    std::vector<UnitExpr> out;
    const int size = u.size();
    for (const auto& x : sub_monomials(u)) {
      const UnitExpr y = u / x;
      if (x.size() < size && y.size() < size && !x.is_one() && !y.is_one()) out.push_back(x);
    }
    for (const auto& h : cfg_.hints) {
      const UnitExpr y = u / h;
      if (h.is_one() || y.is_one()) continue;
      if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(h);
    }
    return out;
  }

  void add(std::vector<ProofStep>& out, const KmwTerm& t, Context ctx, Axiom a, Direction d, Binding b,
           const Integer& c) const {
    ProofStep s;
    s.pos = std::move(ctx);
    s.axiom = a;
    s.direction = d;
    s.instance = std::move(b);
    s.multiplier = c;
    s.before = t;
    try {
      s.after = apply_step(s, mode_, hyps_);
    } catch (const Error&) {
      return;  // side condition not met under the hypotheses
    }
    if (s.after == t) return;
    if (static_cast<int>(s.after.size()) > cfg_.max_term_words) return;
    out.push_back(std::move(s));
  }

  Mode mode_;
  const Hypotheses& hyps_;
  const ProverConfig& cfg_;
};

struct Node {
  KmwTerm term;
  std::ptrdiff_t parent = -1;
  ProofStep step;  // step from parent to this node
};

struct Side {
  std::vector<Node> nodes;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::size_t> frontier;
  int depth = 0;

  std::size_t insert(Node n) {
    const std::string key = n.term.to_string();
    nodes.push_back(std::move(n));
    index.emplace(key, nodes.size() - 1);
    return nodes.size() - 1;
  }

  // steps root -> node
  std::vector<ProofStep> path(std::size_t i) const {
    std::vector<ProofStep> out;
    for (std::ptrdiff_t j = static_cast<std::ptrdiff_t>(i); nodes[static_cast<std::size_t>(j)].parent >= 0;
         j = nodes[static_cast<std::size_t>(j)].parent)
      out.push_back(nodes[static_cast<std::size_t>(j)].step);
    std::reverse(out.begin(), out.end());
    return out;
  }
};

ProofStep reversed(const ProofStep& s) {
  ProofStep r = s;
  r.direction = s.direction == Direction::Forward ? Direction::Backward : Direction::Forward;
  std::swap(r.before, r.after);
  return r;
}

}  // namespace

ProveResult prove(const Identity& id, Mode mode, const ProverConfig& config) {
  if (config.max_depth <= 0) throw Error("max_depth must be positive");
  if (config.max_term_words <= 0) throw Error("max_term_words must be positive");
  if (config.max_states == 0) throw Error("max_states must be positive");
  if (config.timeout.count() <= 0) throw Error("timeout must be positive");
  validate(id);

  const auto start = std::chrono::steady_clock::now();
  ProveResult result;
  const auto finish = [&](std::optional<Proof> p) {
    result.proof = std::move(p);
    result.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  };

  const KmwTerm lhs = normalize(id.lhs), rhs = normalize(id.rhs);
  Proof proof{id, mode, {}};
  if (lhs == rhs) return finish(proof);

  Side sides[2];
  sides[0].frontier.push_back(sides[0].insert({lhs, -1, {}}));
  sides[1].frontier.push_back(sides[1].insert({rhs, -1, {}}));
  const Expander expander(mode, id.hypotheses, config);

  const auto join = [&](int s, std::size_t here, std::size_t there) {
    const Side& fwd = sides[0];
    const Side& bwd = sides[1];
    const std::size_t fi = s == 0 ? here : there, bi = s == 0 ? there : here;
    proof.steps = fwd.path(fi);
    const auto back = bwd.path(bi);
    for (auto it = back.rbegin(); it != back.rend(); ++it) proof.steps.push_back(reversed(*it));
    return proof;
  };

  while (sides[0].depth + sides[1].depth < config.max_depth) {
    if (sides[0].frontier.empty() && sides[1].frontier.empty()) {
      result.stats.exhausted = true;
      break;
    }
    // a dead side can still be reached by the other one
    const int s = sides[1].frontier.empty() ||
                          (!sides[0].frontier.empty() && sides[0].frontier.size() <= sides[1].frontier.size())
                      ? 0
                      : 1;
    Side& me = sides[s];
    const Side& other = sides[1 - s];
    std::vector<std::size_t> next;
    for (const std::size_t i : me.frontier) {
      const KmwTerm term = me.nodes[i].term;
      for (auto& step : expander.moves(term)) {
        const std::string key = step.after.to_string();
        if (me.index.contains(key)) continue;
        KmwTerm after = step.after;
        const std::size_t j = me.insert({std::move(after), static_cast<std::ptrdiff_t>(i), std::move(step)});
        ++result.stats.states;
        if (auto hit = other.index.find(key); hit != other.index.end()) {
          result.stats.depth = sides[0].depth + sides[1].depth + 1;
          return finish(join(s, j, hit->second));
        }
        next.push_back(j);
        if (result.stats.states >= config.max_states) return finish(std::nullopt);
      }
      if (std::chrono::steady_clock::now() - start > config.timeout) {
        result.stats.timed_out = true;
        return finish(std::nullopt);
      }
    }
    me.frontier = std::move(next);
    ++me.depth;
    result.stats.depth = sides[0].depth + sides[1].depth;
  }
  return finish(std::nullopt);
}

CheckResult check_proof(const Proof& proof) {
  const Identity& id = proof.identity;
  try {
    validate(id);
  } catch (const Error& e) {
    return {false, std::nullopt, std::string("invalid identity: ") + e.what()};
  }
  KmwTerm current = normalize(id.lhs);
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const ProofStep& s = proof.steps[i];
    if (!(s.before == current)) return {false, i, "step does not start from the previous term"};
    KmwTerm after;
    try {
      after = apply_step(s, proof.mode, id.hypotheses);
    } catch (const Error& e) {
      return {false, i, e.what()};
    }
    if (!(after == s.after)) return {false, i, "replay gives " + after.to_string() + ", step claims " + s.after.to_string()};
    current = after;
  }
  if (!(current == normalize(id.rhs))) return {false, proof.steps.size(), "final term differs from the right-hand side"};
  return {true, std::nullopt, "ok"};
}

}  // namespace mwk
