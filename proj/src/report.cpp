#include "mwk/report.hpp"

#include <sstream>

#include "mwk/identity_parser.hpp"

namespace mwk {

Json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

namespace {

Json integers_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw Error("expected an integer, got " + j.dump());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("proof JSON lacks '") + key + "'");
  return j.at(key);
}

}  // namespace

Json ring_info_json(const Ring& ring) {
  Json units = Json::array(), squares = Json::array();
  for (Elem u : ring.units()) units.push_back(ring.format(u));
  for (Elem u : ring.unit_squares()) squares.push_back(ring.format(u));
  bool factorizations_ok = true;
  for (Elem u : ring.units()) factorizations_ok = factorizations_ok && ring.elementary_factorization(u).verified;
  Json j;
  j["ring"] = ring.name();
  j["size"] = ring.size();
  j["characteristic"] = ring.characteristic();
  j["is_field"] = ring.is_field();
  j["n_units"] = ring.units().size();
  j["units"] = units;
  j["unit_squares"] = squares;
  j["elementary_factorizations_verified"] = factorizations_ok;
  return j;
}

Json gw_json(const Ring& ring, PresentationKind kind) {
  const GwPresentedRing p(ring, kind);
  const TwoSplit split = invert_two_split(p);
  const bool minus_one_is_one =
      class_equal(p, GroupRingVector::basis(ring, ring.neg(ring.one())), GroupRingVector::one(ring));
  Json j;
  j["ring"] = ring.name();
  j["kind"] = to_string(kind);
  j["n_units"] = p.n_units();
  j["rank"] = p.rank();
  j["torsion"] = integers_json(p.torsion());
  j["minus_one_is_one"] = minus_one_is_one;
  j["split"] = {{"plus_rank", split.plus.rank},
                {"minus_rank", split.minus.rank},
                {"plus_torsion_odd", integers_json(split.plus.odd_torsion)},
                {"minus_torsion_odd", integers_json(split.minus.odd_torsion)}};
  j["presentation_comparison"] = compare_presentations(ring).extra_relations_implied;
  return j;
}

Json sumsq_json(const SumSquareResult& r) {
  const Ring& ring = r.ring;
  Json exps = Json::object(), wits = Json::object();
  for (Elem u : ring.units()) {
    auto e = r.exponent(u);
    if (!e) continue;
    exps[ring.format(u)] = *e;
    if (auto it = r.witness.find(u); it != r.witness.end())
      wits[ring.format(u)] = {ring.format(it->second.first), ring.format(it->second.second)};
  }
  Json j;
  j["ring"] = ring.name();
  const auto m1 = minus_one_exponent(r);
  j["minus_one_exponent"] = m1 ? Json(*m1) : Json(nullptr);
  j["exponents"] = exps;
  j["witnesses"] = wits;
  return j;
}

Json compare_json(const Ring& ring, const PresentationComparison& c) {
  Json j;
  j["ring"] = ring.name();
  j["extra_relations_implied"] = c.extra_relations_implied;
  j["witness"] = c.witness ? Json(c.witness->to_string()) : Json(nullptr);
  return j;
}

Json validate_json(const Ring& field, const CrossValidation& v) {
  Json j;
  j["ring"] = field.name();
  j["lattices_equal"] = v.lattices_equal;
  j["oracle_in_gw"] = v.oracle_in_gw;
  j["gw_in_oracle"] = v.gw_in_oracle;
  j["oracle_rows"] = v.oracle_rows;
  j["gw_rows"] = v.gw_rows;
  j["gw_invariants"] = {{"rank", v.rank}, {"torsion", integers_json(v.torsion)}};
  return j;
}

Json context_json(const Context& ctx) {
  Json pre = Json::array(), suf = Json::array();
  for (const auto& u : ctx.prefix) pre.push_back(u.bare_string());
  for (const auto& u : ctx.suffix) suf.push_back(u.bare_string());
  return {{"eta", ctx.eta}, {"prefix", pre}, {"suffix", suf}};
}

Json step_json(const ProofStep& s) {
  Json inst = Json::object();
  for (const auto& [var, u] : s.instance) inst[var] = u.bare_string();
  Json j;
  j["pos"] = context_json(s.pos);
  j["axiom"] = to_string(s.axiom);
  j["direction"] = to_string(s.direction);
  j["instance"] = inst;
  j["multiplier"] = integer_json(s.multiplier);
  j["before"] = s.before.to_string();
  j["after"] = s.after.to_string();
  return j;
}

Json proof_json(const Proof& p) {
  Json steps = Json::array();
  for (const auto& s : p.steps) steps.push_back(step_json(s));
  Json j;
  j["identity"] = p.identity.text.empty() ? p.identity.lhs.to_string() + " = " + p.identity.rhs.to_string()
                                          : p.identity.text;
  j["hypotheses"] = p.identity.hypotheses.to_string();
  j["mode"] = to_string(p.mode);
  j["steps"] = steps;
  return j;
}

Proof proof_from_json(const Json& j) {
  try {
    Proof p;
    const Hypotheses hyps = parse_hypotheses(field(j, "hypotheses").get<std::string>());
    p.identity = parse_identity(field(j, "identity").get<std::string>(), hyps);
    p.mode = parse_mode(field(j, "mode").get<std::string>());
    for (const auto& sj : field(j, "steps")) {
      ProofStep s;
      const Json& pos = field(sj, "pos");
      s.pos.eta = field(pos, "eta").get<int>();
      for (const auto& u : field(pos, "prefix")) s.pos.prefix.push_back(parse_unit_expr(u.get<std::string>()));
      for (const auto& u : field(pos, "suffix")) s.pos.suffix.push_back(parse_unit_expr(u.get<std::string>()));
      s.axiom = parse_axiom(field(sj, "axiom").get<std::string>());
      s.direction = parse_direction(field(sj, "direction").get<std::string>());
      for (const auto& [var, u] : field(sj, "instance").items()) s.instance[var] = parse_unit_expr(u.get<std::string>());
      s.multiplier = integer_from_json(field(sj, "multiplier"));
      s.before = parse_term(field(sj, "before").get<std::string>());
      s.after = parse_term(field(sj, "after").get<std::string>());
      p.steps.push_back(std::move(s));
    }
    return p;
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed proof JSON: ") + e.what());
  }
}

Json prove_json(const Identity& id, Mode mode, const ProveResult& r, const std::optional<CheckResult>& check) {
  Json j;
  j["identity"] = id.text;
  j["hypotheses"] = id.hypotheses.to_string();
  j["mode"] = to_string(mode);
  j["status"] = r.proof ? "proved" : "unknown";
  j["lhs"] = normalize(id.lhs).to_string();
  j["rhs"] = normalize(id.rhs).to_string();
  j["states"] = r.stats.states;
  if (check) j["checked"] = check->ok;
  j["proof"] = r.proof ? proof_json(*r.proof) : Json(nullptr);
  return j;
}

// ---------------------------------------------------------------------------

TableRow table_row(const std::string& spec) {
  TableRow row;
  row.ring = spec;
  try {
    const Ring ring = make_ring(spec);
    row.ring = ring.name();
    row.n_units = ring.units().size();
    row.minus_one_exponent = minus_one_exponent(ring);
    const GwPresentedRing red(ring, PresentationKind::Reduced), hopf(ring, PresentationKind::Hopf);
    row.reduced_rank = red.rank();
    row.reduced_torsion = red.torsion();
    row.hopf_rank = hopf.rank();
    row.hopf_torsion = hopf.torsion();
    const TwoSplit split = invert_two_split(red);
    row.plus_rank = split.plus.rank;
    row.minus_rank = split.minus.rank;
    row.comparison = compare_presentations(ring).extra_relations_implied;
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

OutputFormat parse_output_format(const std::string& text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "markdown" || text == "md") return OutputFormat::Markdown;
  throw Error("unknown output format '" + text + "' (expected json, csv or markdown)");
}

namespace {

std::string join(const std::vector<Integer>& v, const char* sep) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : sep) + x.get_str();
  return s;
}

std::vector<std::string> cells(const TableRow& r) {
  if (r.error) return {r.ring, "", "", "", "", "", "", "", "", "", *r.error};
  return {r.ring,
          std::to_string(r.n_units),
          r.minus_one_exponent ? std::to_string(*r.minus_one_exponent) : "none",
          std::to_string(r.reduced_rank),
          "[" + join(r.reduced_torsion, ",") + "]",
          std::to_string(r.hopf_rank),
          "[" + join(r.hopf_torsion, ",") + "]",
          std::to_string(r.plus_rank),
          std::to_string(r.minus_rank),
          r.comparison ? "true" : "false",
          ""};
}

const std::vector<std::string> kColumns{"ring",      "n_units",      "minus_one_exponent", "reduced_rank",
                                        "reduced_torsion", "hopf_rank", "hopf_torsion",  "plus_rank",
                                        "minus_rank", "comparison",   "error"};

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

std::string render_table(const std::vector<TableRow>& rows, OutputFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::Json: {
      Json arr = Json::array();
      for (const auto& r : rows) {
        Json j;
        j["ring"] = r.ring;
        if (r.error) {
          j["error"] = *r.error;
        } else {
          j["n_units"] = r.n_units;
          j["minus_one_exponent"] = r.minus_one_exponent ? Json(*r.minus_one_exponent) : Json(nullptr);
          j["reduced"] = {{"rank", r.reduced_rank}, {"torsion", integers_json(r.reduced_torsion)}};
          j["hopf"] = {{"rank", r.hopf_rank}, {"torsion", integers_json(r.hopf_torsion)}};
          j["split"] = {{"plus_rank", r.plus_rank}, {"minus_rank", r.minus_rank}};
          j["presentation_comparison"] = r.comparison;
        }
        arr.push_back(j);
      }
      os << arr.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv: {
      for (std::size_t i = 0; i < kColumns.size(); ++i) os << (i ? "," : "") << kColumns[i];
      os << '\n';
      for (const auto& r : rows) {
        const auto c = cells(r);
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << csv_cell(c[i]);
        os << '\n';
      }
      break;
    }
    case OutputFormat::Markdown: {
      os << '|';
      for (const auto& c : kColumns) os << ' ' << c << " |";
      os << "\n|";
      for (std::size_t i = 0; i < kColumns.size(); ++i) os << " --- |";
      os << '\n';
      for (const auto& r : rows) {
        os << '|';
        for (const auto& c : cells(r)) os << ' ' << c << " |";
        os << '\n';
      }
      break;
    }
  }
  return os.str();
}

}  // namespace mwk
