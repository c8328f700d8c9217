// mwk: command line front end for the mwkit library.
//
// Exit codes: 0 success, 1 input error (message on stderr), 2 when the
// prover returns Unknown for at least one identity.

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "mwk/identity_parser.hpp"
#include "mwk/report.hpp"

namespace {

constexpr const char* kVersion = "mwk 0.1.0";

using mwk::Json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mwk::Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> read_family(const std::string& path) {
  std::vector<std::string> out;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    const auto a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    const auto b = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(a, b - a + 1));
  }
  return out;
}

// Scalars keyed by dotted paths; nested arrays of scalars become "[a,b]".
void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (k == "witnesses" || k == "proof") continue;  // lossy formats skip these
      flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    }
  } else if (j.is_array()) {
    std::string s = "[";
    for (const auto& x : j) s += (s.size() > 1 ? "," : "") + (x.is_string() ? x.get<std::string>() : x.dump());
    out.emplace_back(prefix, s + "]");
  } else if (j.is_string()) {
    out.emplace_back(prefix, j.get<std::string>());
  } else {
    out.emplace_back(prefix, j.dump());
  }
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

// Reports as one JSON document, or one CSV / markdown row per report.
void emit(const std::vector<Json>& reports, mwk::OutputFormat fmt, bool as_array) {
  if (fmt == mwk::OutputFormat::Json) {
    if (as_array) {
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(r);
      std::cout << arr.dump(2) << '\n';
    } else {
      std::cout << reports.front().dump(2) << '\n';
    }
    return;
  }
  std::vector<std::vector<std::pair<std::string, std::string>>> rows;
  for (const auto& r : reports) flatten(r, "", rows.emplace_back());
  const auto& head = rows.front();
  const bool md = fmt == mwk::OutputFormat::Markdown;
  if (md) {
    std::cout << '|';
    for (const auto& [k, v] : head) std::cout << ' ' << k << " |";
    std::cout << "\n|";
    for (std::size_t i = 0; i < head.size(); ++i) std::cout << " --- |";
    std::cout << '\n';
  } else {
    for (std::size_t i = 0; i < head.size(); ++i) std::cout << (i ? "," : "") << head[i].first;
    std::cout << '\n';
  }
  for (const auto& row : rows) {
    if (md) std::cout << '|';
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (md)
        std::cout << ' ' << row[i].second << " |";
      else
        std::cout << (i ? "," : "") << csv_cell(row[i].second);
    }
    std::cout << '\n';
  }
}

std::vector<mwk::UnitExpr> parse_hints(const std::string& text) {
  std::vector<mwk::UnitExpr> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string piece = text.substr(start, end - start);
    if (piece.find_first_not_of(" \t") != std::string::npos) out.push_back(mwk::parse_unit_expr(piece));
    start = end + 1;
  }
  return out;
}

std::vector<mwk::TableRow> compute_table(const std::vector<std::string>& specs) {
  std::vector<mwk::TableRow> rows(specs.size());
  std::atomic<std::size_t> next{0};
  const unsigned n_threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                             static_cast<unsigned>(specs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n_threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < specs.size();) rows[i] = mwk::table_row(specs[i]);
    });
  for (auto& th : pool) th.join();
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Milnor-Witt degree-0 presentations, sums of squares and a certified identity prover"};
  app.require_subcommand(0, 1);
  bool version = false;
  app.add_flag("--version", version, "Print version and exit");

  std::string ring_spec, kind = "reduced", mode = "hopf", hyp, hints, out = "json", family, file;
  int depth = 12, max_words = 32;
  std::string identity;
  std::vector<std::string> specs;

  const auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out, "Output format: json, csv or markdown")->capture_default_str();
  };

  auto* ring_info = app.add_subcommand("ring-info", "Size, units and unit squares of a finite ring");
  ring_info->add_option("--ring", ring_spec, "Ring spec, e.g. Z/12, GF(3^2), GR(2^2,2)")->required();
  add_out(ring_info);

  auto* gw = app.add_subcommand("gw", "Presented degree-0 ring Z[R^x]/I");
  gw->add_option("--ring", ring_spec, "Ring spec")->required();
  gw->add_option("--kind", kind, "Presentation: hopf or reduced")->capture_default_str();
  add_out(gw);

  auto* sumsq = app.add_subcommand("sumsq", "Minimal unit-sum-of-squares exponents");
  sumsq->add_option("--ring", ring_spec, "Ring spec")->required();
  add_out(sumsq);

  auto* compare = app.add_subcommand("compare", "Whether <ab^2> = <a> already holds in the Hopf presentation");
  compare->add_option("--ring", ring_spec, "Ring spec")->required();
  add_out(compare);

  auto* validate = app.add_subcommand("validate", "Cross-check the Reduced lattice against the form oracle");
  validate->add_option("--ring", ring_spec, "Finite field of odd order <= 13")->required();
  add_out(validate);

  auto* prove = app.add_subcommand("prove", "Search for a rewrite proof of an identity");
  prove->add_option("identity", identity, "Identity such as \"<a*b> = <a><b>\"");
  prove->add_option("--file", file, "File with one identity per line");
  prove->add_option("--mode", mode, "Axioms: hopf, hopf-steinberg or reduced")->capture_default_str();
  prove->add_option("--hyp", hyp, "Unit hypotheses, e.g. \"unit(a),unit(1-a)\"");
  prove->add_option("--depth", depth, "Maximum proof length")->capture_default_str();
  prove->add_option("--max-words", max_words, "Maximum number of words in an intermediate term")->capture_default_str();
  prove->add_option("--hints", hints, "Extra units for splitting, comma separated");
  add_out(prove);

  auto* table = app.add_subcommand("table", "Batch summary, one row per ring");
  table->add_option("specs", specs, "Ring specs");
  table->add_option("--family", family, "File with one ring spec per line, # comments");
  add_out(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (version) {
    std::cout << kVersion << '\n';
    return 0;
  }
  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return 1;
  }

  try {
    const mwk::OutputFormat fmt = mwk::parse_output_format(out);

    if (*ring_info) {
      emit({mwk::ring_info_json(mwk::make_ring(ring_spec))}, fmt, false);
    } else if (*gw) {
      emit({mwk::gw_json(mwk::make_ring(ring_spec), mwk::parse_presentation_kind(kind))}, fmt, false);
    } else if (*sumsq) {
      emit({mwk::sumsq_json(mwk::unit_square_closure(mwk::make_ring(ring_spec)))}, fmt, false);
    } else if (*compare) {
      const mwk::Ring ring = mwk::make_ring(ring_spec);
      emit({mwk::compare_json(ring, mwk::compare_presentations(ring))}, fmt, false);
    } else if (*validate) {
      const mwk::Ring ring = mwk::make_ring(ring_spec);
      emit({mwk::validate_json(ring, mwk::cross_validate(ring))}, fmt, false);
    } else if (*prove) {
      const mwk::Mode m = mwk::parse_mode(mode);
      const mwk::Hypotheses hyps = mwk::parse_hypotheses(hyp);
      mwk::ProverConfig cfg;
      cfg.max_depth = depth;
      cfg.max_term_words = max_words;
      cfg.hints = parse_hints(hints);

      std::vector<mwk::Identity> ids;
      if (!file.empty()) ids = mwk::parse_identity_file(read_file(file), hyps);
      if (!identity.empty()) ids.push_back(mwk::parse_identity(identity, hyps));
      if (ids.empty()) throw mwk::Error("prove needs an identity argument or --file");

      std::vector<Json> reports;
      bool unknown = false;
      for (const auto& id : ids) {
        const mwk::ProveResult r = mwk::prove(id, m, cfg);
        std::optional<mwk::CheckResult> check;
        if (r.proof) {
          check = mwk::check_proof(*r.proof);
          if (!check->ok) throw mwk::Error("internal error: proof of '" + id.text + "' failed replay: " + check->message);
        }
        unknown = unknown || !r.proof;
        reports.push_back(mwk::prove_json(id, m, r, check));
      }
      emit(reports, fmt, !file.empty() || ids.size() > 1);
      return unknown ? 2 : 0;
    } else if (*table) {
      if (!family.empty())
        for (auto& s : read_family(family)) specs.push_back(std::move(s));
      if (specs.empty()) throw mwk::Error("table needs ring specs or --family");
      const auto rows = compute_table(specs);
      std::cout << mwk::render_table(rows, fmt);
      for (const auto& r : rows)
        if (r.error) return 1;
    }
  } catch (const mwk::Error& e) {
    std::cerr << "mwk: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
