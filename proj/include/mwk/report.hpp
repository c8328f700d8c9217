#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mwk/gwring.hpp"
#include "mwk/prover.hpp"
#include "mwk/qform.hpp"
#include "mwk/sumsq.hpp"

namespace mwk {

using Json = nlohmann::ordered_json;

// Integers go out as JSON numbers when they fit in 64 bits, else as strings.
Json integer_json(const Integer& n);

Json ring_info_json(const Ring& ring);
// {ring, kind, n_units, rank, torsion, minus_one_is_one, split, presentation_comparison}
Json gw_json(const Ring& ring, PresentationKind kind);
// {ring, minus_one_exponent, exponents, witnesses}
Json sumsq_json(const SumSquareResult& r);
Json compare_json(const Ring& ring, const PresentationComparison& c);
Json validate_json(const Ring& field, const CrossValidation& v);

Json context_json(const Context& ctx);
Json step_json(const ProofStep& s);
Json proof_json(const Proof& p);
// Inverse of proof_json. Throws Error on malformed input.
Proof proof_from_json(const Json& j);
Json prove_json(const Identity& id, Mode mode, const ProveResult& r, const std::optional<CheckResult>& check);

// One row of the batch table.
struct TableRow {
  std::string ring;
  std::optional<std::string> error;
  std::size_t n_units = 0;
  std::optional<int> minus_one_exponent;
  std::size_t reduced_rank = 0;
  std::vector<Integer> reduced_torsion;
  std::size_t hopf_rank = 0;
  std::vector<Integer> hopf_torsion;
  std::size_t plus_rank = 0;   // Reduced presentation after inverting 2
  std::size_t minus_rank = 0;
  bool comparison = false;
};

// Computes a row; input errors are captured in `error`.
TableRow table_row(const std::string& spec);

enum class OutputFormat { Json, Csv, Markdown };
OutputFormat parse_output_format(const std::string& text);

std::string render_table(const std::vector<TableRow>& rows, OutputFormat fmt);

}  // namespace mwk
