// Python module: thin wrappers that hand JSON text to the package, which
// decodes it. Library errors surface as ValueError.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mwk/identity_parser.hpp"
#include "mwk/report.hpp"

namespace py = pybind11;

namespace {

std::string prove(const std::string& identity, const std::string& mode, const std::string& hyp, int depth,
                  int max_words) {
  const mwk::Identity id = mwk::parse_identity(identity, mwk::parse_hypotheses(hyp));
  const mwk::Mode m = mwk::parse_mode(mode);
  mwk::ProverConfig cfg;
  cfg.max_depth = depth;
  cfg.max_term_words = max_words;
  mwk::ProveResult r;
  {
    py::gil_scoped_release unlocked;
    r = mwk::prove(id, m, cfg);
  }
  std::optional<mwk::CheckResult> check;
  if (r.proof) check = mwk::check_proof(*r.proof);
  return mwk::prove_json(id, m, r, check).dump();
}

bool check(const std::string& proof_json) {
  return mwk::check_proof(mwk::proof_from_json(mwk::Json::parse(proof_json))).ok;
}

std::string table(const std::vector<std::string>& specs, const std::string& fmt) {
  std::vector<mwk::TableRow> rows;
  for (const auto& s : specs) rows.push_back(mwk::table_row(s));
  return mwk::render_table(rows, mwk::parse_output_format(fmt));
}

}  // namespace

PYBIND11_MODULE(_mwkit, m) {
  py::register_exception<mwk::Error>(m, "MwkError", PyExc_ValueError);

  m.def("ring_info", [](const std::string& ring) { return mwk::ring_info_json(mwk::make_ring(ring)).dump(); });
  m.def("gw", [](const std::string& ring, const std::string& kind) {
    return mwk::gw_json(mwk::make_ring(ring), mwk::parse_presentation_kind(kind)).dump();
  });
  m.def("sumsq", [](const std::string& ring) {
    return mwk::sumsq_json(mwk::unit_square_closure(mwk::make_ring(ring))).dump();
  });
  m.def("compare", [](const std::string& ring) {
    const mwk::Ring r = mwk::make_ring(ring);
    return mwk::compare_json(r, mwk::compare_presentations(r)).dump();
  });
  m.def("validate", [](const std::string& ring) {
    const mwk::Ring r = mwk::make_ring(ring);
    return mwk::validate_json(r, mwk::cross_validate(r)).dump();
  });
  m.def("prove", &prove, py::arg("identity"), py::arg("mode") = "hopf", py::arg("hyp") = "", py::arg("depth") = 12,
        py::arg("max_words") = 32);
  m.def("check", &check, py::arg("proof_json"));
  m.def("table", &table, py::arg("specs"), py::arg("fmt") = "csv");
  m.attr("__version__") = "0.1.0";
}
