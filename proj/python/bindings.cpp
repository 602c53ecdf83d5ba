#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eqbif/bifurcation.hpp"
#include "eqbif/corroborate.hpp"
#include "eqbif/io.hpp"
#include "eqbif/oracle.hpp"

namespace py = pybind11;
using namespace eqbif;

namespace {

// Reports cross the boundary as JSON text, decoded by the stdlib parser.
py::object to_python(const Json& doc) {
  return py::module_::import("json").attr("loads")(doc.dump());
}

ProblemSpec load(const std::string& path_or_json) {
  const auto first = path_or_json.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && path_or_json[first] == '{')
    return parse_problem_text(path_or_json);
  return parse_problem(path_or_json);
}

py::object integer(const Integer& z) { return py::module_::import("builtins").attr("int")(z.get_str()); }

py::list matrix(const IntMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(integer(m(i, j)));
    rows.append(row);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_eqbif, m) {
  m.doc() = "Equivariant bifurcation indices for torus-symmetric elliptic systems.";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<RefusalError>(m, "RefusalError", base.ptr());
  py::register_exception<ConsistencyError>(m, "ConsistencyError", base.ptr());

  m.def("snf", [](const std::vector<std::vector<long>>& rows) {
    std::vector<IntVector> big;
    for (const auto& r : rows) big.emplace_back(r.begin(), r.end());
    const SmithDecomposition s = snf(IntMatrix::from_rows(big, rows.empty() ? 0 : rows[0].size()));
    py::list factors;
    for (const auto& d : s.invariant_factors) factors.append(integer(d));
    py::dict out;
    out["P"] = matrix(s.P);
    out["Q"] = matrix(s.Q);
    out["D"] = matrix(s.D);
    out["invariant_factors"] = factors;
    return out;
  }, py::arg("rows"));

  m.def("candidates", [](const std::string& problem) {
    return to_python(candidates_to_json(candidate_levels(load(problem))));
  }, py::arg("problem"), "Candidate levels of a problem file path or JSON text.");

  m.def("analyze", [](const std::string& problem, const std::string& level) {
    const ProblemSpec spec = load(problem);
    const Rational q = parse_rational(level);
    return to_python(level_to_json(LevelOutcome{q, analyze_level(spec, q), ""}));
  }, py::arg("problem"), py::arg("level"));

  m.def("report", [](const std::string& problem) {
    const ProblemSpec spec = load(problem);
    std::vector<LevelOutcome> outcomes;
    {
      py::gil_scoped_release release;
      outcomes = analyze_all(spec);
    }
    return to_python(report_json(spec, outcomes));
  }, py::arg("problem"));

  m.def("stability_scan", &stability_scan, py::arg("modes"), py::arg("lo"), py::arg("hi"),
        py::arg("steps") = 200);

  m.def("newton_branch", [](std::size_t k, double lambda, std::size_t modes) {
    const BranchResult r = newton_branch(k, lambda, modes);
    py::dict out;
    out["converged"] = r.converged;
    out["iterations"] = r.iterations;
    out["residual"] = r.residual_norm;
    out["amplitude"] = r.amplitude;
    out["modes"] = r.state.modes;
    return out;
  }, py::arg("k"), py::arg("lam"), py::arg("modes") = 8);

  m.def("selftest", [](std::uint64_t seed, std::int64_t trials) {
    SelfTestReport rep;
    {
      py::gil_scoped_release release;
      rep = run_selftest(seed, trials);
    }
    return to_python(selftest_to_json(rep));
  }, py::arg("seed") = 1, py::arg("trials") = 100);
}
