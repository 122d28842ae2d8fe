#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "smashhom/report.hpp"

namespace py = pybind11;
using namespace smashhom;

namespace {

// Returns (report JSON string, exit code); the Python wrapper decodes it.
std::pair<std::string, int> run_command(const std::string& command, const std::string& group,
                                        long trunc, bool per_class, bool use_double, int jobs,
                                        long bar_nmax, long bar_dmax) {
  RunOptions opts;
  opts.command = command;
  opts.group = group;
  opts.trunc = trunc;
  opts.per_class = per_class;
  opts.use_double = use_double;
  opts.jobs = jobs;
  opts.bar_nmax = bar_nmax;
  opts.bar_dmax = bar_dmax;
  RunResult r = run(opts);
  return {r.report.dump(), r.exit_code};
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const CatalogEntry& e : catalog()) out.push_back(e.file.name);
  return out;
}

std::string render(const std::string& report_json) {
  return render_table(nlohmann::json::parse(report_json));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "graded Hochschild (co)homology of S(V)#G for finite matrix groups";

  // translators run newest-first, so the subclass must come second
  py::register_exception<Error>(m, "EngineError", PyExc_RuntimeError);
  py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);

  m.def("run_command", &run_command, py::arg("command"), py::arg("group"), py::arg("trunc") = -1,
        py::arg("per_class") = false, py::arg("double") = false, py::arg("jobs") = 1,
        py::arg("bar_nmax") = 2, py::arg("bar_dmax") = 3,
        "Execute a subcommand; returns (report JSON, exit code).");
  m.def("catalog_names", &catalog_names, "Names of the built-in groups.");
  m.def("render_table", &render, py::arg("report_json"),
        "Human-readable rendering of a machine report.");
}
