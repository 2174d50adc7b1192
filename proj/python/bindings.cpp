// Python bindings: scenario text in, plain Python values out.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lcm/checker.hpp"
#include "lcm/report.hpp"
#include "lcm/scenario.hpp"
#include "lcm/simulate.hpp"

namespace py = pybind11;

namespace {

py::dict simulate(const std::string& text, const std::string& adversary, int steps, const std::string& base_dir) {
  const lcm::Scenario s = lcm::parse_scenario(text);
  const auto algo = lcm::load_algorithm(s, base_dir);
  lcm::SimulationResult res;
  {
    py::gil_scoped_release release;
    res = lcm::run_simulate(s, *algo, lcm::AdversarySpec::parse(adversary), steps);
  }
  py::dict out;
  out["trace"] = res.trace;
  out["verdict"] = std::string(lcm::to_string(res.verdict.tag));
  out["step"] = res.verdict.step;
  out["reason"] = res.verdict.reason;
  return out;
}

py::dict verify(const std::string& text, const std::string& mode, std::optional<int> depth,
                std::optional<int> window, std::optional<int> palette, const std::string& base_dir) {
  if (mode != "solution" && mode != "impossibility") throw py::value_error("mode must be solution or impossibility");
  lcm::Scenario s = lcm::parse_scenario(text);
  if (depth) s.bounds.max_depth = *depth;
  if (window) s.bounds.window = *window;
  if (palette) s.bounds.palette = *palette;
  s.bounds.validate();
  lcm::CheckContext ctx = lcm::CheckContext::from(s);
  lcm::Certificate cert;
  if (mode == "solution") {
    const auto algo = lcm::load_algorithm(s, base_dir);
    py::gil_scoped_release release;
    cert = lcm::verify_solution(*algo, ctx);
  } else {
    ctx = ctx.with_palette_bound();
    py::gil_scoped_release release;
    cert = lcm::verify_impossibility(ctx);
  }
  py::dict out;
  out["verdict"] = std::string(lcm::to_string(cert.tag));
  out["reason"] = cert.reason;
  out["explored"] = cert.explored;
  out["certificate"] = lcm::to_text(cert, ctx);
  return out;
}

py::dict report(const std::string& verdicts) {
  const auto r = lcm::build_report(lcm::parse_verdicts(verdicts));
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> matrix;
  for (int i = 0; i < lcm::kVariantCount; ++i) {
    names.push_back(lcm::variant_at(i).str());
    auto& row = matrix.emplace_back();
    for (int j = 0; j < lcm::kVariantCount; ++j) row.emplace_back(lcm::symbol(r.cells[i][j].relation));
  }
  py::dict out;
  out["variants"] = names;
  out["matrix"] = matrix;
  out["text"] = r.to_text();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Simulator and bounded verifier for look-compute-move robots on graphs";
  py::register_exception<lcm::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<lcm::InvariantError>(m, "InvariantError", PyExc_RuntimeError);

  m.def("bundled_scenario", [](const std::string& name) { return std::string(lcm::bundled_scenario(name)); },
        py::arg("problem"));
  m.def("simulate", &simulate, py::arg("scenario"), py::arg("adversary") = "full", py::arg("steps") = 20,
        py::arg("base_dir") = "");
  m.def("verify", &verify, py::arg("scenario"), py::arg("mode"), py::arg("depth") = py::none(),
        py::arg("window") = py::none(), py::arg("palette") = py::none(), py::arg("base_dir") = "");
  m.def("report", &report, py::arg("verdicts"));
}
