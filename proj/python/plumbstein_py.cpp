// Python bindings: graph text in, JSON text out. Exact integers cross as
// decimal strings where they may exceed 64 bits.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "plumbstein/cli.hpp"
#include "plumbstein/errors.hpp"
#include "plumbstein/serialize.hpp"
#include "plumbstein/stein.hpp"
#include "plumbstein/torsion.hpp"

namespace py = pybind11;
using namespace plumbstein;

namespace {

PlumbingGraph load(const std::string& text) { return parse_graph(text); }

py::tuple run(const std::vector<std::string>& args) {
  std::vector<std::string> full{"plumbstein"};
  full.insert(full.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = run_cli(full, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base);
  auto domain = py::register_exception<DomainError>(m, "DomainError", base);
  py::register_exception<DivisionByZero>(m, "DivisionByZero", domain);
  auto unsupported = py::register_exception<UnsupportedShape>(m, "UnsupportedShape", base);
  py::register_exception<SearchExhausted>(m, "SearchExhausted", unsupported);

  m.def("parse_graph", [](const std::string& text) { return json(load(text)).dump(); });
  m.def("validate", [](const std::string& text) { return json(validate(load(text))).dump(); });
  m.def("torus_classes", [](const std::string& text) {
    const PlumbingGraph g = load(text);
    return tori_to_json(g, torus_classes(g)).dump();
  });
  m.def("decompose", [](const std::string& text) {
    const PlumbingGraph g = load(text);
    return decomposition_to_json(g, decompose(g)).dump();
  });
  m.def("wrap", [](const std::string& text) { return json(wrap(load(text))).dump(); });
  m.def("assemble", [](const std::string& text) { return json(assemble(load(text))).dump(); });
  m.def("lower_bound", [](const std::string& text) { return lower_bound(load(text)).str(); });
  m.def("family_y", [](const std::string& text) { return json(detect_family_y(load(text))).dump(); });
  m.def("mintwist_upper_bound", [](const std::string& text) {
    return mintwist_upper_bound(detect_family_y(load(text))).str();
  });
  m.def("torsion_upper_bound", [](const std::string& text, long long order) {
    return torsion_upper_bound(detect_family_y(load(text)), order).str();
  }, py::arg("text"), py::arg("m") = 1);
  m.def("ncf_expand", [](const std::string& fraction) { return ncf_expand(Fraction::parse(fraction)).str(); });
  m.def("ncf_eval", [](const std::string& cf) { return ncf_eval(ContinuedFraction::parse(cf)).str(); });
  m.def("transform_slope", [](const std::string& cf, const std::string& slope, const std::string& kind) {
    const ContinuedFraction c = ContinuedFraction::parse(cf);
    const GluingMatrix g = kind == "chain"      ? chain_gluing_matrix(c)
                           : kind == "boundary" ? boundary_gluing_matrix(c)
                           : kind == "leg"      ? leg_gluing_matrix(c)
                                                : throw DomainError("unknown matrix kind " + kind);
    return transform_slope(g, Fraction::parse(slope)).str();
  }, py::arg("cf"), py::arg("slope"), py::arg("kind") = "boundary");
  m.def("run_cli", &run, "Runs the command line tool in process; returns (exit code, stdout, stderr).");
}
