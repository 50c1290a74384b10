// Copyright 2026 The flift Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "flift/base_graph.h"
#include "flift/lift.h"
#include "flift/poly_matrix.h"
#include "flift/spectral.h"
#include "flift/verify.h"

namespace py = pybind11;

namespace flift {
namespace {

py::list PolyMatrixCoefficients(const PolyMatrix& b) {
  py::list rows;
  for (int i = 0; i < b.n(); ++i) {
    py::list row;
    for (int j = 0; j < b.n(); ++j) row.append(b.at(i, j).coeffs());
    rows.append(row);
  }
  return rows;
}

py::dict ReportDict(const SpectrumReport& report) {
  py::list per_r;
  for (const RBlockReport& block : report.per_r) {
    py::list clusters;
    for (const EigenCluster& c : block.clusters) {
      clusters.append(py::dict(py::arg("value") = c.value, py::arg("alg") = c.algebraic,
                               py::arg("valid") = c.valid));
    }
    per_r.append(py::dict(py::arg("r") = block.r, py::arg("o") = block.order,
                          py::arg("bad") = block.bad, py::arg("clusters") = clusters));
  }
  double worst = 0.0;
  for (const LiftedEigenvector& v : report.eigvectors) worst = std::max(worst, v.residual);
  return py::dict(py::arg("N") = report.N, py::arg("per_r") = per_r,
                  py::arg("spectrum") = report.spectrum, py::arg("complete") = report.complete,
                  py::arg("residual_failures") = report.residual_failures,
                  py::arg("worst_residual") = worst);
}

}  // namespace
}  // namespace flift

PYBIND11_MODULE(_core, m) {
  using namespace flift;
  m.doc() = "Factored lifts of combined voltage graphs and their spectra";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  py::class_<CombinedBaseGraph>(m, "BaseGraph")
      .def(py::init([](int order, bool digraph) {
             return CombinedBaseGraph(order, digraph ? Directedness::kDigraph
                                                     : Directedness::kGraph);
           }),
           py::arg("m"), py::arg("digraph") = false)
      .def("add_vertex", &CombinedBaseGraph::AddVertex, py::arg("name"), py::arg("index"))
      .def("add_edge", &CombinedBaseGraph::AddEdge, py::arg("u"), py::arg("v"), py::arg("g"))
      .def("add_arc", &CombinedBaseGraph::AddArc, py::arg("u"), py::arg("v"), py::arg("g"))
      .def_property_readonly("m", &CombinedBaseGraph::m)
      .def_property_readonly("is_digraph", &CombinedBaseGraph::is_digraph)
      .def_property_readonly("lift_order", &CombinedBaseGraph::LiftOrder)
      .def_property_readonly("vertices",
                             [](const CombinedBaseGraph& g) {
                               std::vector<std::pair<std::string, int>> out;
                               for (const VertexSpec& v : g.vertices()) {
                                 out.emplace_back(v.name, v.index);
                               }
                               return out;
                             })
      .def_property_readonly("arcs",
                             [](const CombinedBaseGraph& g) {
                               std::vector<std::tuple<int, int, int>> out;
                               for (const ArcSpec& a : g.arcs()) {
                                 out.emplace_back(a.tail, a.head, a.voltage);
                               }
                               return out;
                             })
      .def("validate", [](const CombinedBaseGraph& g) { return Validate(g); })
      .def("serialize", [](const CombinedBaseGraph& g) { return SerializeBaseGraph(g); })
      .def(py::self == py::self)
      .def("__repr__", [](const CombinedBaseGraph& g) {
        return "<BaseGraph m=" + std::to_string(g.m()) + " vertices=" +
               std::to_string(g.num_vertices()) + " arcs=" + std::to_string(g.arcs().size()) +
               ">";
      });

  m.def("parse_base_graph", [](const std::string& text) { return ParseBaseGraph(text); },
        py::arg("text"));
  m.def("load_base_graph", &LoadBaseGraph, py::arg("path"));
  m.def("resolve_input", &ResolveInput, py::arg("input"),
        "A builtin name (f3c6, j42) or a .cvg path.");
  m.def("builtin_names", &BuiltinNames);

  m.def(
      "build_lift",
      [](const CombinedBaseGraph& base, const std::string& mode) {
        const FactoredLift lift = BuildLift(base, ParseMode(mode));
        std::vector<std::string> labels;
        for (int i = 0; i < lift.order(); ++i) labels.push_back(lift.VertexLabel(i));
        return py::make_tuple(Eigen::MatrixXi(lift.adjacency()), labels);
      },
      py::arg("base"), py::arg("mode") = "multiplicity",
      "Returns (adjacency, vertex labels).");
  m.def(
      "translation_map",
      [](const CombinedBaseGraph& base, int g, const std::string& mode) {
        return TranslationMap(BuildLift(base, ParseMode(mode)), g);
      },
      py::arg("base"), py::arg("g"), py::arg("mode") = "multiplicity");
  m.def(
      "check_translation_action",
      [](const CombinedBaseGraph& base, const std::string& mode) {
        return CheckTranslationAction(BuildLift(base, ParseMode(mode)));
      },
      py::arg("base"), py::arg("mode") = "multiplicity");

  m.def(
      "ordinary_matrix",
      [](const CombinedBaseGraph& base) { return PolyMatrixCoefficients(OrdinaryMatrix(base)); },
      py::arg("base"), "Coefficient lists: entry [i][j][e] multiplies z^e.");
  m.def(
      "associated_matrix",
      [](const CombinedBaseGraph& base) { return PolyMatrixCoefficients(AssociatedMatrix(base)); },
      py::arg("base"));
  m.def(
      "evaluate_matrix",
      [](const CombinedBaseGraph& base, int r) {
        return Eigen::MatrixXcd(EvaluateMatrix(AssociatedMatrix(base), r));
      },
      py::arg("base"), py::arg("r"), "B(zeta^r) of the associated base graph.");

  m.def(
      "full_spectrum",
      [](const CombinedBaseGraph& base, const std::string& mode) {
        return ReportDict(FullSpectrum(base, ParseMode(mode)));
      },
      py::arg("base"), py::arg("mode") = "multiplicity");
  m.def(
      "direct_spectrum",
      [](const CombinedBaseGraph& base, const std::string& mode) {
        return DirectSpectrum(BuildLift(base, ParseMode(mode)));
      },
      py::arg("base"), py::arg("mode") = "multiplicity");
  m.def("token_graph_cycle", &TokenGraphCycle, py::arg("n"), py::arg("k"));
  m.def(
      "compare_multisets",
      [](const std::vector<Complex>& a, const std::vector<Complex>& b, double tol) {
        const ComparisonReport r = CompareMultisets(a, b, tol);
        return py::make_tuple(r.pass, r.max_gap);
      },
      py::arg("left"), py::arg("right"), py::arg("tol") = 1e-6, "Returns (pass, max_gap).");
  m.def(
      "table", [](const CombinedBaseGraph& base) { return TableReport(base); }, py::arg("base"));
  m.def(
      "random_sweep",
      [](uint64_t seed, int trials, int max_m, int max_n, double tol) {
        SweepOptions opt;
        opt.seed = seed;
        opt.trials = trials;
        opt.max_m = max_m;
        opt.max_n = max_n;
        opt.compare_tol = tol;
        return RandomSweep(opt).Json();
      },
      py::arg("seed") = 1, py::arg("trials") = 100, py::arg("max_m") = 12, py::arg("max_n") = 5,
      py::arg("tol") = 1e-6, "JSON sweep report.");
}
