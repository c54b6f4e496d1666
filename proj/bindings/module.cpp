#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "meander/oracles.hpp"
#include "meander/reduction.hpp"
#include "meander/search.hpp"
#include "meander/segments.hpp"
#include "meander/svg.hpp"

namespace py = pybind11;
using namespace meander;

PYBIND11_MODULE(meander, m) {
  m.doc() = "Meander graphs of seaweed type: index, Frobenius tests, reductions, "
            "segment flow, census and gcd-criterion search.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<NotApplicable>(m, "NotApplicable", PyExc_ValueError);

  py::class_<MeanderType>(m, "MeanderType")
      .def(py::init([](std::vector<int> top, std::vector<int> bottom) {
             return bottom.empty() ? make_type(std::move(top))
                                   : make_type(std::move(top), std::move(bottom));
           }),
           py::arg("top"), py::arg("bottom") = std::vector<int>{})
      .def_readonly("top", &MeanderType::top)
      .def_readonly("bottom", &MeanderType::bottom)
      .def_property_readonly("n", &MeanderType::total)
      .def("__str__", &format_type)
      .def("__repr__",
           [](const MeanderType& t) { return "MeanderType('" + format_type(t) + "')"; })
      .def("__eq__", [](const MeanderType& a, const MeanderType& b) { return a == b; })
      .def("__hash__",
           [](const MeanderType& t) { return py::hash(py::str(format_type(t))); });

  py::class_<MeanderGraph>(m, "MeanderGraph")
      .def_readonly("n", &MeanderGraph::n)
      .def_readonly("top_edges", &MeanderGraph::top_edges)
      .def_readonly("bottom_edges", &MeanderGraph::bottom_edges)
      .def_readonly("top_blocks", &MeanderGraph::top_blocks)
      .def_readonly("bottom_blocks", &MeanderGraph::bottom_blocks);

  py::class_<ComponentSummary>(m, "ComponentSummary")
      .def_readonly("paths", &ComponentSummary::paths)
      .def_readonly("cycles", &ComponentSummary::cycles)
      .def_property_readonly("components", &ComponentSummary::components)
      .def("__eq__",
           [](const ComponentSummary& a, const ComponentSummary& b) { return a == b; })
      .def("__repr__", [](const ComponentSummary& s) {
        return "ComponentSummary(paths=" + std::to_string(s.paths) +
               ", cycles=" + std::to_string(s.cycles) + ")";
      });

  m.def("parse_type", &parse_type, py::arg("text"));
  m.def("format_type", &format_type, py::arg("type"));
  m.def("build_meander", &build_meander, py::arg("type"));
  m.def("analyze_components", &analyze_components, py::arg("graph"));
  m.def("index_of", &index_of, py::arg("graph"));
  m.def("is_frobenius", &is_frobenius, py::arg("graph"));

  m.def("reduce_tail", &reduce_tail, py::arg("type"));
  m.def("general_reduce", &general_reduce, py::arg("type"));
  m.def("normalize", &normalize, py::arg("type"));
  m.def("normalize_chain", &normalize_chain, py::arg("type"));

  m.def("frobenius_two_blocks", &frobenius_two_blocks, py::arg("a"), py::arg("b"));
  m.def("frobenius_three_blocks", &frobenius_three_blocks, py::arg("a"), py::arg("b"),
        py::arg("c"));
  m.def("frobenius_even_family", &frobenius_even_family, py::arg("a"), py::arg("k"),
        py::arg("b"));
  m.def("predicted_components_doubled", &predicted_components_doubled, py::arg("a"),
        py::arg("k"));
  m.def("predicted_components_uniform", &predicted_components_uniform, py::arg("a"),
        py::arg("n"));

  py::enum_<Side>(m, "Side").value("top", Side::top).value("bottom", Side::bottom);

  py::class_<SegmentState>(m, "SegmentState")
      .def_readonly("label", &SegmentState::label)
      .def_property_readonly("exterior", &SegmentState::is_exterior)
      .def("__eq__", [](const SegmentState& a, const SegmentState& b) { return a == b; })
      .def("__repr__", [](const SegmentState& s) {
        return s.is_exterior() ? std::string("SegmentState(exterior)")
                               : "SegmentState(" + std::to_string(s.label) + ")";
      });

  py::enum_<TraceEnd>(m, "TraceEnd")
      .value("exterior", TraceEnd::exterior)
      .value("end_segment", TraceEnd::end_segment)
      .value("cycle", TraceEnd::cycle);

  py::class_<EscapeTrace>(m, "EscapeTrace")
      .def_readonly("states", &EscapeTrace::states)
      .def_readonly("end", &EscapeTrace::end)
      .def_readonly("end_side", &EscapeTrace::end_side);

  m.def(
      "side_segment_map",
      [](const MeanderGraph& g, int label, Side side) {
        return side_segment_map(g, interior(label), side);
      },
      py::arg("graph"), py::arg("segment"), py::arg("side"));
  m.def("top_end_segments", &top_end_segments, py::arg("graph"));
  m.def("has_cycle_via_segments", &has_cycle_via_segments, py::arg("graph"));
  m.def("escape_trace", &escape_trace, py::arg("graph"), py::arg("segment"));

  py::class_<CensusRow>(m, "CensusRow")
      .def_readonly("type", &CensusRow::type)
      .def_readonly("n", &CensusRow::n)
      .def_readonly("paths", &CensusRow::paths)
      .def_readonly("cycles", &CensusRow::cycles)
      .def_readonly("index", &CensusRow::index)
      .def_readonly("frobenius", &CensusRow::frobenius);

  py::class_<GcdCondition>(m, "GcdCondition")
      .def(py::init([](std::vector<int> alpha, std::vector<int> beta) {
             return GcdCondition{std::move(alpha), std::move(beta)};
           }),
           py::arg("alpha"), py::arg("beta"))
      .def_readonly("alpha", &GcdCondition::alpha)
      .def_readonly("beta", &GcdCondition::beta)
      .def("__eq__", [](const GcdCondition& a, const GcdCondition& b) { return a == b; });

  py::class_<EliminatedCondition>(m, "EliminatedCondition")
      .def_readonly("cond", &EliminatedCondition::cond)
      .def_readonly("witness", &EliminatedCondition::witness);

  py::class_<FalsifyReport>(m, "FalsifyReport")
      .def_readonly("bound", &FalsifyReport::bound)
      .def_readonly("parts", &FalsifyReport::parts)
      .def_readonly("n_max", &FalsifyReport::n_max)
      .def_readonly("conditions_checked", &FalsifyReport::conditions_checked)
      .def_readonly("survivors", &FalsifyReport::survivors)
      .def_readonly("eliminated", &FalsifyReport::eliminated)
      .def("json", [](const FalsifyReport& r) { return falsify_report_json(r); });

  m.def("census", &census_rows, py::arg("n_max"), py::arg("parts"));
  m.def("condition_holds", &condition_holds, py::arg("cond"), py::arg("type"));
  m.def("canonical_condition", &canonical_condition, py::arg("cond"));
  m.def("falsify_conditions", &falsify_conditions, py::arg("bound"), py::arg("parts"),
        py::arg("n_max"), py::arg("jobs") = 1);

  py::class_<TheoremCheck>(m, "TheoremCheck")
      .def_readonly("name", &TheoremCheck::name)
      .def_readonly("instances", &TheoremCheck::instances)
      .def_readonly("passed", &TheoremCheck::passed)
      .def_readonly("counterexample", &TheoremCheck::counterexample);

  py::class_<VerifyReport>(m, "VerifyReport")
      .def_readonly("n_max", &VerifyReport::n_max)
      .def_readonly("checks", &VerifyReport::checks)
      .def_property_readonly("all_passed", &VerifyReport::all_passed)
      .def("json", &verify_report_json);

  m.def("verify_theorem_suite", py::overload_cast<int>(&verify_theorem_suite),
        py::arg("n_max"));

  m.def("render_svg", &render_svg, py::arg("type"));
}
