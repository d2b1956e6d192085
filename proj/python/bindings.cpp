#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thuelab/bounds.hpp"
#include "thuelab/construct.hpp"
#include "thuelab/exact.hpp"
#include "thuelab/randomized.hpp"
#include "thuelab/repetition.hpp"
#include "thuelab/subdiv.hpp"
#include "thuelab/words.hpp"

namespace py = pybind11;
using namespace thuelab;

namespace {

Graph make_graph(int n, const std::vector<Edge>& edges) { return build_graph(n, edges); }

std::optional<std::vector<int>> witness_of(const std::optional<Witness>& w) {
  if (!w) return std::nullopt;
  return w->sequence;
}

}  // namespace

PYBIND11_MODULE(_thuelab, m) {
  m.doc() = "Nonrepetitive graph colouring toolkit";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def("edges", &Graph::edges)
      .def("neighbours", &Graph::neighbours)
      .def("max_degree", &Graph::max_degree);

  m.def("path_graph", &path_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("complete_graph", &complete_graph);
  m.def("star_graph", &star_graph);

  m.def("thue_word", [](std::size_t n, const std::string& method) {
    return thue_word(n, method == "tm-diff" ? ThueMethod::tm_diff : ThueMethod::leech);
  }, py::arg("length"), py::arg("method") = "leech");
  m.def("find_square", [](const Word& w) -> std::optional<std::pair<std::size_t, std::size_t>> {
    auto h = find_square(w);
    if (!h) return std::nullopt;
    return std::make_pair(h->start, h->half);
  });

  m.def("find_repetitive_path", [](const Graph& g, const std::vector<int>& col) {
    return witness_of(find_repetitive_path(g, col));
  });
  m.def("find_repetitive_stroll", [](const Graph& g, const std::vector<int>& col) {
    return witness_of(find_repetitive_stroll(g, col));
  });
  m.def("find_repetitive_walk", [](const Graph& g, const std::vector<int>& col) {
    return witness_of(find_repetitive_walk_nonboring(g, col));
  });

  m.def("solve", [](const Graph& g, const std::string& param, std::uint64_t budget) {
    SolveOptions opt;
    opt.node_budget = budget;
    SolveResult r = solve(g, parse_parameter(param), opt);
    py::dict d;
    d["parameter"] = parameter_name(r.parameter);
    d["value"] = r.value;
    d["lower_bound"] = r.lower_bound;
    d["exact"] = r.exact;
    d["witness"] = r.witness;
    d["nodes"] = r.nodes;
    return d;
  }, py::arg("graph"), py::arg("param"), py::arg("budget") = 1'000'000'000ULL);

  m.def("count_colourings", [](const Graph& g, int colours, const std::string& kind) {
    BigInt c = count_colourings(g, ListAssignment::uniform(g.n(), colours),
                                kind == "stroll" ? CountKind::stroll : CountKind::path);
    return py::int_(py::str(c.str()));
  }, py::arg("graph"), py::arg("colours"), py::arg("kind") = "path");

  m.def("lll_colour_count", &lll_colour_count);
  m.def("extremal_max_edges", &extremal_max_edges);
  m.def("class_bound", [](const std::string& cls, const std::string& param) {
    BoundReport r = class_bound(parse_class(cls), parse_parameter(param));
    return std::make_pair(r.lower, r.value);
  });

  m.def("tree_rho4", [](const Graph& t, int root) { return tree_rho4(t, root).colours; }, py::arg("tree"),
        py::arg("root") = 0);

  m.def("entropy_colour", [](const Graph& g, int colours, std::uint64_t seed) {
    EntropyOptions opt;
    opt.seed = seed;
    EntropyResult r = entropy_colour(g, colours, opt);
    py::dict d;
    d["success"] = r.success;
    d["colouring"] = r.colouring.colours;
    d["steps"] = r.record.steps;
    d["record"] = r.record.bit_string();
    d["verification"] = r.verification;
    return d;
  }, py::arg("graph"), py::arg("colours"), py::arg("seed") = 0);

  m.def("complete_subdiv1_colour", [](int n) {
    SubdivColouring s = complete_subdiv1_colour(n);
    return std::make_pair(s.map.subdivided, s.colouring.colours);
  });
  m.def("verify_subdivision_complete1", [](int n) {
    SubdivColouring s = complete_subdiv1_colour(n);
    ProjectionResult r = verify_subdivision(s.map, s.colouring.colours);
    return !r.witness && r.complete;
  });
}
