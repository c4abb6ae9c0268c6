// Copyright 2026 The sparsecount Authors
//
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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sparsecount/counting.hpp"
#include "sparsecount/degeneracy.hpp"
#include "sparsecount/generators.hpp"
#include "sparsecount/graph_io.hpp"
#include "sparsecount/pattern.hpp"

namespace py = pybind11;
using namespace sparsecount;

namespace {

py::int_ to_py(const BigInt& x) { return py::int_(py::str(to_string(x))); }

UndirectedGraph make_graph(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<Edge> e;
  e.reserve(edges.size());
  for (auto [u, v] : edges) e.push_back({u, v});
  return UndirectedGraph(n, e);
}

std::vector<std::pair<VertexId, VertexId>> edge_pairs(const UndirectedGraph& g) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

CountOptions options(std::optional<std::size_t> t, std::size_t threads, bool exact_fallback) {
  CountOptions o;
  o.depth = t;
  o.threads = threads;
  o.exact_fallback = exact_fallback;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact homomorphism and subgraph counting in sparse graphs";

  py::register_exception<NoWidth1Decomposition>(m, "NoWidth1Decomposition", PyExc_RuntimeError);
  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<OracleLimitExceeded>(m, "OracleLimitExceeded", PyExc_ValueError);

  py::class_<UndirectedGraph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_property_readonly("num_vertices", &UndirectedGraph::num_vertices)
      .def_property_readonly("num_edges", &UndirectedGraph::num_edges)
      .def("edges", &edge_pairs, "Edges (u, v) with u < v, sorted")
      .def("has_edge", &UndirectedGraph::has_edge)
      .def("degree", &UndirectedGraph::degree)
      .def("__repr__", [](const UndirectedGraph& g) {
        return "<Graph n=" + std::to_string(g.num_vertices()) + " m=" + std::to_string(g.num_edges()) + ">";
      });

  m.def("read_edge_list", [](const std::string& path) { return read_edge_list(path).graph; }, py::arg("path"));
  m.def("write_edge_list", [](const std::string& path, const UndirectedGraph& g) { write_edge_list(path, g); },
        py::arg("path"), py::arg("graph"));

  m.def(
      "count_homomorphisms",
      [](const UndirectedGraph& host, const UndirectedGraph& pattern, std::optional<std::size_t> t,
         std::size_t threads, bool exact_fallback) {
        BigInt r;
        {
          py::gil_scoped_release release;
          r = count_homomorphisms(host, pattern, options(t, threads, exact_fallback));
        }
        return to_py(r);
      },
      py::arg("host"), py::arg("pattern"), py::arg("t") = py::none(), py::arg("threads") = 1,
      py::arg("exact_fallback") = false);
  m.def(
      "count_subgraphs",
      [](const UndirectedGraph& host, const UndirectedGraph& pattern, std::size_t threads, bool exact_fallback) {
        BigInt r;
        {
          py::gil_scoped_release release;
          r = count_subgraphs(host, pattern, options(std::nullopt, threads, exact_fallback));
        }
        return to_py(r);
      },
      py::arg("host"), py::arg("pattern"), py::arg("threads") = 1, py::arg("exact_fallback") = false);

  m.def("brute_force_hom", [](const UndirectedGraph& g, const UndirectedGraph& h, std::size_t cap) {
    return to_py(brute_force_hom(g, h, cap));
  }, py::arg("host"), py::arg("pattern"), py::arg("cap") = kBruteForceHomCap);
  m.def("brute_force_sub", [](const UndirectedGraph& g, const UndirectedGraph& h, std::size_t cap) {
    return to_py(brute_force_sub(g, h, cap));
  }, py::arg("host"), py::arg("pattern"), py::arg("cap") = kBruteForceSubCap);

  m.def("licl", &licl, py::arg("pattern"));
  m.def("min_extension_depth", &min_extension_depth, py::arg("licl"));
  m.def("automorphism_count", &automorphism_count, py::arg("pattern"));
  m.def("spasm", [](const UndirectedGraph& h) {
    py::list out;
    for (auto& e : spasm(h)) {
      auto num = to_py(boost::multiprecision::numerator(e.coefficient));
      auto den = to_py(boost::multiprecision::denominator(e.coefficient));
      out.append(py::make_tuple(std::move(e.quotient), num, den));
    }
    return out;
  }, py::arg("pattern"), "List of (quotient, numerator, denominator)");
  m.def("degeneracy", [](const UndirectedGraph& g) {
    auto d = degeneracy_order(g);
    return py::make_tuple(d.kappa, d.order);
  }, py::arg("graph"), "(kappa, peeling order)");

  m.def("path_graph", &path_graph, py::arg("vertices"));
  m.def("cycle_graph", &cycle_graph, py::arg("length"));
  m.def("complete_graph", &complete_graph, py::arg("n"));
  m.def("star_graph", &star_graph, py::arg("leaves"));
  m.def("generate_subdivision", &generate_subdivision, py::arg("graph"), py::arg("t"));
  m.def("generate_double_subdivision", &generate_double_subdivision, py::arg("graph"), py::arg("t"));
  m.def("generate_bounded_degeneracy", &generate_bounded_degeneracy, py::arg("n"), py::arg("c"), py::arg("seed"));
  m.def("generate_gnp", &generate_gnp, py::arg("n"), py::arg("p"), py::arg("seed"));
}
