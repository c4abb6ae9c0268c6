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

#include <gtest/gtest.h>

#include <sstream>

#include "sparsecount/graph.hpp"
#include "sparsecount/graph_io.hpp"

namespace sparsecount {
namespace {

TEST(UndirectedGraph, BasicQueries) {
  UndirectedGraph g(4, {{2, 0}, {0, 1}, {1, 2}});
  EXPECT_EQ(g.num_vertices(), 4u);
  EXPECT_EQ(g.num_edges(), 3u);
  EXPECT_TRUE(g.has_edge(0, 2));
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_FALSE(g.has_edge(0, 3));
  EXPECT_EQ(g.degree(3), 0u);
  std::vector<Edge> expected{{0, 1}, {0, 2}, {1, 2}};
  EXPECT_EQ(g.edges(), expected);
}

TEST(UndirectedGraph, RejectsBadEdges) {
  EXPECT_THROW(UndirectedGraph(3, {{1, 1}}), GraphError);
  EXPECT_THROW(UndirectedGraph(3, {{0, 1}, {1, 0}}), GraphError);
  EXPECT_THROW(UndirectedGraph(2, {{0, 2}}), GraphError);
}

TEST(DirWLGraph, OutNeighbors) {
  DirWLGraph g(2, {{0, 1, 1}});
  EXPECT_EQ(out_neighbors(g, 0), (std::vector<OutArc>{{1, 1}}));
  EXPECT_TRUE(out_neighbors(g, 1).empty());
  DirWLGraph h(3, {{0, 1, 1}, {0, 2, 2}});
  EXPECT_EQ(out_neighbors(h, 0), (std::vector<OutArc>{{1, 1}, {2, 2}}));
}

TEST(DirWLGraph, MaxOutdegree) {
  EXPECT_EQ(max_outdegree(DirWLGraph()), 0u);
  EXPECT_EQ(max_outdegree(DirWLGraph(3, {{0, 1, 1}, {0, 2, 1}})), 2u);
  EXPECT_EQ(max_outdegree(DirWLGraph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}})), 1u);
}

TEST(DirWLGraph, Validation) {
  EXPECT_THROW(DirWLGraph(2, {{0, 0, 1}}), GraphError);
  EXPECT_THROW(DirWLGraph(2, {{0, 1, 0}}), GraphError);
  EXPECT_THROW(DirWLGraph(2, {{0, 1, 1}, {1, 0, 2}}), GraphError);
  EXPECT_THROW(DirWLGraph(2, {{0, 1, 1}, {0, 1, 2}}), GraphError);
  EXPECT_THROW(DirWLGraph(2, {{0, 5, 1}}), GraphError);
  EXPECT_THROW(DirWLGraph(2, {}, {0}), GraphError);
}

TEST(DirWLGraph, WeightsLabelsAndLayers) {
  DirWLGraph g(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 2}}, {7, 7, 3});
  EXPECT_EQ(g.arc_weight(1, 2), 2u);
  EXPECT_FALSE(g.arc_weight(2, 1).has_value());
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_EQ(g.max_weight(), 2u);
  EXPECT_EQ(g.layer(2), (std::vector<Arc>{{1, 2, 2}}));
  auto sevens = g.vertices_with_label(7);
  EXPECT_EQ(std::vector<VertexId>(sevens.begin(), sevens.end()), (std::vector<VertexId>{0, 1}));
  EXPECT_TRUE(g.vertices_with_label(9).empty());
  EXPECT_EQ(g.in_degree(2), 2u);

  std::vector<Arc> clash{{2, 0, 3}};
  EXPECT_THROW(g.with_arcs(clash), GraphError);
}

TEST(DirWLGraph, InducedSubgraph) {
  DirWLGraph tri(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  std::vector<VertexId> all{0, 1, 2};
  auto full = induced_subgraph(tri, all);
  EXPECT_EQ(std::vector<Arc>(full.graph.arcs().begin(), full.graph.arcs().end()),
            std::vector<Arc>(tri.arcs().begin(), tri.arcs().end()));
  EXPECT_EQ(induced_subgraph(tri, {}).graph.num_vertices(), 0u);
  std::vector<VertexId> ab{0, 1};
  auto sub = induced_subgraph(tri, ab);
  EXPECT_EQ(sub.graph.num_arcs(), 1u);
  EXPECT_EQ(sub.graph.arcs()[0], (Arc{0, 1, 1}));
}

TEST(EdgeList, ParsesCommentsIsolatedAndSparseIds) {
  std::istringstream in("# header\n10 20\n\n20 30\n  # indented comment\n99\n");
  auto loaded = parse_edge_list(in);
  EXPECT_EQ(loaded.graph.num_vertices(), 4u);
  EXPECT_EQ(loaded.graph.num_edges(), 2u);
  EXPECT_EQ(loaded.original_ids, (std::vector<std::int64_t>{10, 20, 30, 99}));
  EXPECT_EQ(loaded.graph.degree(3), 0u);
}

TEST(EdgeList, ErrorsNameTheLine) {
  std::istringstream loop("0 1\n2 2\n");
  try {
    parse_edge_list(loop);
    FAIL() << "expected GraphError";
  } catch (const GraphError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  std::istringstream dup("0 1\n1 0\n");
  EXPECT_THROW(parse_edge_list(dup), GraphError);
  std::istringstream junk("0 x\n");
  EXPECT_THROW(parse_edge_list(junk), GraphError);
  std::istringstream three("0 1 2\n");
  EXPECT_THROW(parse_edge_list(three), GraphError);
}

TEST(EdgeList, RoundTrip) {
  UndirectedGraph g(5, {{0, 1}, {1, 2}, {0, 3}});
  std::stringstream buf;
  write_edge_list(buf, g);
  auto back = parse_edge_list(buf).graph;
  EXPECT_EQ(back.num_vertices(), 5u);
  EXPECT_EQ(back.edges(), g.edges());
}

TEST(WLDump, RoundTrip) {
  DirWLGraph g(3, {{0, 1, 1}, {2, 1, 3}}, {kTrivialLabel, 4, 0});
  std::stringstream buf;
  write_wl_dump(buf, g);
  auto back = parse_wl_dump(buf);
  EXPECT_EQ(std::vector<Arc>(back.arcs().begin(), back.arcs().end()),
            std::vector<Arc>(g.arcs().begin(), g.arcs().end()));
  EXPECT_EQ(back.label(0), kTrivialLabel);
  EXPECT_EQ(back.label(1), 4u);
}

}  // namespace
}  // namespace sparsecount
