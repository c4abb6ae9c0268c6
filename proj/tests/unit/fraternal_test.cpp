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

#include <algorithm>

#include "sparsecount/degeneracy.hpp"
#include "sparsecount/fraternal.hpp"
#include "sparsecount/generators.hpp"
#include "sparsecount/pattern.hpp"
#include "sparsecount/product.hpp"

namespace sparsecount {
namespace {

TEST(LabelPattern, SelfLabels) {
  auto k2 = label_pattern(complete_graph(2));
  EXPECT_EQ(k2.labels, (std::vector<Label>{0, 1}));
  auto c6 = label_pattern(cycle_graph(6));
  EXPECT_EQ(c6.graph.edges(), cycle_graph(6).edges());
  for (VertexId v = 0; v < 6; ++v) EXPECT_EQ(c6.labels[v], v);
  EXPECT_EQ(label_pattern(UndirectedGraph()).labels.size(), 0u);
}

TEST(PatternProduct, Sizes) {
  auto k2k2 = pattern_product(label_pattern(complete_graph(2)), complete_graph(2));
  EXPECT_EQ(k2k2.graph.num_vertices(), 4u);
  EXPECT_EQ(k2k2.graph.num_edges(), 2u);
  EXPECT_TRUE(k2k2.graph.has_edge(k2k2.vertex(0, 0), k2k2.vertex(1, 1)));
  EXPECT_TRUE(k2k2.graph.has_edge(k2k2.vertex(0, 1), k2k2.vertex(1, 0)));

  auto k2p3 = pattern_product(label_pattern(complete_graph(2)), path_graph(3));
  EXPECT_EQ(k2p3.graph.num_vertices(), 6u);
  EXPECT_EQ(k2p3.graph.num_edges(), 4u);

  auto empty = pattern_product(label_pattern(cycle_graph(5)), UndirectedGraph(7, {}));
  EXPECT_EQ(empty.graph.num_edges(), 0u);
  EXPECT_EQ(empty.graph.num_vertices(), 35u);
}

TEST(PatternProduct, FibersCarryPatternLabel) {
  auto f = pattern_product(label_pattern(cycle_graph(4)), generate_gnp(6, 0.5, 1));
  for (VertexId x = 0; x < f.graph.num_vertices(); ++x) {
    auto [u, v] = f.split(x);
    EXPECT_EQ(f.labels[x], u);
    EXPECT_EQ(f.vertex(u, v), x);
  }
}

TEST(ExtensionEdges, Examples) {
  DirWLGraph wedge(3, {{0, 1, 1}, {0, 2, 1}});
  auto e = extension_edges(wedge, 2);
  EXPECT_EQ(e.weight, 2u);
  EXPECT_EQ(e.pairs, (std::vector<Edge>{{1, 2}}));
  EXPECT_TRUE(extension_edges(wedge, 3).pairs.empty());

  DirWLGraph path(3, {{0, 1, 1}, {1, 2, 1}});
  EXPECT_TRUE(extension_edges(path, 2).pairs.empty());

  // Oriented 6-cycle with sources 0, 2, 4: sinks 1, 3, 5 become a triangle.
  DirWLGraph c6(6, {{0, 1, 1}, {0, 5, 1}, {2, 1, 1}, {2, 3, 1}, {4, 3, 1}, {4, 5, 1}});
  EXPECT_EQ(extension_edges(c6, 2).pairs, (std::vector<Edge>{{1, 3}, {1, 5}, {3, 5}}));
}

TEST(ExtensionEdges, SkipsAdjacentPairs) {
  DirWLGraph tri(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}});
  EXPECT_TRUE(extension_edges(tri, 2).pairs.empty());
}

TEST(PatternExtensions, Examples) {
  auto k2 = enumerate_pattern_extensions(label_pattern(complete_graph(2)), 1);
  EXPECT_EQ(k2.size(), 2u);

  // P_3 at depth 2: the 4 orientations of the path; the out-out wedge one
  // branches in two.
  auto p3 = enumerate_pattern_extensions(label_pattern(path_graph(3)), 2);
  EXPECT_EQ(p3.size(), 5u);
  std::size_t with_layer2 = std::count_if(p3.begin(), p3.end(), [](const auto& m) { return !m.layer(2).empty(); });
  EXPECT_EQ(with_layer2, 2u);
  for (const auto& m : p3) {
    EXPECT_EQ(m.depth, 2u);
    EXPECT_TRUE(validate_fraternity(m));
  }
}

TEST(PatternExtensions, CapIsEnforced) {
  EXPECT_THROW(enumerate_pattern_extensions(label_pattern(cycle_graph(6)), 2, 10), ExtensionLimitExceeded);
}

TEST(OptimalExtension, DepthOneIsDegeneracyOrientation) {
  auto g = generate_bounded_degeneracy(30, 2, 9);
  auto f = pattern_product(label_pattern(cycle_graph(3)), g);
  auto ext = optimal_extension(f, 1);
  auto expected = degeneracy_orient(f.graph, 1);
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(std::vector<Arc>(ext.graph.arcs().begin(), ext.graph.arcs().end()), expected);
  EXPECT_EQ(ext.graph.label(f.vertex(2, 5)), 2u);
}

TEST(OptimalExtension, TreeLayerTwoClosesWedges) {
  auto tree = generate_bounded_degeneracy(25, 1, 4);
  std::vector<Label> none;
  auto ext = optimal_extension(tree, none, 2);
  auto base = DirWLGraph(25, degeneracy_orient(tree, 1));
  auto layer = ext.layer(2);
  EXPECT_EQ(layer.size(), extension_edges(base, 2).pairs.size());
  for (const Arc& a : layer) {
    bool wedge = false;
    for (VertexId z = 0; z < 25; ++z)
      wedge = wedge || (base.arc_weight(z, a.from) && base.arc_weight(z, a.to));
    EXPECT_TRUE(wedge);
  }
}

TEST(OptimalExtension, EdgelessStaysArcless) {
  std::vector<Label> none;
  EXPECT_EQ(optimal_extension(UndirectedGraph(10, {}), none, 3).graph.num_arcs(), 0u);
}

TEST(Fraternity, Examples) {
  for (const auto& o : acyclic_orientations(cycle_graph(5))) EXPECT_TRUE(validate_fraternity({o, 1}));
  DirWLGraph wedge(3, {{0, 1, 1}, {0, 2, 1}});
  EXPECT_FALSE(validate_fraternity({wedge, 2}));
  EXPECT_TRUE(validate_fraternity({wedge.with_arcs(std::vector<Arc>{{2, 1, 2}}), 2}));
  // A weight-2 arc with no supporting wedge is not fraternal.
  EXPECT_FALSE(validate_fraternity({DirWLGraph(2, {{0, 1, 2}}), 2}));
}

TEST(Fraternity, RandomHostExtensions) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = generate_bounded_degeneracy(60, 1 + seed % 3, seed);
    std::vector<Label> none;
    for (std::size_t t : {2, 3}) EXPECT_TRUE(validate_fraternity(optimal_extension(g, none, t))) << seed;
  }
}

}  // namespace
}  // namespace sparsecount
