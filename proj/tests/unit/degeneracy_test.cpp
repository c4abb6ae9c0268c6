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

#include "sparsecount/degeneracy.hpp"
#include "sparsecount/generators.hpp"
#include "sparsecount/pattern.hpp"

namespace sparsecount {
namespace {

TEST(Degeneracy, Kappa) {
  EXPECT_EQ(degeneracy_order(path_graph(3)).kappa, 1u);
  EXPECT_EQ(degeneracy_order(complete_graph(4)).kappa, 3u);
  EXPECT_EQ(degeneracy_order(cycle_graph(6)).kappa, 2u);
  EXPECT_EQ(degeneracy_order(UndirectedGraph(3, {})).kappa, 0u);
}

TEST(Degeneracy, TiesBreakByLowestId) {
  // Every vertex of C_6 has degree 2; vertex 0 goes first, then its
  // neighbors drop to degree 1 and the lowest of them (1) follows.
  auto order = degeneracy_order(cycle_graph(6)).order;
  EXPECT_EQ(order, (std::vector<VertexId>{0, 1, 2, 3, 4, 5}));
  auto star = degeneracy_order(star_graph(3)).order;
  EXPECT_EQ(star.front(), 1u);  // leaves before the center
}

TEST(Degeneracy, OrderIsAPermutation) {
  auto g = generate_gnp(40, 0.2, 3);
  auto d = degeneracy_order(g);
  ASSERT_EQ(d.order.size(), g.num_vertices());
  for (std::size_t i = 0; i < d.order.size(); ++i) EXPECT_EQ(d.position[d.order[i]], i);
}

TEST(DegeneracyOrient, Examples) {
  auto single = degeneracy_orient(complete_graph(2), 1);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_TRUE(is_acyclic(DirWLGraph(2, single)));

  auto c6 = degeneracy_orient(cycle_graph(6), 1);
  DirWLGraph d(6, c6);
  EXPECT_EQ(c6.size(), 6u);
  EXPECT_LE(max_outdegree(d), 2u);
  EXPECT_TRUE(is_acyclic(d));

  DirWLGraph s(4, degeneracy_orient(star_graph(3), 1));
  EXPECT_LE(max_outdegree(s), 1u);
}

TEST(DegeneracyOrient, OutdegreeBoundedByKappa) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = generate_bounded_degeneracy(200, 1 + seed % 4, seed);
    auto kappa = degeneracy_order(g).kappa;
    EXPECT_LE(kappa, 1 + seed % 4);
    DirWLGraph d(g.num_vertices(), degeneracy_orient(g, 1));
    EXPECT_EQ(max_outdegree(d), kappa);
    EXPECT_TRUE(is_acyclic(d));
    EXPECT_EQ(d.num_arcs(), g.num_edges());
  }
}

TEST(DegeneracyOrient, EdgeSetCarriesWeight) {
  EdgeSet layer{3, {{0, 2}, {2, 4}}};
  auto arcs = degeneracy_orient(5, layer);
  ASSERT_EQ(arcs.size(), 2u);
  for (const Arc& a : arcs) EXPECT_EQ(a.weight, 3u);
}

}  // namespace
}  // namespace sparsecount
