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

// Frozen reference values. Each one was fixed from an independent hand or
// matrix computation before the counting code existed.

#include <gtest/gtest.h>

#include "sparsecount/counting.hpp"
#include "sparsecount/generators.hpp"
#include "sparsecount/pattern.hpp"

namespace sparsecount {
namespace {

// Hom(C_l, G) = trace(A^l).
std::uint64_t closed_walks(const UndirectedGraph& g, int length) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint64_t> a(n * n, 0), p(n * n, 0), q(n * n);
  for (const Edge& e : g.edges()) a[e.u * n + e.v] = a[e.v * n + e.u] = 1;
  for (std::size_t i = 0; i < n; ++i) p[i * n + i] = 1;
  for (int s = 0; s < length; ++s) {
    std::fill(q.begin(), q.end(), 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (p[i * n + k])
          for (std::size_t j = 0; j < n; ++j) q[i * n + j] += p[i * n + k] * a[k * n + j];
    p.swap(q);
  }
  std::uint64_t tr = 0;
  for (std::size_t i = 0; i < n; ++i) tr += p[i * n + i];
  return tr;
}

TEST(KnownValues, TraceOracleMatchesFrozenNumbers) {
  EXPECT_EQ(closed_walks(complete_graph(3), 4), 18u);  // 2^4 + 2*(-1)^4
  EXPECT_EQ(closed_walks(cycle_graph(5), 5), 10u);
  EXPECT_EQ(closed_walks(complete_graph(3), 3), 6u);
}

TEST(KnownValues, Homomorphisms) {
  EXPECT_EQ(count_homomorphisms(complete_graph(3), complete_graph(3)), 6);
  EXPECT_EQ(count_homomorphisms(complete_graph(3), cycle_graph(4)), 18);
  EXPECT_EQ(count_homomorphisms(cycle_graph(5), cycle_graph(5)), 10);
  auto g = generate_gnp(12, 0.3, 5);
  EXPECT_EQ(count_homomorphisms(g, complete_graph(2)), 2 * g.num_edges());
}

TEST(KnownValues, Subgraphs) {
  EXPECT_EQ(count_subgraphs(complete_graph(4), complete_graph(3)), 4);
  EXPECT_EQ(count_subgraphs(complete_graph(3), complete_graph(3)), 1);
  EXPECT_EQ(count_subgraphs(star_graph(3), path_graph(3)), 3);
  EXPECT_EQ(count_subgraphs(cycle_graph(6), complete_graph(2)), 6);
}

TEST(KnownValues, Oracles) {
  EXPECT_EQ(brute_force_hom(complete_graph(3), complete_graph(3)), 6);
  EXPECT_EQ(brute_force_hom(cycle_graph(5), cycle_graph(5)), 10);
  EXPECT_EQ(brute_force_hom(complete_graph(3), cycle_graph(4)), 18);
  EXPECT_EQ(brute_force_sub(complete_graph(4), complete_graph(3)), 4);
  EXPECT_EQ(brute_force_hom(star_graph(3), path_graph(3)), 12);
  EXPECT_EQ(brute_force_hom(star_graph(3), complete_graph(2)), 6);
}

TEST(KnownValues, PatternConstants) {
  EXPECT_EQ(acyclic_orientations(cycle_graph(4)).size(), 14u);
  EXPECT_EQ(acyclic_orientations(complete_graph(3)).size(), 6u);
  // C_9 with chord 0-3 splits into induced cycles of lengths 4 and 7.
  UndirectedGraph chord(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 0}, {0, 3}});
  EXPECT_EQ(licl(chord), 7u);
}

}  // namespace
}  // namespace sparsecount
