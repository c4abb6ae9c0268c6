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

#include <cmath>
#include <limits>
#include <random>

#include "sparsecount/counting.hpp"
#include "sparsecount/degeneracy.hpp"
#include "sparsecount/generators.hpp"
#include "sparsecount/pattern.hpp"
#include "sparsecount/product.hpp"

namespace sparsecount {
namespace {

// Random orientation of G(n, p) with weights in [1, max_weight].
DirWLGraph random_digraph(std::size_t n, double p, Weight max_weight, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto g = generate_gnp(n, p, seed + 1);
  std::vector<Arc> arcs;
  for (const Edge& e : g.edges()) {
    Weight w = 1 + static_cast<Weight>(rng() % max_weight);
    arcs.push_back(rng() & 1 ? Arc{e.u, e.v, w} : Arc{e.v, e.u, w});
  }
  return DirWLGraph(n, arcs);
}

TEST(RootHoms, Examples) {
  DirWLGraph single(1, {}, {4});
  DirWLGraph host(5, {}, {4, 1, 4, 4, 2});
  EXPECT_EQ(enumerate_root_homs(single, 0, host).size(), 3u);

  DirWLGraph arc(2, {{0, 1, 1}});
  DirWLGraph tri(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
  auto maps = enumerate_root_homs(arc, 0, tri);
  EXPECT_EQ(maps.size(), 3u);
  for (const auto& m : maps) EXPECT_TRUE(tri.arc_weight(m.image[0], m.image[1]).has_value());

  DirWLGraph heavy_pattern(2, {{0, 1, 2}});
  DirWLGraph heavy_host(2, {{0, 1, 3}});
  EXPECT_TRUE(enumerate_root_homs(heavy_pattern, 0, heavy_host).empty());
  DirWLGraph light_host(2, {{0, 1, 1}});
  EXPECT_EQ(enumerate_root_homs(heavy_pattern, 0, light_host).size(), 1u);
}

TEST(RootHoms, OnlyReachablePartIsMapped) {
  DirWLGraph wedge(3, {{0, 1, 1}, {2, 1, 1}});
  DirWLGraph host(2, {{0, 1, 1}});
  auto maps = enumerate_root_homs(wedge, 0, host);
  ASSERT_EQ(maps.size(), 1u);
  EXPECT_EQ(maps[0].image[2], kNoVertex);
}

TEST(RootHoms, MatchesBruteForceOnReachSet) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto pattern = random_digraph(4, 0.7, 2, seed);
    auto host = random_digraph(10, 0.4, 3, seed + 100);
    RootHomPlan plan(pattern, 0);
    std::vector<VertexId> vs(plan.vertices().begin(), plan.vertices().end());
    auto sub = induced_subgraph(pattern, vs).graph;
    EXPECT_EQ(BigInt(enumerate_root_homs(pattern, 0, host).size()), brute_force_hom_wl(host, sub)) << seed;
  }
}

TEST(Bressan, SingleBag) {
  DirWLGraph pattern(3, {{0, 1, 1}, {0, 2, 1}});
  DirWLGraph host(4, {{0, 1, 1}, {0, 2, 1}, {3, 2, 1}});
  HubTree tree{{0}, {kNoParent}, 0};
  auto dict = bressan_count(pattern, tree, 0, host);
  EXPECT_EQ(dict.domain, (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(dict.size(), enumerate_root_homs(pattern, 0, host).size());
  for (const auto& [key, value] : dict.values) EXPECT_EQ(value, 1);
  EXPECT_EQ(dict.total(), brute_force_hom_wl(host, pattern));
}

TEST(Bressan, InInWedgeIdentityInstance) {
  DirWLGraph wedge(3, {{0, 1, 1}, {2, 1, 1}}, {0, 1, 2});
  HubTree tree{{0, 2}, {kNoParent, 0}, 0};
  EXPECT_EQ(bressan_count(wedge, tree, 0, wedge).total(), 1);
  EXPECT_EQ(BressanCounter(wedge, tree).total(wedge), 1);
}

TEST(Bressan, DisjointChildrenMultiply) {
  DirWLGraph pattern(4, {{0, 1, 2}, {2, 3, 2}});
  HubTree tree{{0, 2}, {kNoParent, 0}, 0};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto host = random_digraph(9, 0.35, 2, seed);
    BressanCounter counter(pattern, tree);
    auto child = counter.count(1, host);
    auto root = counter.count(0, host);
    EXPECT_EQ(root.total(), brute_force_hom_wl(host, pattern)) << seed;
    for (const auto& [key, value] : root.values) EXPECT_EQ(value, child.total());
  }
}

TEST(HomExtension, LabelMismatchGivesZero) {
  FraternalExtension pattern{DirWLGraph(2, {{0, 1, 1}}, {0, 1}), 1};
  FraternalExtension host{DirWLGraph(2, {{0, 1, 1}}, {5, 6}), 1};
  EXPECT_EQ(count_hom_extension(pattern, host), 0);
}

TEST(HomExtension, K2OnK2Product) {
  auto hl = label_pattern(complete_graph(2));
  auto host = optimal_extension(pattern_product(hl, complete_graph(2)), 1);
  // Both product edges are peeled from their label-0 end, so every
  // homomorphism lands in the orientation 0 -> 1.
  std::vector<BigInt> per;
  for (const auto& m : enumerate_pattern_extensions(hl, 1)) per.push_back(count_hom_extension(m, host));
  ASSERT_EQ(per.size(), 2u);
  EXPECT_EQ(per[0] + per[1], 2);
  EXPECT_EQ(per[0], 2);  // orientation 0 keeps every edge as (smaller, larger)
  EXPECT_EQ(per[1], 0);
}

TEST(HomExtension, RandomPatternsAgainstWeightedOracle) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto h = generate_connected(4, 0.5, seed);
    auto g = generate_gnp(4, 0.6, seed + 50);
    auto hl = label_pattern(h);
    auto depth = min_extension_depth(licl(h)) + seed % 2;
    auto host = optimal_extension(pattern_product(hl, g), depth);
    ASSERT_EQ(host.graph.num_vertices(), 16u);
    for (const auto& m : enumerate_pattern_extensions(hl, depth))
      EXPECT_EQ(count_hom_extension(m, host), brute_force_hom_wl(host.graph, m.graph)) << seed;
  }
}

TEST(HomExtension, ThrowsWithoutWidth1) {
  DirWLGraph c6(6, {{0, 1, 1}, {0, 5, 1}, {2, 1, 1}, {2, 3, 1}, {4, 3, 1}, {4, 5, 1}});
  try {
    count_hom_extension({c6, 1}, {c6, 1});
    FAIL() << "expected NoWidth1Decomposition";
  } catch (const NoWidth1Decomposition& e) {
    EXPECT_EQ(e.extension().num_arcs(), 6u);
  }
}

TEST(CountHom, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = seed % 2 ? generate_bounded_degeneracy(14, 1 + seed % 3, seed) : generate_gnp(12, 0.3, seed);
    auto h = generate_connected(2 + seed % 5, 0.4, seed + 7);
    EXPECT_EQ(count_homomorphisms(g, h), brute_force_hom(g, h)) << "seed " << seed;
  }
}

TEST(CountHom, CycleTrace) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = generate_gnp(15, 0.3, seed);
    for (std::size_t l : {3, 4, 5}) EXPECT_EQ(count_homomorphisms(g, cycle_graph(l)), brute_force_hom(g, cycle_graph(l)));
  }
}

TEST(CountHom, ComponentsMultiply) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = generate_gnp(10, 0.4, seed);
    UndirectedGraph both(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
    auto tri = complete_graph(3);
    auto edge = complete_graph(2);
    auto result = count_homomorphisms_detailed(g, both);
    EXPECT_EQ(result.components.size(), 2u);
    EXPECT_EQ(result.count, count_homomorphisms(g, tri) * count_homomorphisms(g, edge));
  }
  // An isolated pattern vertex contributes a factor n.
  auto g = generate_gnp(9, 0.5, 3);
  EXPECT_EQ(count_homomorphisms(g, UndirectedGraph(3, {{0, 1}})), 9 * count_homomorphisms(g, complete_graph(2)));
}

TEST(CountHom, ThreadsAndDeeperDepthAgree) {
  auto g = generate_bounded_degeneracy(60, 3, 11);
  auto h = cycle_graph(5);
  BigInt serial = count_homomorphisms(g, h);
  CountOptions parallel;
  parallel.threads = 4;
  EXPECT_EQ(count_homomorphisms(g, h, parallel), serial);
  CountOptions deeper;
  deeper.depth = 2;
  EXPECT_EQ(count_homomorphisms(g, h, deeper), serial);
}

TEST(CountHom, ShallowDepthThrowsOrFallsBack) {
  auto g = generate_gnp(10, 0.5, 2);
  CountOptions shallow;
  shallow.depth = 1;
  EXPECT_THROW(count_homomorphisms(g, cycle_graph(6), shallow), NoWidth1Decomposition);
  shallow.exact_fallback = true;
  auto result = count_homomorphisms_detailed(g, cycle_graph(6), shallow);
  EXPECT_TRUE(result.components[0].used_fallback);
  EXPECT_EQ(result.count, brute_force_hom(g, cycle_graph(6)));
}

TEST(CountHom, CountsBeyondSixtyFourBits) {
  // Hom(K_{1,12}, K_{1,50}) = 50^12 + 50, above 2^64.
  BigInt expected = boost::multiprecision::pow(BigInt(50), 12) + 50;
  ASSERT_GT(expected, BigInt(std::numeric_limits<std::uint64_t>::max()));
  EXPECT_EQ(count_homomorphisms(star_graph(50), star_graph(12)), expected);
}

TEST(CountHom, EmptyHostAndEmptyPattern) {
  EXPECT_EQ(count_homomorphisms(UndirectedGraph(), complete_graph(2)), 0);
  EXPECT_EQ(count_homomorphisms(UndirectedGraph(4, {}), UndirectedGraph(2, {})), 16);
  EXPECT_THROW(count_homomorphisms(complete_graph(3), UndirectedGraph()), std::invalid_argument);
}

TEST(CountHom, RootDictionaryWithinOutdegreeBound) {
  auto g = generate_bounded_degeneracy(40, 2, 8);
  auto h = cycle_graph(4);
  auto hl = label_pattern(h);
  auto host = optimal_extension(pattern_product(hl, g), 1);
  const double n = static_cast<double>(host.graph.num_vertices());
  const double dplus = static_cast<double>(max_outdegree(host.graph));
  for (const auto& m : enumerate_pattern_extensions(hl, 1)) {
    auto tree = find_width1_decomposition(m.graph);
    ASSERT_TRUE(tree.has_value());
    for (std::size_t b = 0; b < tree->bags.size(); ++b) {
      auto dict = bressan_count(m.graph, *tree, b, host.graph);
      double bound = n * std::pow(dplus, static_cast<double>(dict.domain.size() - 1));
      EXPECT_LE(static_cast<double>(dict.size()), bound);
    }
  }
}

TEST(CountSub, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto g = generate_gnp(10, 0.4, seed);
    auto h = generate_connected(2 + seed % 4, 0.3, seed + 3);
    EXPECT_EQ(count_subgraphs(g, h), brute_force_sub(g, h)) << seed;
  }
  auto detail = count_subgraphs_detailed(star_graph(3), path_graph(3));
  EXPECT_EQ(detail.count, 3);
  EXPECT_EQ(detail.terms.size(), 2u);
}

TEST(Oracles, CapsAreEnforced) {
  EXPECT_THROW(brute_force_hom(generate_gnp(40, 0.1, 1), complete_graph(2)), OracleLimitExceeded);
  EXPECT_THROW(brute_force_sub(generate_gnp(25, 0.1, 1), complete_graph(2)), OracleLimitExceeded);
  EXPECT_NO_THROW(brute_force_hom(generate_gnp(40, 0.1, 1), complete_graph(2), 64));
}

}  // namespace
}  // namespace sparsecount
