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

#include "sparsecount/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

namespace sparsecount {

namespace {

// Edges of the bounded degeneracy model in insertion order, stopping once
// max_edges have been produced.
std::vector<Edge> degenerate_edges(std::size_t n, std::size_t c, std::uint64_t seed, std::size_t max_edges) {
  if (c == 0) throw std::invalid_argument("generate_bounded_degeneracy: c must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  std::vector<VertexId> picked;
  for (VertexId i = 1; i < n && edges.size() < max_edges; ++i) {
    // Floyd's sampling of min(c, i) distinct values from [0, i).
    const std::size_t k = std::min<std::size_t>(c, i);
    picked.clear();
    for (VertexId j = static_cast<VertexId>(i - k); j < i; ++j) {
      VertexId r = std::uniform_int_distribution<VertexId>(0, j)(rng);
      picked.push_back(std::find(picked.begin(), picked.end(), r) == picked.end() ? r : j);
    }
    for (VertexId p : picked) {
      if (edges.size() == max_edges) break;
      edges.push_back({p, i});
    }
  }
  return edges;
}

}  // namespace

UndirectedGraph path_graph(std::size_t vertices) {
  std::vector<Edge> e;
  for (VertexId i = 1; i < vertices; ++i) e.push_back({i - 1, i});
  return UndirectedGraph(vertices, e);
}

UndirectedGraph cycle_graph(std::size_t length) {
  if (length < 3) throw std::invalid_argument("cycle_graph: length must be >= 3");
  std::vector<Edge> e;
  for (VertexId i = 0; i < length; ++i) e.push_back({i, static_cast<VertexId>((i + 1) % length)});
  return UndirectedGraph(length, e);
}

UndirectedGraph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) e.push_back({i, j});
  return UndirectedGraph(n, e);
}

UndirectedGraph star_graph(std::size_t leaves) {
  std::vector<Edge> e;
  for (VertexId i = 1; i <= leaves; ++i) e.push_back({0, i});
  return UndirectedGraph(leaves + 1, e);
}

UndirectedGraph generate_subdivision(const UndirectedGraph& g, std::size_t t) {
  if (t == 0) throw std::invalid_argument("generate_subdivision: t must be >= 1");
  auto next = static_cast<VertexId>(g.num_vertices());
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    VertexId prev = e.u;
    for (std::size_t i = 0; i < t; ++i, ++next) {
      out.push_back({prev, next});
      prev = next;
    }
    out.push_back({prev, e.v});
  }
  return UndirectedGraph(next, out);
}

UndirectedGraph generate_double_subdivision(const UndirectedGraph& g, std::size_t t) {
  if (t < 2) throw std::invalid_argument("generate_double_subdivision: t must be >= 2");
  auto next = static_cast<VertexId>(g.num_vertices());
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    for (std::size_t internal : {t, t + 1}) {
      VertexId prev = e.u;
      for (std::size_t i = 0; i < internal; ++i, ++next) {
        out.push_back({prev, next});
        prev = next;
      }
      out.push_back({prev, e.v});
    }
  }
  return UndirectedGraph(next, out);
}

UndirectedGraph generate_bounded_degeneracy(std::size_t n, std::size_t c, std::uint64_t seed) {
  auto edges = degenerate_edges(n, c, seed, static_cast<std::size_t>(-1));
  return UndirectedGraph(n, edges);
}

UndirectedGraph generate_bounded_degeneracy_edges(std::size_t m, std::size_t c, std::uint64_t seed) {
  if (c == 0) throw std::invalid_argument("generate_bounded_degeneracy_edges: c must be >= 1");
  std::size_t n = (m + c - 1) / c + c;
  auto edges = degenerate_edges(n, c, seed, m);
  return UndirectedGraph(n, edges);
}

UndirectedGraph generate_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("generate_gnp: p must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j)
      if (coin(rng)) e.push_back({i, j});
  return UndirectedGraph(n, e);
}

UndirectedGraph generate_connected(std::size_t k, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("generate_connected: p must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  std::vector<VertexId> parent(k, kNoVertex);
  for (VertexId i = 1; i < k; ++i) {
    parent[i] = std::uniform_int_distribution<VertexId>(0, i - 1)(rng);
    e.push_back({parent[i], i});
  }
  std::bernoulli_distribution coin(p);
  for (VertexId i = 0; i < k; ++i)
    for (VertexId j = i + 1; j < k; ++j)
      if (parent[j] != i && coin(rng)) e.push_back({i, j});
  return UndirectedGraph(k, e);
}

}  // namespace sparsecount
