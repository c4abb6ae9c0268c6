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

#include "sparsecount/pattern.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>

namespace sparsecount {

namespace {

constexpr std::size_t kMaxSubsetVertices = 24;

// Adjacency rows as bitmasks; callers guarantee n <= 64.
std::vector<std::uint64_t> adjacency_masks(const UndirectedGraph& h) {
  std::vector<std::uint64_t> adj(h.num_vertices(), 0);
  for (const Edge& e : h.edges()) {
    adj[e.u] |= std::uint64_t{1} << e.v;
    adj[e.v] |= std::uint64_t{1} << e.u;
  }
  return adj;
}

bool induces_cycle(const std::vector<std::uint64_t>& adj, std::uint64_t subset) {
  if (std::popcount(subset) < 3) return false;
  for (std::uint64_t rest = subset; rest; rest &= rest - 1) {
    int v = std::countr_zero(rest);
    if (std::popcount(adj[v] & subset) != 2) return false;
  }
  // 2-regular: a cycle iff connected.
  std::uint64_t seen = subset & (~subset + 1);
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)] & subset;
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == subset;
}

std::size_t pair_bit(std::size_t i, std::size_t j, std::size_t n) {
  // Row-major index of (i, j), i < j, in the upper triangle.
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

}  // namespace

std::size_t licl(const UndirectedGraph& h) {
  const std::size_t n = h.num_vertices();
  if (n > kMaxSubsetVertices) throw PatternTooLarge("licl: pattern has " + std::to_string(n) + " vertices");
  auto adj = adjacency_masks(h);
  std::size_t best = 0;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t s = 7; s < limit; ++s) {
    auto size = static_cast<std::size_t>(std::popcount(s));
    if (size <= best) continue;
    if (induces_cycle(adj, s)) best = size;
  }
  return best;
}

std::size_t min_extension_depth(std::size_t licl_value) {
  // licl < 3(t+1)  <=>  t > licl/3 - 1
  std::size_t t = licl_value / 3;
  return std::max<std::size_t>(t, 1);
}

std::uint64_t automorphism_count(const UndirectedGraph& h) {
  const std::size_t n = h.num_vertices();
  if (n > 64) throw PatternTooLarge("automorphism_count: pattern too large");
  auto adj = adjacency_masks(h);
  std::vector<VertexId> image(n);
  std::uint64_t used = 0, count = 0;
  // Backtracking over vertex images, checking adjacency to earlier vertices.
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      ++count;
      return;
    }
    for (VertexId c = 0; c < n; ++c) {
      if ((used >> c) & 1) continue;
      if (h.degree(c) != h.degree(static_cast<VertexId>(i))) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = (((adj[i] >> j) & 1) == ((adj[c] >> image[j]) & 1));
      if (!ok) continue;
      image[i] = c;
      used |= std::uint64_t{1} << c;
      self(self, i + 1);
      used &= ~(std::uint64_t{1} << c);
    }
  };
  extend(extend, 0);
  return count;
}

CanonicalCode canonical_form(const UndirectedGraph& h) {
  const std::size_t n = h.num_vertices();
  if (n > kMaxCanonicalVertices)
    throw PatternTooLarge("canonical_form: " + std::to_string(n) + " vertices exceeds limit of " +
                          std::to_string(kMaxCanonicalVertices));
  CanonicalCode code;
  code.num_vertices = n;
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return h.degree(a) > h.degree(b); });
  for (VertexId v : order) code.degrees.push_back(h.degree(v));

  // Degree classes are contiguous runs in `order`; permute within each.
  std::vector<std::pair<std::size_t, std::size_t>> classes;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && h.degree(order[j]) == h.degree(order[i])) ++j;
    classes.push_back({i, j});
    i = j;
  }
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  auto encode = [&] {
    std::uint64_t x = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (h.has_edge(order[i], order[j])) x |= std::uint64_t{1} << (bits - 1 - pair_bit(i, j, n));
    return x;
  };
  bool first = true;
  auto search = [&](auto&& self, std::size_t c) -> void {
    if (c == classes.size()) {
      auto x = encode();
      if (first || x < code.adjacency) code.adjacency = x;
      first = false;
      return;
    }
    auto b = order.begin() + static_cast<std::ptrdiff_t>(classes[c].first);
    auto e = order.begin() + static_cast<std::ptrdiff_t>(classes[c].second);
    std::sort(b, e);
    do {
      self(self, c + 1);
    } while (std::next_permutation(b, e));
  };
  search(search, 0);
  return code;
}

UndirectedGraph from_canonical(const CanonicalCode& code) {
  const std::size_t n = code.num_vertices;
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if ((code.adjacency >> (bits - 1 - pair_bit(i, j, n))) & 1)
        edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j)});
  return UndirectedGraph(n, edges);
}

std::vector<std::vector<VertexId>> connected_components(const UndirectedGraph& h) {
  const std::size_t n = h.num_vertices();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<VertexId>> out;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (VertexId w : h.neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

UndirectedGraph induced_undirected(const UndirectedGraph& h, std::span<const VertexId> vertices) {
  std::vector<VertexId> index(h.num_vertices(), kNoVertex);
  for (VertexId i = 0; i < vertices.size(); ++i) index[vertices[i]] = i;
  std::vector<Edge> edges;
  for (VertexId i = 0; i < vertices.size(); ++i)
    for (VertexId w : h.neighbors(vertices[i]))
      if (index[w] != kNoVertex && i < index[w]) edges.push_back({i, index[w]});
  return UndirectedGraph(vertices.size(), edges);
}

std::vector<SpasmEntry> spasm(const UndirectedGraph& h) {
  const std::size_t n = h.num_vertices();
  if (n > kMaxCanonicalVertices) throw PatternTooLarge("spasm: pattern too large");
  auto adj = adjacency_masks(h);

  // Factorials for the Moebius function of the partition lattice:
  // mu(0, rho) = prod over blocks of (-1)^(|B|-1) (|B|-1)!.
  std::vector<BigInt> fact(n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;

  std::map<CanonicalCode, Rational> merged;
  std::vector<std::uint64_t> blocks;
  auto visit = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      BigInt mu = 1;
      std::vector<VertexId> block_of(n);
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        auto size = static_cast<std::size_t>(std::popcount(blocks[b]));
        mu *= fact[size - 1];
        if ((size - 1) % 2) mu = -mu;
        for (std::uint64_t m = blocks[b]; m; m &= m - 1) block_of[std::countr_zero(m)] = static_cast<VertexId>(b);
      }
      std::vector<Edge> qedges;
      for (const Edge& e : h.edges()) {
        VertexId a = block_of[e.u], b = block_of[e.v];
        qedges.push_back({std::min(a, b), std::max(a, b)});
      }
      std::sort(qedges.begin(), qedges.end());
      qedges.erase(std::unique(qedges.begin(), qedges.end()), qedges.end());
      merged[canonical_form(UndirectedGraph(blocks.size(), qedges))] += Rational(mu);
      return;
    }
    const std::uint64_t bit = std::uint64_t{1} << v;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b] & adj[v]) continue;  // blocks must stay independent
      blocks[b] |= bit;
      self(self, v + 1);
      blocks[b] &= ~bit;
    }
    blocks.push_back(bit);
    self(self, v + 1);
    blocks.pop_back();
  };
  visit(visit, 0);

  const Rational aut(automorphism_count(h));
  std::vector<std::pair<CanonicalCode, Rational>> entries(merged.begin(), merged.end());
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) { return a.first.num_vertices > b.first.num_vertices; });
  std::vector<SpasmEntry> out;
  for (auto& [code, c] : entries) {
    if (c == 0) continue;
    out.push_back({from_canonical(code), c / aut});
  }
  return out;
}

PatternProfile profile(const UndirectedGraph& h) {
  PatternProfile p;
  p.licl = licl(h);
  p.t_min = min_extension_depth(p.licl);
  for (const auto& entry : spasm(h)) p.spasm_licl = std::max(p.spasm_licl, licl(entry.quotient));
  return p;
}

bool is_acyclic(const DirWLGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> indeg(n);
  std::vector<VertexId> ready;
  for (VertexId v = 0; v < n; ++v)
    if ((indeg[v] = g.in_degree(v)) == 0) ready.push_back(v);
  std::size_t done = 0;
  while (!ready.empty()) {
    VertexId v = ready.back();
    ready.pop_back();
    ++done;
    for (const OutArc& a : g.out_arcs(v))
      if (--indeg[a.to] == 0) ready.push_back(a.to);
  }
  return done == n;
}

std::vector<DirWLGraph> acyclic_orientations(const UndirectedGraph& h, std::span<const Label> labels) {
  const std::size_t n = h.num_vertices();
  auto edges = h.edges();
  if (edges.size() > kMaxOrientationEdges)
    throw PatternTooLarge("acyclic_orientations: " + std::to_string(edges.size()) + " edges");
  if (n > 64) throw PatternTooLarge("acyclic_orientations: pattern too large");
  std::vector<Label> lab(labels.begin(), labels.end());
  if (lab.empty()) lab.assign(n, kTrivialLabel);
  if (lab.size() != n) throw std::invalid_argument("acyclic_orientations: label count mismatch");

  std::vector<DirWLGraph> out;
  const std::uint64_t total = std::uint64_t{1} << edges.size();
  std::vector<std::uint64_t> succ(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::fill(succ.begin(), succ.end(), 0);
    for (std::size_t j = 0; j < edges.size(); ++j) {
      auto [u, v] = edges[j];
      if ((mask >> j) & 1) std::swap(u, v);
      succ[u] |= std::uint64_t{1} << v;
    }
    // Kahn's algorithm on bitmasks.
    std::uint64_t remaining = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    bool progress = true;
    while (remaining && progress) {
      progress = false;
      std::uint64_t has_pred = 0;
      for (std::uint64_t r = remaining; r; r &= r - 1) has_pred |= succ[std::countr_zero(r)];
      std::uint64_t sources = remaining & ~has_pred;
      if (sources) {
        remaining &= ~sources;
        progress = true;
      }
    }
    if (remaining) continue;
    std::vector<Arc> arcs;
    arcs.reserve(edges.size());
    for (std::size_t j = 0; j < edges.size(); ++j) {
      auto [u, v] = edges[j];
      if ((mask >> j) & 1) std::swap(u, v);
      arcs.push_back({u, v, 1});
    }
    out.emplace_back(n, std::move(arcs), lab);
  }
  return out;
}

}  // namespace sparsecount
