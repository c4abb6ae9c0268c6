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

#include "sparsecount/hub_decomp.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <utility>

#include "sparsecount/pattern.hpp"

namespace sparsecount {

namespace {

constexpr std::size_t kMaxExhaustiveHubs = 8;

// Kosaraju: component id per vertex.
std::vector<std::size_t> strong_components(const DirWLGraph& g, std::size_t& count) {
  const std::size_t n = g.num_vertices();
  std::vector<VertexId> finish;
  finish.reserve(n);
  std::vector<char> seen(n, 0);
  std::vector<std::pair<VertexId, std::size_t>> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    stack.push_back({s, 0});
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      auto out = g.out_arcs(v);
      if (i < out.size()) {
        VertexId w = out[i++].to;
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        finish.push_back(v);
        stack.pop_back();
      }
    }
  }
  std::vector<std::size_t> comp(n, kNoParent);
  count = 0;
  for (auto it = finish.rbegin(); it != finish.rend(); ++it) {
    if (comp[*it] != kNoParent) continue;
    std::vector<VertexId> todo{*it};
    comp[*it] = count;
    while (!todo.empty()) {
      VertexId v = todo.back();
      todo.pop_back();
      for (const OutArc& a : g.in_arcs(v))
        if (comp[a.to] == kNoParent) {
          comp[a.to] = count;
          todo.push_back(a.to);
        }
    }
    ++count;
  }
  return comp;
}

bool subset_of(ReachIndex::Mask a, ReachIndex::Mask b) { return (a & ~b) == 0; }

// Tree path between bags a and b (inclusive) via parent pointers.
std::vector<std::size_t> tree_path(const HubTree& t, const std::vector<std::size_t>& depth, std::size_t a,
                                   std::size_t b) {
  std::vector<std::size_t> left, right;
  while (depth[a] > depth[b]) left.push_back(std::exchange(a, t.parent[a]));
  while (depth[b] > depth[a]) right.push_back(std::exchange(b, t.parent[b]));
  while (a != b) {
    left.push_back(std::exchange(a, t.parent[a]));
    right.push_back(std::exchange(b, t.parent[b]));
  }
  left.push_back(a);
  left.insert(left.end(), right.rbegin(), right.rend());
  return left;
}

// Separation check over a tree whose shape is already known to be valid.
bool separates(const HubTree& t, const std::vector<std::size_t>& depth, const std::vector<ReachIndex::Mask>& bag_reach) {
  const std::size_t b = t.bags.size();
  for (std::size_t x = 0; x < b; ++x)
    for (std::size_t y = x + 1; y < b; ++y) {
      ReachIndex::Mask common = bag_reach[x] & bag_reach[y];
      if (!common) continue;
      for (std::size_t mid : tree_path(t, depth, x, y))
        if (!subset_of(common, bag_reach[mid])) return false;
    }
  return true;
}

// Depth of every bag, or empty if the parent array is not a tree rooted at t.root.
std::vector<std::size_t> tree_depths(const HubTree& t) {
  const std::size_t b = t.bags.size();
  if (t.parent.size() != b || t.root >= b || t.parent[t.root] != kNoParent) return {};
  std::vector<std::size_t> depth(b, kNoParent);
  depth[t.root] = 0;
  for (std::size_t i = 0; i < b; ++i) {
    // Walk up until a bag with known depth; more than b steps means a cycle.
    std::vector<std::size_t> chain;
    std::size_t v = i;
    while (depth[v] == kNoParent) {
      if (chain.size() > b || t.parent[v] == kNoParent || t.parent[v] >= b) return {};
      chain.push_back(v);
      v = t.parent[v];
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth[*it] = depth[t.parent[*it]] + 1;
  }
  return depth;
}

HubTree tree_from_pruefer(const std::vector<VertexId>& hubs, const std::vector<std::size_t>& code) {
  const std::size_t h = hubs.size();
  std::vector<std::vector<std::size_t>> adj(h);
  std::vector<std::size_t> degree(h, 1);
  for (auto c : code) ++degree[c];
  for (auto c : code) {
    std::size_t leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    adj[leaf].push_back(c);
    adj[c].push_back(leaf);
    --degree[leaf];
    --degree[c];
  }
  std::size_t a = h, b = h;
  for (std::size_t i = 0; i < h; ++i)
    if (degree[i] == 1) (a == h ? a : b) = i;
  adj[a].push_back(b);
  adj[b].push_back(a);

  HubTree t;
  t.bags = hubs;
  t.parent.assign(h, kNoParent);
  t.root = 0;
  std::vector<std::size_t> order{0};
  std::vector<char> seen(h, 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (auto w : adj[order[i]])
      if (!seen[w]) {
        seen[w] = 1;
        t.parent[w] = order[i];
        order.push_back(w);
      }
  return t;
}

}  // namespace

std::vector<VertexId> hubset(const DirWLGraph& g) {
  std::size_t count = 0;
  auto comp = strong_components(g, count);
  std::vector<char> has_incoming(count, 0);
  for (const Arc& a : g.arcs())
    if (comp[a.from] != comp[a.to]) has_incoming[comp[a.to]] = 1;
  std::vector<char> taken(count, 0);
  std::vector<VertexId> hubs;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto c = comp[v];
    if (!has_incoming[c] && !taken[c]) {
      taken[c] = 1;
      hubs.push_back(v);
    }
  }
  return hubs;
}

std::vector<VertexId> reach(const DirWLGraph& g, std::span<const VertexId> sources) {
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<VertexId> out;
  for (VertexId s : sources)
    if (!seen[s]) {
      seen[s] = 1;
      out.push_back(s);
    }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const OutArc& a : g.out_arcs(out[i]))
      if (!seen[a.to]) {
        seen[a.to] = 1;
        out.push_back(a.to);
      }
  std::sort(out.begin(), out.end());
  return out;
}

ReachIndex::ReachIndex(const DirWLGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n > 64) throw PatternTooLarge("ReachIndex: graph has " + std::to_string(n) + " vertices");
  reach_.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    VertexId src[] = {v};
    Mask m = 0;
    for (VertexId w : reach(g, src)) m |= Mask{1} << w;
    reach_[v] = m;
  }
}

ReachIndex::Mask ReachIndex::of(std::span<const VertexId> vs) const {
  Mask m = 0;
  for (VertexId v : vs) m |= reach_[v];
  return m;
}

URGraph unique_reachability_graph(const DirWLGraph& g, std::span<const VertexId> hubs) {
  ReachIndex idx(g);
  URGraph ur;
  ur.vertices.assign(hubs.begin(), hubs.end());
  for (std::size_t i = 0; i < hubs.size(); ++i)
    for (std::size_t j = i + 1; j < hubs.size(); ++j) {
      ReachIndex::Mask others = 0;
      for (std::size_t k = 0; k < hubs.size(); ++k)
        if (k != i && k != j) others |= idx.of(hubs[k]);
      if ((idx.of(hubs[i]) & idx.of(hubs[j])) & ~others)
        ur.edges.push_back({std::min(hubs[i], hubs[j]), std::max(hubs[i], hubs[j])});
    }
  return ur;
}

bool is_forest(const URGraph& ur) {
  // Union-find over positions in ur.vertices.
  std::vector<std::size_t> parent(ur.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto pos = [&](VertexId v) {
    return static_cast<std::size_t>(std::find(ur.vertices.begin(), ur.vertices.end(), v) - ur.vertices.begin());
  };
  for (const Edge& e : ur.edges) {
    auto a = find(pos(e.u)), b = find(pos(e.v));
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

std::vector<std::vector<std::size_t>> HubTree::children() const {
  std::vector<std::vector<std::size_t>> out(bags.size());
  for (std::size_t i = 0; i < bags.size(); ++i)
    if (parent[i] != kNoParent) out[parent[i]].push_back(i);
  return out;
}

std::optional<HubTree> find_width1_decomposition(const DirWLGraph& g) {
  ReachIndex idx(g);
  auto hubs = hubset(g);
  if (hubs.empty()) return HubTree{};
  std::stable_sort(hubs.begin(), hubs.end(), [&](VertexId a, VertexId b) {
    return std::popcount(idx.of(a)) > std::popcount(idx.of(b));
  });

  HubTree t;
  t.root = 0;
  bool stalled = false;
  for (VertexId x : hubs) {
    if (t.bags.empty()) {
      t.bags.push_back(x);
      t.parent.push_back(kNoParent);
      continue;
    }
    // First placed bag that covers x's intersection with every placed bag.
    std::size_t cover = kNoParent;
    for (std::size_t d = 0; d < t.bags.size() && cover == kNoParent; ++d) {
      bool ok = true;
      for (std::size_t s = 0; s < t.bags.size() && ok; ++s)
        ok = subset_of(idx.of(x) & idx.of(t.bags[s]), idx.of(t.bags[d]));
      if (ok) cover = d;
    }
    if (cover == kNoParent) {
      stalled = true;
      break;
    }
    t.bags.push_back(x);
    t.parent.push_back(cover);
  }
  if (!stalled) return t;

  const std::size_t h = hubs.size();
  if (h > kMaxExhaustiveHubs)
    throw PatternTooLarge("find_width1_decomposition: exhaustive search over " + std::to_string(h) + " hubs");
  std::vector<ReachIndex::Mask> bag_reach(h);
  for (std::size_t i = 0; i < h; ++i) bag_reach[i] = idx.of(hubs[i]);
  // h >= 3 here: one or two hubs never stall.
  std::vector<std::size_t> code(h - 2, 0);
  for (;;) {
    HubTree cand = tree_from_pruefer(hubs, code);
    if (separates(cand, tree_depths(cand), bag_reach)) return cand;
    std::size_t i = 0;
    while (i < code.size() && ++code[i] == h) code[i++] = 0;
    if (i == code.size()) break;
  }
  return std::nullopt;
}

bool validate_decomposition(const DirWLGraph& g, const HubTree& tree) {
  auto hubs = hubset(g);
  for (VertexId b : tree.bags)
    if (!std::binary_search(hubs.begin(), hubs.end(), b)) return false;
  for (VertexId s : hubs)
    if (std::find(tree.bags.begin(), tree.bags.end(), s) == tree.bags.end()) return false;
  if (tree.bags.empty()) return hubs.empty();
  auto depth = tree_depths(tree);
  if (depth.empty()) return false;
  ReachIndex idx(g);
  std::vector<ReachIndex::Mask> bag_reach;
  for (VertexId b : tree.bags) bag_reach.push_back(idx.of(b));
  return separates(tree, depth, bag_reach);
}

}  // namespace sparsecount
