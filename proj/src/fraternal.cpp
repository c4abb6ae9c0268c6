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

#include "sparsecount/fraternal.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "sparsecount/degeneracy.hpp"
#include "sparsecount/pattern.hpp"

namespace sparsecount {

namespace {

std::uint64_t pair_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

EdgeSet extension_edges(const DirWLGraph& g, Weight t) {
  EdgeSet result;
  result.weight = t;
  for (VertexId center = 0; center < g.num_vertices(); ++center) {
    auto out = g.out_arcs(center);
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = i + 1; j < out.size(); ++j) {
        if (out[i].weight + out[j].weight != t) continue;
        VertexId u = out[i].to, w = out[j].to;  // u < w: out lists are sorted
        if (g.adjacent(u, w)) continue;
        result.pairs.push_back({u, w});
      }
    }
  }
  std::sort(result.pairs.begin(), result.pairs.end());
  result.pairs.erase(std::unique(result.pairs.begin(), result.pairs.end()), result.pairs.end());
  return result;
}

std::vector<FraternalExtension> enumerate_pattern_extensions(const LabeledPattern& hl, std::size_t t,
                                                             std::size_t cap) {
  if (t == 0) throw std::invalid_argument("enumerate_pattern_extensions: depth must be >= 1");
  std::vector<FraternalExtension> current;
  for (auto& orientation : acyclic_orientations(hl.graph, hl.labels)) {
    current.push_back({std::move(orientation), 1});
    if (current.size() > cap)
      throw ExtensionLimitExceeded("pattern extensions exceed cap of " + std::to_string(cap));
  }
  for (std::size_t i = 2; i <= t; ++i) {
    std::vector<FraternalExtension> next;
    for (const auto& member : current) {
      EdgeSet layer = extension_edges(member.graph, static_cast<Weight>(i));
      if (layer.pairs.size() >= 63 || next.size() + (std::size_t{1} << layer.pairs.size()) > cap)
        throw ExtensionLimitExceeded("pattern extensions at depth " + std::to_string(i) + " exceed cap of " +
                                     std::to_string(cap));
      const std::size_t options = std::size_t{1} << layer.pairs.size();
      for (std::size_t mask = 0; mask < options; ++mask) {
        std::vector<Arc> extra;
        extra.reserve(layer.pairs.size());
        for (std::size_t j = 0; j < layer.pairs.size(); ++j) {
          auto [u, w] = layer.pairs[j];
          if ((mask >> j) & 1) std::swap(u, w);
          extra.push_back({u, w, static_cast<Weight>(i)});
        }
        next.push_back({member.graph.with_arcs(extra), i});
      }
    }
    current = std::move(next);
  }
  return current;
}

FraternalExtension optimal_extension(const UndirectedGraph& g, std::span<const Label> labels, std::size_t t) {
  if (t == 0) throw std::invalid_argument("optimal_extension: depth must be >= 1");
  std::vector<Label> lab(labels.begin(), labels.end());
  if (lab.empty()) lab.assign(g.num_vertices(), kTrivialLabel);
  FraternalExtension ext{DirWLGraph(g.num_vertices(), degeneracy_orient(g, 1), std::move(lab)), 1};
  for (std::size_t i = 2; i <= t; ++i) {
    EdgeSet layer = extension_edges(ext.graph, static_cast<Weight>(i));
    auto arcs = degeneracy_orient(g.num_vertices(), layer);
    ext.graph = ext.graph.with_arcs(arcs);
    ext.depth = i;
  }
  ext.depth = t;
  return ext;
}

FraternalExtension optimal_extension(const ProductHost& f, std::size_t t) {
  return optimal_extension(f.graph, f.labels, t);
}

bool validate_fraternity(const FraternalExtension& ext) {
  const DirWLGraph& g = ext.graph;
  const auto t = static_cast<Weight>(ext.depth);
  for (const Arc& a : g.arcs())
    if (a.weight < 1 || a.weight > t) return false;

  // Smallest wedge sum per unordered pair.
  std::unordered_map<std::uint64_t, Weight> wedge;
  for (VertexId z = 0; z < g.num_vertices(); ++z) {
    auto out = g.out_arcs(z);
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = i + 1; j < out.size(); ++j) {
        Weight s = out[i].weight + out[j].weight;
        auto [it, fresh] = wedge.emplace(pair_key(out[i].to, out[j].to), s);
        if (!fresh) it->second = std::min(it->second, s);
      }
  }
  for (const Arc& a : g.arcs()) {
    if (a.weight == 1) continue;
    auto it = wedge.find(pair_key(a.from, a.to));
    if (it == wedge.end() || it->second != a.weight) return false;
  }
  // Unlinked pairs: the arc weight is infinite, so the wedge sum must exceed t.
  for (const auto& [key, s] : wedge) {
    auto x = static_cast<VertexId>(key >> 32), y = static_cast<VertexId>(key & 0xffffffffu);
    if (!g.adjacent(x, y) && s <= t) return false;
  }
  return true;
}

}  // namespace sparsecount
