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

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sparsecount {

using VertexId = std::uint32_t;
using Weight = std::uint32_t;
using Label = std::uint32_t;

inline constexpr Label kTrivialLabel = std::numeric_limits<Label>::max();
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/// Thrown when a graph would violate its structural invariants (self-loops,
/// parallel edges, antiparallel arcs, out-of-range ids, zero weights).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  VertexId u;
  VertexId v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1 in CSR form. Neighbor lists
/// are sorted by id. Immutable after construction.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;

  /// Builds from an edge list. Rejects self-loops and repeated edges
  /// (in either orientation) with a GraphError.
  UndirectedGraph(std::size_t n, std::span<const Edge> edges);
  UndirectedGraph(std::size_t n, std::initializer_list<Edge> edges)
      : UndirectedGraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const { return neighbors_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(VertexId u, VertexId v) const;

  /// Edge list with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> neighbors_;
};

struct Arc {
  VertexId from;
  VertexId to;
  Weight weight;
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct OutArc {
  VertexId to;
  Weight weight;
  friend bool operator==(const OutArc&, const OutArc&) = default;
};

/// Unordered vertex pairs sharing one weight; the layer produced by a single
/// fraternal augmentation round. Pairs are stored with u < v.
struct EdgeSet {
  Weight weight = 1;
  std::vector<Edge> pairs;
};

/// Directed graph with positive integer arc weights and per-vertex labels.
/// At most one of (u,v), (v,u) is present. Out- and in-adjacency are CSR
/// indexes sorted by neighbor id. Immutable after construction.
class DirWLGraph {
 public:
  DirWLGraph() = default;

  /// Unlabeled (every vertex gets kTrivialLabel).
  DirWLGraph(std::size_t n, std::vector<Arc> arcs);
  DirWLGraph(std::size_t n, std::vector<Arc> arcs, std::vector<Label> labels);

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_arcs() const { return arcs_.size(); }

  /// All arcs sorted by (from, to).
  std::span<const Arc> arcs() const { return arcs_; }
  std::span<const OutArc> out_arcs(VertexId v) const {
    return {out_.data() + out_offsets_[v], out_.data() + out_offsets_[v + 1]};
  }
  std::span<const OutArc> in_arcs(VertexId v) const {
    return {in_.data() + in_offsets_[v], in_.data() + in_offsets_[v + 1]};
  }
  std::size_t out_degree(VertexId v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
  std::size_t in_degree(VertexId v) const { return in_offsets_[v + 1] - in_offsets_[v]; }

  Label label(VertexId v) const { return labels_[v]; }
  std::span<const Label> labels() const { return labels_; }

  /// Vertices carrying `l`, sorted by id.
  std::span<const VertexId> vertices_with_label(Label l) const;

  std::optional<Weight> arc_weight(VertexId from, VertexId to) const {
    auto o = out_arcs(from);
    if (o.size() <= 16) {
      for (const OutArc& a : o)
        if (a.to >= to) return a.to == to ? std::optional<Weight>(a.weight) : std::nullopt;
      return std::nullopt;
    }
    auto it = std::lower_bound(o.begin(), o.end(), to, [](const OutArc& a, VertexId x) { return a.to < x; });
    if (it == o.end() || it->to != to) return std::nullopt;
    return it->weight;
  }
  bool adjacent(VertexId u, VertexId v) const {
    return arc_weight(u, v).has_value() || arc_weight(v, u).has_value();
  }

  Weight max_weight() const;
  /// Arcs whose weight equals `w` (the layer E^w).
  std::vector<Arc> layer(Weight w) const;

  /// Copy of this graph with extra arcs. Throws GraphError if an added arc
  /// collides with an existing one in either direction.
  DirWLGraph with_arcs(std::span<const Arc> extra) const;

 private:
  void build();

  std::vector<Arc> arcs_;
  std::vector<Label> labels_;
  std::vector<std::size_t> out_offsets_, in_offsets_;
  std::vector<OutArc> out_, in_;
  std::vector<std::pair<Label, VertexId>> by_label_;
  std::vector<VertexId> by_label_vertices_;
};

std::vector<OutArc> out_neighbors(const DirWLGraph& g, VertexId v);
std::size_t max_outdegree(const DirWLGraph& g);

struct InducedSubgraph {
  DirWLGraph graph;
  /// original_id[i] is the vertex of the source graph that became vertex i.
  std::vector<VertexId> original_id;
};

/// Restriction to `vertices` (any order, duplicates ignored), re-indexed
/// densely in increasing original id.
InducedSubgraph induced_subgraph(const DirWLGraph& g, std::span<const VertexId> vertices);

/// Undirected skeleton (drops weights and direction).
UndirectedGraph underlying_undirected(const DirWLGraph& g);

}  // namespace sparsecount
