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

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "sparsecount/graph.hpp"

namespace sparsecount {

/// One representative (lowest id) per source strongly connected component.
/// The result is pairwise mutually unreachable and jointly reaches every
/// vertex; on extensions of DAG orientations it is the in-degree-0 set.
std::vector<VertexId> hubset(const DirWLGraph& g);

/// Vertices with a directed path from some member of `sources` (members
/// included), sorted.
std::vector<VertexId> reach(const DirWLGraph& g, std::span<const VertexId> sources);

/// Per-vertex reachability of a pattern-sized graph (at most 64 vertices)
/// as bitmasks. Built once; read-only afterwards.
class ReachIndex {
 public:
  using Mask = std::uint64_t;
  explicit ReachIndex(const DirWLGraph& g);

  Mask of(VertexId v) const { return reach_[v]; }
  Mask of(std::span<const VertexId> vs) const;
  std::size_t num_vertices() const { return reach_.size(); }

 private:
  std::vector<Mask> reach_;
};

/// Graph on a hub subset: {s1, s2} is an edge iff some vertex is reached by
/// both s1 and s2 and by no other member of the subset.
struct URGraph {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;  // endpoints are graph vertex ids, u < v
};

URGraph unique_reachability_graph(const DirWLGraph& g, std::span<const VertexId> hubs);

/// True when the graph (vertices, edges) has no cycle.
bool is_forest(const URGraph& ur);

inline constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

/// Rooted tree of singleton hub bags.
struct HubTree {
  std::vector<VertexId> bags;      // bag i holds hub bags[i]
  std::vector<std::size_t> parent; // parent[root] == kNoParent
  std::size_t root = 0;

  std::vector<std::vector<std::size_t>> children() const;
};

/// Width-1 hub-tree decomposition of a pattern-sized graph, or nullopt if
/// none exists. Hubs are inserted in order of decreasing reach size, each
/// attached under a bag that covers its intersections with every bag placed
/// so far. When no such bag exists the labeled trees on the hubset are
/// searched exhaustively.
std::optional<HubTree> find_width1_decomposition(const DirWLGraph& g);

/// Bags are hubs, cover the hubset, the parent array is a tree, and for all
/// bags B1, B2 and every B on their tree path,
/// Reach(B1) & Reach(B2) is contained in Reach(B).
bool validate_decomposition(const DirWLGraph& g, const HubTree& tree);

}  // namespace sparsecount
