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

#include <utility>
#include <vector>

#include "sparsecount/graph.hpp"

namespace sparsecount {

/// Pattern whose vertex labels are the vertices themselves.
struct LabeledPattern {
  UndirectedGraph graph;
  std::vector<Label> labels;  // labels[v] == v
};

LabeledPattern label_pattern(const UndirectedGraph& h);

/// Categorical product of a labeled pattern with a host graph. Vertex
/// <u, v> (pattern u, host v) has id u * host_size + v, so each fiber
/// {<u, .>} is the contiguous id range [u * host_size, (u+1) * host_size)
/// and carries label u.
struct ProductHost {
  UndirectedGraph graph;
  std::vector<Label> labels;
  std::size_t pattern_size = 0;
  std::size_t host_size = 0;

  VertexId vertex(VertexId pattern_vertex, VertexId host_vertex) const {
    return static_cast<VertexId>(pattern_vertex * host_size + host_vertex);
  }
  /// (pattern vertex, host vertex) of product vertex x.
  std::pair<VertexId, VertexId> split(VertexId x) const {
    return {static_cast<VertexId>(x / host_size), static_cast<VertexId>(x % host_size)};
  }
};

/// Edge <u,v>-<u',v'> exists iff {u,u'} is a pattern edge and {v,v'} a host
/// edge. |V| = k * n and |E| = 2 * |E_H| * |E_G|.
ProductHost pattern_product(const LabeledPattern& hl, const UndirectedGraph& g);

}  // namespace sparsecount
