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

#include <cstddef>
#include <vector>

#include "sparsecount/graph.hpp"

namespace sparsecount {

struct DegeneracyOrder {
  /// Vertices in peeling order.
  std::vector<VertexId> order;
  /// position[v] is the index of v in `order`.
  std::vector<std::size_t> position;
  /// Largest residual degree seen when a vertex was removed.
  std::size_t kappa = 0;
};

/// Peels a minimum residual degree vertex at a time, breaking ties by the
/// lowest vertex id.
DegeneracyOrder degeneracy_order(const UndirectedGraph& g);

/// Orients every edge from its earlier-peeled to its later-peeled endpoint,
/// all arcs carrying `weight`. The peel is computed on `g` alone.
std::vector<Arc> degeneracy_orient(const UndirectedGraph& g, Weight weight);

/// Same, for a bare edge set over vertices 0..n-1. Only the edges in `edges`
/// take part in the peel.
std::vector<Arc> degeneracy_orient(std::size_t n, const EdgeSet& edges);

}  // namespace sparsecount
