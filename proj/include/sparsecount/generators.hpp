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

// Instance generators. All random generators take an explicit seed.

#pragma once

#include <cstddef>
#include <cstdint>

#include "sparsecount/graph.hpp"

namespace sparsecount {

UndirectedGraph path_graph(std::size_t vertices);
UndirectedGraph cycle_graph(std::size_t length);
UndirectedGraph complete_graph(std::size_t n);
UndirectedGraph star_graph(std::size_t leaves);

/// Every edge replaced by a path of t+1 edges. Original vertices keep their
/// ids; the t internal vertices of the i-th edge (in edges() order) are
/// n + i*t, ..., n + i*t + t - 1.
UndirectedGraph generate_subdivision(const UndirectedGraph& g, std::size_t t);

/// Every edge replaced by two internally disjoint paths of t+1 and t+2
/// edges. Requires t >= 2.
UndirectedGraph generate_double_subdivision(const UndirectedGraph& g, std::size_t t);

/// Vertex i joins min(c, i) distinct uniformly chosen earlier vertices, so
/// the degeneracy is at most c. Requires c >= 1.
UndirectedGraph generate_bounded_degeneracy(std::size_t n, std::size_t c, std::uint64_t seed);

/// Erdos-Renyi G(n, p).
UndirectedGraph generate_gnp(std::size_t n, double p, std::uint64_t seed);

/// Connected graph on k vertices: a random recursive tree plus each
/// remaining pair independently with probability p.
UndirectedGraph generate_connected(std::size_t k, double p, std::uint64_t seed);

/// Random graph with exactly m edges and degeneracy at most c: a bounded
/// degeneracy graph on ceil(m / c) + c vertices, trimmed to its first m
/// edges in insertion order.
UndirectedGraph generate_bounded_degeneracy_edges(std::size_t m, std::size_t c, std::uint64_t seed);

}  // namespace sparsecount
