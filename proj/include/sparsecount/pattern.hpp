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

// Static analysis of small pattern graphs. Everything here is exponential in
// the pattern size and meant for patterns of roughly a dozen vertices.

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "sparsecount/graph.hpp"
#include "sparsecount/numeric.hpp"

namespace sparsecount {

/// Pattern exceeds what an exhaustive routine supports.
class PatternTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kMaxCanonicalVertices = 10;
inline constexpr std::size_t kMaxOrientationEdges = 24;

/// Length of the longest induced cycle; 0 when the pattern is a forest.
std::size_t licl(const UndirectedGraph& h);

/// Smallest t >= 1 with licl < 3(t+1).
std::size_t min_extension_depth(std::size_t licl);

std::uint64_t automorphism_count(const UndirectedGraph& h);

/// Isomorphism-invariant code: equal iff the graphs are isomorphic.
struct CanonicalCode {
  std::size_t num_vertices = 0;
  std::vector<std::size_t> degrees;  // non-increasing
  std::uint64_t adjacency = 0;       // upper triangle, row-major
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// Vertices are ordered by non-increasing degree; among the orderings that
/// respect that, the lexicographically smallest upper-triangle bit string
/// is taken. Throws PatternTooLarge above kMaxCanonicalVertices.
CanonicalCode canonical_form(const UndirectedGraph& h);

/// The graph a canonical code describes (vertices in canonical order).
UndirectedGraph from_canonical(const CanonicalCode& code);

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const UndirectedGraph& h);

/// Subgraph of `h` on `vertices` re-indexed in the given order.
UndirectedGraph induced_undirected(const UndirectedGraph& h, std::span<const VertexId> vertices);

struct SpasmEntry {
  UndirectedGraph quotient;
  Rational coefficient;
};

/// Quotients of `h` over partitions into independent sets, with exact
/// coefficients c_i such that Sub(G, h) = sum_i c_i * Hom(G, quotient_i)
/// for every simple G. Isomorphic quotients are merged; zero sums dropped.
/// Entries are ordered by (vertex count descending, canonical code).
std::vector<SpasmEntry> spasm(const UndirectedGraph& h);

struct PatternProfile {
  std::size_t licl = 0;
  std::size_t t_min = 1;
  /// Largest licl over the spasm quotients.
  std::size_t spasm_licl = 0;
};

PatternProfile profile(const UndirectedGraph& h);

/// Every acyclic orientation of `h` with unit weights. `labels` defaults to
/// trivial labels when empty. Orientation i orients edge j (from
/// h.edges()) from its larger to its smaller endpoint when bit j of i is
/// set; the list keeps that enumeration order.
std::vector<DirWLGraph> acyclic_orientations(const UndirectedGraph& h, std::span<const Label> labels = {});

/// True when the arcs of `g` contain no directed cycle.
bool is_acyclic(const DirWLGraph& g);

}  // namespace sparsecount
