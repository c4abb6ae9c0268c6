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

// Fraternal augmentation. A t-fraternal extension starts from an orientation
// (all arcs weight 1) and, for i = 2..t, links the two endpoints of every
// out-out wedge whose arc weights sum to i with a new edge of weight i. The
// pattern side branches over every orientation of each new layer; the host
// side orients each layer by its own degeneracy order.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "sparsecount/graph.hpp"
#include "sparsecount/product.hpp"

namespace sparsecount {

struct FraternalExtension {
  DirWLGraph graph;
  std::size_t depth = 1;

  /// Arcs of weight i (1 <= i <= depth).
  std::vector<Arc> layer(Weight i) const { return graph.layer(i); }
};

/// Raised when enumerating pattern extensions would exceed the member cap.
class ExtensionLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultExtensionCap = 1'000'000;

/// Unordered pairs {u, w} (u < w) such that some center has arcs to both
/// with weights summing to t, and u, w are not yet adjacent. Each pair once,
/// sorted.
EdgeSet extension_edges(const DirWLGraph& g, Weight t);

/// All t-fraternal extensions over all acyclic orientations of the labeled
/// pattern. No isomorphism reduction: members are distinct arc sets.
std::vector<FraternalExtension> enumerate_pattern_extensions(const LabeledPattern& hl, std::size_t t,
                                                             std::size_t cap = kDefaultExtensionCap);

/// Host-side extension: layer 1 is the degeneracy orientation of F; layer i
/// is extension_edges(., i) oriented by the degeneracy order of that layer
/// alone. Labels are carried over from F.
FraternalExtension optimal_extension(const ProductHost& f, std::size_t t);
FraternalExtension optimal_extension(const UndirectedGraph& g, std::span<const Label> labels, std::size_t t);

/// Checks that the weights of `ext` form a t-fraternity function, t =
/// ext.depth: for every pair x != y, with m the smaller of the two arc
/// weights (absent = infinity) and s the smallest wedge sum over a common
/// in-neighbor z, either m == 1, or m == s, or both m and s exceed t.
/// Runs in O(sum of squared out-degrees).
bool validate_fraternity(const FraternalExtension& ext);

}  // namespace sparsecount
