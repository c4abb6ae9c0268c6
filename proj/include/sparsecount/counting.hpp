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

// Homomorphism and subgraph counting.
//
// Hom(G, H) is computed by labeling H with its own vertices, taking the
// labeled product F = H^L x G, extending F to depth t with per-layer
// degeneracy orientations, and summing, over every t-fraternal extension H'
// of H^L, the number of weight-dominated label-preserving homomorphisms
// H' -> ext(F). Each such count is a tree DP over a width-1 hub-tree
// decomposition of H': a bag's dictionary maps every homomorphism of the
// subpattern its hub reaches to the number of ways it extends to the bag's
// subtree.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "sparsecount/fraternal.hpp"
#include "sparsecount/graph.hpp"
#include "sparsecount/hub_decomp.hpp"
#include "sparsecount/numeric.hpp"

namespace sparsecount {

inline constexpr std::size_t kMaxPatternVertices = 16;

/// A pattern extension admits no width-1 hub-tree decomposition. The
/// offending extension is kept for diagnostics.
class NoWidth1Decomposition : public std::runtime_error {
 public:
  NoWidth1Decomposition(const std::string& what, DirWLGraph extension)
      : std::runtime_error(what), extension_(std::move(extension)) {}
  const DirWLGraph& extension() const { return extension_; }

 private:
  DirWLGraph extension_;
};

/// Brute-force oracle refused an instance above its size cap.
class OracleLimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Partial map pattern vertex -> host vertex (kNoVertex = unmapped).
struct HomMap {
  std::vector<VertexId> image;
  friend bool operator==(const HomMap&, const HomMap&) = default;
};

/// Images of a fixed, ordered list of pattern vertices.
struct HomKey {
  std::array<VertexId, kMaxPatternVertices> images{};
  std::uint8_t size = 0;

  std::span<const VertexId> view() const { return {images.data(), size}; }
  friend bool operator==(const HomKey& a, const HomKey& b) {
    return a.size == b.size && std::equal(a.images.begin(), a.images.begin() + a.size, b.images.begin());
  }
};

struct HomKeyHash {
  std::size_t operator()(const HomKey& k) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ k.size;
    for (std::uint8_t i = 0; i < k.size; ++i) {
      h ^= k.images[i];
      h *= 0xff51afd7ed558ccdull;
      h ^= h >> 32;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Dictionary keyed by the images of `domain` (sorted pattern vertices).
/// Absent keys read as 0; present values are >= 1.
struct CountDict {
  std::vector<VertexId> domain;
  std::unordered_map<HomKey, BigInt, HomKeyHash> values;

  BigInt at(const HomKey& key) const;
  BigInt total() const;
  std::size_t size() const { return values.size(); }
};

/// Enumerates the homomorphisms of the subpattern induced on Reach(root)
/// into a host: spanning out-tree in BFS order from the root (ties by id),
/// candidates drawn from out-neighbors of the parent's image, then every
/// label, arc and weight-dominance check against earlier vertices.
class RootHomPlan {
 public:
  RootHomPlan(const DirWLGraph& pattern, VertexId root);

  /// Pattern vertices of Reach(root) in enumeration order.
  std::span<const VertexId> vertices() const { return order_; }
  /// Position of pattern vertex v within vertices(), or kNoVertex.
  VertexId position(VertexId v) const { return pos_[v]; }

  /// Calls f(images) for each homomorphism; images[i] is the host image of
  /// vertices()[i]. The span is only valid during the call.
  void for_each(const DirWLGraph& host, const std::function<void(std::span<const VertexId>)>& f) const;

 private:
  struct Check {
    std::uint32_t other;  // earlier position
    bool outgoing;        // arc runs from this vertex to `other`
    Weight weight;
  };
  struct Step {
    Label label;
    std::uint32_t parent;  // position of tree parent (unused for the root)
    Weight parent_weight;
    std::vector<Check> checks;
  };
  std::vector<VertexId> order_;
  std::vector<VertexId> pos_;
  std::vector<Step> steps_;
};

std::vector<HomMap> enumerate_root_homs(const DirWLGraph& pattern, VertexId root, const DirWLGraph& host);

/// Tree DP over a width-1 hub-tree decomposition of a pattern.
class BressanCounter {
 public:
  /// `tree` must be a valid decomposition of `pattern`.
  BressanCounter(const DirWLGraph& pattern, HubTree tree);

  /// C_B: for every homomorphism phi of the subpattern reached from bag B,
  /// the number of homomorphisms of B's subtree that agree with phi.
  CountDict count(std::size_t bag, const DirWLGraph& host) const;

  /// Sum of the root bag's dictionary, i.e. the homomorphism count.
  BigInt total(const DirWLGraph& host) const;

  const HubTree& tree() const { return tree_; }

 private:
  // Streams (root hom, value) pairs of a bag to `sink`. V is either a
  // checked std::uint64_t, which throws on overflow, or BigInt.
  template <class V>
  using Sink = std::function<void(std::span<const VertexId>, const V&)>;
  template <class V>
  void visit(std::size_t bag, const DirWLGraph& host, const Sink<V>& sink) const;

  struct ChildLink {
    std::size_t child;
    std::vector<std::uint32_t> parent_positions;  // shared vertices, in parent's order
    std::vector<std::uint32_t> child_positions;   // same vertices, in child's order
  };
  const DirWLGraph* pattern_;
  HubTree tree_;
  std::vector<RootHomPlan> plans_;
  std::vector<std::vector<ChildLink>> links_;
};

CountDict bressan_count(const DirWLGraph& pattern, const HubTree& tree, std::size_t bag, const DirWLGraph& host);

/// Number of homomorphisms pattern_ext -> host_ext. Throws
/// NoWidth1Decomposition when the pattern extension has none.
BigInt count_hom_extension(const FraternalExtension& pattern_ext, const FraternalExtension& host_ext);

struct CountOptions {
  /// Extension depth; defaults to the pattern's minimal depth per component.
  std::optional<std::size_t> depth;
  /// Worker threads for the per-extension counts; 0 = hardware concurrency.
  std::size_t threads = 1;
  /// Count components without a width-1 witness by backtracking instead of
  /// throwing.
  bool exact_fallback = false;
  std::size_t extension_cap = kDefaultExtensionCap;
};

struct ComponentReport {
  std::size_t num_vertices = 0;
  std::size_t licl = 0;
  std::size_t depth = 1;
  std::size_t num_extensions = 0;
  bool used_fallback = false;
  /// Vertex count, arc count and max out-degree of the host extension.
  std::size_t host_vertices = 0;
  std::size_t host_arcs = 0;
  std::size_t host_delta_plus = 0;
  double product_ms = 0;
  double host_extension_ms = 0;
  double pattern_extension_ms = 0;
  double dp_ms = 0;
  BigInt count;
};

struct HomCountResult {
  BigInt count;
  std::vector<ComponentReport> components;
};

HomCountResult count_homomorphisms_detailed(const UndirectedGraph& g, const UndirectedGraph& h,
                                            const CountOptions& options = {});
BigInt count_homomorphisms(const UndirectedGraph& g, const UndirectedGraph& h, const CountOptions& options = {});

struct SubCountResult {
  BigInt count;
  struct Term {
    UndirectedGraph quotient;
    Rational coefficient;
    BigInt homomorphisms;
    std::vector<ComponentReport> components;
  };
  std::vector<Term> terms;
};

/// Sum over the spasm of c_i * Hom(g, quotient_i), each quotient at its own
/// minimal depth. options.depth is ignored.
SubCountResult count_subgraphs_detailed(const UndirectedGraph& g, const UndirectedGraph& h,
                                        const CountOptions& options = {});
BigInt count_subgraphs(const UndirectedGraph& g, const UndirectedGraph& h, const CountOptions& options = {});

// Backtracking oracles. They share no code with the pipeline above.

inline constexpr std::size_t kBruteForceHomCap = 32;
inline constexpr std::size_t kBruteForceSubCap = 20;

BigInt brute_force_hom(const UndirectedGraph& g, const UndirectedGraph& h, std::size_t host_cap = kBruteForceHomCap);
/// Label-preserving maps with every pattern arc (u,v) sent to a host arc
/// whose weight is at most the pattern arc's weight.
BigInt brute_force_hom_wl(const DirWLGraph& host, const DirWLGraph& pattern,
                          std::size_t host_cap = kBruteForceHomCap);
BigInt brute_force_sub(const UndirectedGraph& g, const UndirectedGraph& h, std::size_t host_cap = kBruteForceSubCap);

}  // namespace sparsecount
