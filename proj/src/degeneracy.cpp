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

#include "sparsecount/degeneracy.hpp"

#include <algorithm>
#include <stdexcept>

namespace sparsecount {

namespace {

// Bucket queue indexed by residual degree. Each bucket is a min-heap on
// vertex id so the lowest-id vertex of the minimum bucket is removed first.
// Stale entries (degree changed or vertex removed) are skipped lazily.
class PeelQueue {
 public:
  explicit PeelQueue(const std::vector<std::size_t>& degree) {
    std::size_t max_deg = 0;
    for (auto d : degree) max_deg = std::max(max_deg, d);
    buckets_.resize(max_deg + 1);
    for (VertexId v = 0; v < degree.size(); ++v) buckets_[degree[v]].push_back(v);
    for (auto& b : buckets_) std::make_heap(b.begin(), b.end(), std::greater<>());
  }

  void push(VertexId v, std::size_t d) {
    auto& b = buckets_[d];
    b.push_back(v);
    std::push_heap(b.begin(), b.end(), std::greater<>());
    if (d < cursor_) cursor_ = d;
  }

  // Pops the lowest id among live entries of the smallest non-empty bucket.
  template <typename IsLive>
  VertexId pop(IsLive&& is_live) {
    for (;; ++cursor_) {
      auto& b = buckets_[cursor_];
      while (!b.empty()) {
        std::pop_heap(b.begin(), b.end(), std::greater<>());
        VertexId v = b.back();
        b.pop_back();
        if (is_live(v, cursor_)) return v;
      }
    }
  }

 private:
  std::vector<std::vector<VertexId>> buckets_;
  std::size_t cursor_ = 0;
};

}  // namespace

DegeneracyOrder degeneracy_order(const UndirectedGraph& g) {
  const std::size_t n = g.num_vertices();
  DegeneracyOrder result;
  result.order.reserve(n);
  result.position.assign(n, 0);
  std::vector<std::size_t> degree(n);
  for (VertexId v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::vector<char> removed(n, 0);
  PeelQueue queue(degree);
  for (std::size_t step = 0; step < n; ++step) {
    VertexId v = queue.pop([&](VertexId x, std::size_t d) { return !removed[x] && degree[x] == d; });
    removed[v] = 1;
    result.kappa = std::max(result.kappa, degree[v]);
    result.position[v] = result.order.size();
    result.order.push_back(v);
    for (VertexId w : g.neighbors(v)) {
      if (removed[w]) continue;
      queue.push(w, --degree[w]);
    }
  }
  return result;
}

std::vector<Arc> degeneracy_orient(const UndirectedGraph& g, Weight weight) {
  if (weight == 0) throw std::invalid_argument("degeneracy_orient: weight must be >= 1");
  auto peel = degeneracy_order(g);
  std::vector<Arc> arcs;
  arcs.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    if (peel.position[e.u] < peel.position[e.v])
      arcs.push_back({e.u, e.v, weight});
    else
      arcs.push_back({e.v, e.u, weight});
  }
  return arcs;
}

std::vector<Arc> degeneracy_orient(std::size_t n, const EdgeSet& edges) {
  return degeneracy_orient(UndirectedGraph(n, edges.pairs), edges.weight);
}

}  // namespace sparsecount
