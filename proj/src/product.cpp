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

#include "sparsecount/product.hpp"

#include <limits>
#include <numeric>

namespace sparsecount {

LabeledPattern label_pattern(const UndirectedGraph& h) {
  LabeledPattern hl{h, std::vector<Label>(h.num_vertices())};
  std::iota(hl.labels.begin(), hl.labels.end(), Label{0});
  return hl;
}

ProductHost pattern_product(const LabeledPattern& hl, const UndirectedGraph& g) {
  ProductHost f;
  f.pattern_size = hl.graph.num_vertices();
  f.host_size = g.num_vertices();
  const std::size_t total = f.pattern_size * f.host_size;
  if (total >= std::numeric_limits<VertexId>::max())
    throw GraphError("pattern_product: product has too many vertices");

  f.labels.resize(total);
  for (std::size_t u = 0; u < f.pattern_size; ++u)
    for (std::size_t v = 0; v < f.host_size; ++v) f.labels[u * f.host_size + v] = hl.labels[u];

  const auto pattern_edges = hl.graph.edges();
  const auto host_edges = g.edges();
  std::vector<Edge> edges;
  edges.reserve(2 * pattern_edges.size() * host_edges.size());
  for (const Edge& pe : pattern_edges) {
    for (const Edge& he : host_edges) {
      edges.push_back({f.vertex(pe.u, he.u), f.vertex(pe.v, he.v)});
      edges.push_back({f.vertex(pe.u, he.v), f.vertex(pe.v, he.u)});
    }
  }
  f.graph = UndirectedGraph(total, edges);
  return f;
}

}  // namespace sparsecount
