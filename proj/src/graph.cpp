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

#include "sparsecount/graph.hpp"

#include <algorithm>
#include <string>
#include <tuple>

namespace sparsecount {

namespace {

std::string edge_str(VertexId u, VertexId v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

UndirectedGraph::UndirectedGraph(std::size_t n, std::span<const Edge> edges) {
  offsets_.assign(n + 1, 0);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) throw GraphError("edge " + edge_str(e.u, e.v) + " out of range");
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
  neighbors_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges) {
    neighbors_[fill[e.u]++] = e.v;
    neighbors_[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = neighbors_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = neighbors_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last);
    auto dup = std::adjacent_find(first, last);
    if (dup != last) throw GraphError("parallel edge " + edge_str(static_cast<VertexId>(v), *dup));
  }
}

bool UndirectedGraph::has_edge(VertexId u, VertexId v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> UndirectedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (VertexId u = 0; u < num_vertices(); ++u)
    for (VertexId v : neighbors(u))
      if (u < v) out.push_back({u, v});
  return out;
}

DirWLGraph::DirWLGraph(std::size_t n, std::vector<Arc> arcs)
    : DirWLGraph(n, std::move(arcs), std::vector<Label>(n, kTrivialLabel)) {}

DirWLGraph::DirWLGraph(std::size_t n, std::vector<Arc> arcs, std::vector<Label> labels)
    : arcs_(std::move(arcs)), labels_(std::move(labels)) {
  if (labels_.size() != n) throw GraphError("label vector size does not match vertex count");
  build();
}

void DirWLGraph::build() {
  const std::size_t n = labels_.size();
  for (const Arc& a : arcs_) {
    if (a.from >= n || a.to >= n) throw GraphError("arc " + edge_str(a.from, a.to) + " out of range");
    if (a.from == a.to) throw GraphError("self-loop arc at vertex " + std::to_string(a.from));
    if (a.weight == 0) throw GraphError("arc " + edge_str(a.from, a.to) + " has weight 0");
  }
  std::sort(arcs_.begin(), arcs_.end(),
            [](const Arc& a, const Arc& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });

  out_offsets_.assign(n + 1, 0);
  in_offsets_.assign(n + 1, 0);
  for (const Arc& a : arcs_) {
    ++out_offsets_[a.from + 1];
    ++in_offsets_[a.to + 1];
  }
  for (std::size_t i = 0; i < n; ++i) {
    out_offsets_[i + 1] += out_offsets_[i];
    in_offsets_[i + 1] += in_offsets_[i];
  }
  out_.resize(arcs_.size());
  in_.resize(arcs_.size());
  {
    std::vector<std::size_t> fill_in(in_offsets_.begin(), in_offsets_.end() - 1);
    std::size_t pos = 0;
    // arcs_ sorted by (from, to): out lists come out sorted, and in lists
    // are filled in increasing `from` order.
    for (const Arc& a : arcs_) {
      out_[pos++] = {a.to, a.weight};
      in_[fill_in[a.to]++] = {a.from, a.weight};
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto o = out_arcs(static_cast<VertexId>(v));
    for (std::size_t i = 1; i < o.size(); ++i)
      if (o[i].to == o[i - 1].to)
        throw GraphError("parallel arc " + edge_str(static_cast<VertexId>(v), o[i].to));
  }
  for (const Arc& a : arcs_)
    if (arc_weight(a.to, a.from))
      throw GraphError("antiparallel arcs between " + std::to_string(a.from) + " and " + std::to_string(a.to));

  by_label_.clear();
  by_label_vertices_.resize(n);
  std::vector<std::pair<Label, VertexId>> tmp(n);
  for (VertexId v = 0; v < n; ++v) tmp[v] = {labels_[v], v};
  std::sort(tmp.begin(), tmp.end());
  for (std::size_t i = 0; i < n; ++i) {
    by_label_vertices_[i] = tmp[i].second;
    if (i == 0 || tmp[i].first != tmp[i - 1].first) by_label_.push_back({tmp[i].first, static_cast<VertexId>(i)});
  }
}

std::span<const VertexId> DirWLGraph::vertices_with_label(Label l) const {
  auto it = std::lower_bound(by_label_.begin(), by_label_.end(), std::pair<Label, VertexId>{l, 0});
  if (it == by_label_.end() || it->first != l) return {};
  std::size_t begin = it->second;
  std::size_t end = (it + 1 == by_label_.end()) ? by_label_vertices_.size() : (it + 1)->second;
  return {by_label_vertices_.data() + begin, by_label_vertices_.data() + end};
}

Weight DirWLGraph::max_weight() const {
  Weight w = 0;
  for (const Arc& a : arcs_) w = std::max(w, a.weight);
  return w;
}

std::vector<Arc> DirWLGraph::layer(Weight w) const {
  std::vector<Arc> out;
  for (const Arc& a : arcs_)
    if (a.weight == w) out.push_back(a);
  return out;
}

DirWLGraph DirWLGraph::with_arcs(std::span<const Arc> extra) const {
  std::vector<Arc> all;
  all.reserve(arcs_.size() + extra.size());
  all.insert(all.end(), arcs_.begin(), arcs_.end());
  all.insert(all.end(), extra.begin(), extra.end());
  return DirWLGraph(num_vertices(), std::move(all), labels_);
}

std::vector<OutArc> out_neighbors(const DirWLGraph& g, VertexId v) {
  auto o = g.out_arcs(v);
  return {o.begin(), o.end()};
}

std::size_t max_outdegree(const DirWLGraph& g) {
  std::size_t best = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) best = std::max(best, g.out_degree(v));
  return best;
}

InducedSubgraph induced_subgraph(const DirWLGraph& g, std::span<const VertexId> vertices) {
  InducedSubgraph result;
  result.original_id.assign(vertices.begin(), vertices.end());
  std::sort(result.original_id.begin(), result.original_id.end());
  result.original_id.erase(std::unique(result.original_id.begin(), result.original_id.end()),
                           result.original_id.end());
  std::vector<VertexId> index(g.num_vertices(), kNoVertex);
  std::vector<Label> labels;
  labels.reserve(result.original_id.size());
  for (VertexId i = 0; i < result.original_id.size(); ++i) {
    VertexId v = result.original_id[i];
    if (v >= g.num_vertices()) throw GraphError("induced_subgraph: vertex out of range");
    index[v] = i;
    labels.push_back(g.label(v));
  }
  std::vector<Arc> arcs;
  for (VertexId v : result.original_id)
    for (const OutArc& a : g.out_arcs(v))
      if (index[a.to] != kNoVertex) arcs.push_back({index[v], index[a.to], a.weight});
  result.graph = DirWLGraph(result.original_id.size(), std::move(arcs), std::move(labels));
  return result;
}

UndirectedGraph underlying_undirected(const DirWLGraph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.num_arcs());
  for (const Arc& a : g.arcs()) edges.push_back({std::min(a.from, a.to), std::max(a.from, a.to)});
  return UndirectedGraph(g.num_vertices(), edges);
}

}  // namespace sparsecount
