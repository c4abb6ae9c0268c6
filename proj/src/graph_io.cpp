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

#include "sparsecount/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>

namespace sparsecount {

namespace {

[[noreturn]] void fail_at(std::size_t line_no, const std::string& what) {
  throw GraphError("line " + std::to_string(line_no) + ": " + what);
}

bool is_skippable(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

LoadedGraph parse_edge_list(std::istream& in) {
  struct RawEdge {
    std::int64_t u, v;
    std::size_t line;
  };
  std::vector<RawEdge> raw;
  std::vector<std::int64_t> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    std::istringstream ss(line);
    std::vector<std::int64_t> tok;
    std::int64_t x;
    while (ss >> x) tok.push_back(x);
    if (!ss.eof()) fail_at(line_no, "expected integer vertex ids");
    if (tok.empty() || tok.size() > 2) fail_at(line_no, "expected 'u v' or a single vertex id");
    for (auto id : tok)
      if (id < 0) fail_at(line_no, "negative vertex id");
    ids.insert(ids.end(), tok.begin(), tok.end());
    if (tok.size() == 2) {
      if (tok[0] == tok[1]) fail_at(line_no, "self-loop on vertex " + std::to_string(tok[0]));
      raw.push_back({tok[0], tok[1], line_no});
    }
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::unordered_map<std::int64_t, VertexId> dense;
  dense.reserve(ids.size());
  for (VertexId i = 0; i < ids.size(); ++i) dense.emplace(ids[i], i);

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  std::unordered_map<std::uint64_t, std::size_t> seen;
  seen.reserve(raw.size());
  for (const RawEdge& r : raw) {
    VertexId a = dense.at(r.u), b = dense.at(r.v);
    if (a > b) std::swap(a, b);
    auto key = (static_cast<std::uint64_t>(a) << 32) | b;
    auto [it, fresh] = seen.emplace(key, r.line);
    if (!fresh)
      fail_at(r.line, "parallel edge " + std::to_string(r.u) + " " + std::to_string(r.v) +
                          " (first seen on line " + std::to_string(it->second) + ")");
    edges.push_back({a, b});
  }
  return {UndirectedGraph(ids.size(), edges), std::move(ids)};
}

LoadedGraph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return parse_edge_list(in);
  } catch (const GraphError& e) {
    throw GraphError(path.string() + ": " + e.what());
  }
}

void write_edge_list(std::ostream& out, const UndirectedGraph& g) {
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) == 0) out << v << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list(const std::filesystem::path& path, const UndirectedGraph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_edge_list(out, g);
}

void write_wl_dump(std::ostream& out, const DirWLGraph& g) {
  out << "n " << g.num_vertices() << '\n';
  for (const Arc& a : g.arcs()) out << a.from << ' ' << a.to << ' ' << a.weight << '\n';
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    out << "label " << v << ' ';
    if (g.label(v) == kTrivialLabel)
      out << '-';
    else
      out << g.label(v);
    out << '\n';
  }
}

DirWLGraph parse_wl_dump(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool have_n = false;
  std::vector<Arc> arcs;
  std::vector<Label> labels;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    std::istringstream ss(line);
    std::string head;
    ss >> head;
    if (head == "n") {
      if (!(ss >> n)) fail_at(line_no, "bad vertex count");
      have_n = true;
      labels.assign(n, kTrivialLabel);
    } else if (head == "label") {
      if (!have_n) fail_at(line_no, "label before 'n' header");
      std::size_t v;
      std::string l;
      if (!(ss >> v >> l) || v >= n) fail_at(line_no, "bad label line");
      labels[v] = (l == "-") ? kTrivialLabel : static_cast<Label>(std::stoul(l));
    } else {
      if (!have_n) fail_at(line_no, "arc before 'n' header");
      std::istringstream arc_ss(line);
      std::uint64_t u, v, w;
      if (!(arc_ss >> u >> v >> w)) fail_at(line_no, "expected 'u v w'");
      arcs.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), static_cast<Weight>(w)});
    }
  }
  return DirWLGraph(n, std::move(arcs), std::move(labels));
}

}  // namespace sparsecount
