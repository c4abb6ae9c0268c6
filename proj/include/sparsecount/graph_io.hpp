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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "sparsecount/graph.hpp"

namespace sparsecount {

/// A graph read from text with its original (file) vertex ids.
struct LoadedGraph {
  UndirectedGraph graph;
  /// original_ids[v] is the id used in the file for dense vertex v.
  /// Dense ids follow increasing file id.
  std::vector<std::int64_t> original_ids;
};

/// Edge-list text: one "u v" pair per line, whitespace separated. Lines
/// starting with '#' and blank lines are skipped. A line with a single id
/// declares an isolated vertex. Self-loops and repeated edges raise a
/// GraphError naming the offending line.
LoadedGraph parse_edge_list(std::istream& in);
LoadedGraph read_edge_list(const std::filesystem::path& path);

/// Writes "u v" lines (u < v) using dense ids. Isolated vertices are
/// written as single-id lines so the vertex count round-trips.
void write_edge_list(std::ostream& out, const UndirectedGraph& g);
void write_edge_list(const std::filesystem::path& path, const UndirectedGraph& g);

/// Debug dump of a weighted labeled digraph:
///   "n <count>" header, "u v w" arc lines, then "label <v> <l>" lines
///   ("label <v> -" for the trivial label).
void write_wl_dump(std::ostream& out, const DirWLGraph& g);
DirWLGraph parse_wl_dump(std::istream& in);

}  // namespace sparsecount
