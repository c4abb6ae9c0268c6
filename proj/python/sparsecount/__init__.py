# Copyright 2026 The sparsecount Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact homomorphism and subgraph counting in sparse graphs."""

from fractions import Fraction

from ._core import (
    Graph,
    GraphError,
    NoWidth1Decomposition,
    OracleLimitExceeded,
    automorphism_count,
    brute_force_hom,
    brute_force_sub,
    complete_graph,
    count_homomorphisms,
    count_subgraphs,
    cycle_graph,
    degeneracy,
    generate_bounded_degeneracy,
    generate_double_subdivision,
    generate_gnp,
    generate_subdivision,
    licl,
    min_extension_depth,
    path_graph,
    read_edge_list,
    star_graph,
    write_edge_list,
)
from ._core import spasm as _spasm

__all__ = [
    "Graph",
    "GraphError",
    "NoWidth1Decomposition",
    "OracleLimitExceeded",
    "automorphism_count",
    "brute_force_hom",
    "brute_force_sub",
    "complete_graph",
    "count_homomorphisms",
    "count_subgraphs",
    "cycle_graph",
    "degeneracy",
    "generate_bounded_degeneracy",
    "generate_double_subdivision",
    "generate_gnp",
    "generate_subdivision",
    "licl",
    "min_extension_depth",
    "path_graph",
    "read_edge_list",
    "spasm",
    "star_graph",
    "write_edge_list",
]


def spasm(pattern):
    """Spasm of `pattern` as a list of (quotient Graph, Fraction)."""
    return [(q, Fraction(num, den)) for q, num, den in _spasm(pattern)]
