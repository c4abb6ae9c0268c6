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

#include <cstddef>
#include <string>
#include <vector>

#include "sparsecount/counting.hpp"
#include "sparsecount/graph.hpp"

namespace sparsecount {

struct StageTimings {
  double product_ms = 0;
  double host_extension_ms = 0;
  double pattern_extension_ms = 0;
  double dp_ms = 0;
  double total_ms = 0;
};

/// Summary of one counting run. For multi-component patterns licl and t
/// are maxima over components and n_extensions is a sum; the host
/// extension stats likewise take the maximum.
struct RunReport {
  BigInt count;
  std::size_t licl = 0;
  std::size_t t = 0;
  std::size_t n_extensions = 0;
  std::size_t spasm_size = 0;  // 0 for homomorphism runs
  std::size_t host_n = 0;
  std::size_t host_m = 0;
  std::size_t kappa = 0;
  std::size_t delta_plus = 0;  // max out-degree of the host extension
  bool used_fallback = false;
  StageTimings timings;
  std::vector<ComponentReport> components;
};

RunReport make_report(const UndirectedGraph& host, const HomCountResult& result, double total_ms);
RunReport make_report(const UndirectedGraph& host, const SubCountResult& result, double total_ms);

/// JSON object with keys count, licl, t, n_extensions, kappa, delta_plus,
/// stage_timings_ms and a few extras. count is a JSON number when it fits
/// in 64 bits and a decimal string otherwise.
std::string to_json(const RunReport& report, int indent = 2);

}  // namespace sparsecount
