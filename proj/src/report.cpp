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

#include "sparsecount/report.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include <nlohmann/json.hpp>

#include "sparsecount/degeneracy.hpp"

namespace sparsecount {

namespace {

void absorb(RunReport& r, const ComponentReport& c) {
  r.licl = std::max(r.licl, c.licl);
  r.t = std::max(r.t, c.depth);
  r.n_extensions += c.num_extensions;
  r.delta_plus = std::max(r.delta_plus, c.host_delta_plus);
  r.used_fallback = r.used_fallback || c.used_fallback;
  r.timings.product_ms += c.product_ms;
  r.timings.host_extension_ms += c.host_extension_ms;
  r.timings.pattern_extension_ms += c.pattern_extension_ms;
  r.timings.dp_ms += c.dp_ms;
  r.components.push_back(c);
}

RunReport base(const UndirectedGraph& host, double total_ms) {
  RunReport r;
  r.host_n = host.num_vertices();
  r.host_m = host.num_edges();
  r.kappa = degeneracy_order(host).kappa;
  r.timings.total_ms = total_ms;
  return r;
}

nlohmann::json big(const BigInt& x) {
  if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) return x.convert_to<std::uint64_t>();
  if (x < 0 && x >= std::numeric_limits<std::int64_t>::min()) return x.convert_to<std::int64_t>();
  return to_string(x);
}

}  // namespace

RunReport make_report(const UndirectedGraph& host, const HomCountResult& result, double total_ms) {
  RunReport r = base(host, total_ms);
  r.count = result.count;
  for (const auto& c : result.components) absorb(r, c);
  return r;
}

RunReport make_report(const UndirectedGraph& host, const SubCountResult& result, double total_ms) {
  RunReport r = base(host, total_ms);
  r.count = result.count;
  r.spasm_size = result.terms.size();
  for (const auto& term : result.terms)
    for (const auto& c : term.components) absorb(r, c);
  return r;
}

std::string to_json(const RunReport& r, int indent) {
  nlohmann::json j;
  j["count"] = big(r.count);
  j["licl"] = r.licl;
  j["t"] = r.t;
  j["n_extensions"] = r.n_extensions;
  j["kappa"] = r.kappa;
  j["delta_plus"] = r.delta_plus;
  j["stage_timings_ms"] = {{"product", r.timings.product_ms},
                           {"host_extension", r.timings.host_extension_ms},
                           {"pattern_extensions", r.timings.pattern_extension_ms},
                           {"dp", r.timings.dp_ms},
                           {"total", r.timings.total_ms}};
  j["host"] = {{"n", r.host_n}, {"m", r.host_m}};
  if (r.spasm_size > 0) j["spasm_size"] = r.spasm_size;
  j["used_fallback"] = r.used_fallback;
  auto& comps = j["components"] = nlohmann::json::array();
  for (const auto& c : r.components)
    comps.push_back({{"vertices", c.num_vertices},
                     {"licl", c.licl},
                     {"t", c.depth},
                     {"n_extensions", c.num_extensions},
                     {"host_vertices", c.host_vertices},
                     {"host_arcs", c.host_arcs},
                     {"delta_plus", c.host_delta_plus},
                     {"used_fallback", c.used_fallback},
                     {"count", big(c.count)}});
  return j.dump(indent);
}

}  // namespace sparsecount
