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

#include "sparsecount/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11/CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sparsecount/counting.hpp"
#include "sparsecount/degeneracy.hpp"
#include "sparsecount/fraternal.hpp"
#include "sparsecount/generators.hpp"
#include "sparsecount/graph_io.hpp"
#include "sparsecount/hub_decomp.hpp"
#include "sparsecount/pattern.hpp"
#include "sparsecount/product.hpp"
#include "sparsecount/report.hpp"

namespace sparsecount {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

json big(const BigInt& x) {
  if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) return x.convert_to<std::uint64_t>();
  return to_string(x);
}

std::string edge_text(const UndirectedGraph& g) {
  std::string s;
  for (const Edge& e : g.edges()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return s.empty() ? "(no edges)" : s;
}

std::size_t default_threads() {
  if (const char* env = std::getenv("SPARSECOUNT_THREADS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 0;
}

struct Settings {
  bool json = false;
  std::string host, pattern, graph, output;
  std::optional<std::size_t> t;
  std::size_t threads = default_threads();
  bool exact_fallback = false;
  std::size_t witnesses = 10;
  bool sub = false;
  std::size_t random = 0;
  std::uint64_t seed = 1;
  std::size_t n = 0;
  std::size_t c = 3;
  double p = 0.1;
  std::vector<std::size_t> sizes;
};

CountOptions count_options(const Settings& s) {
  CountOptions o;
  o.depth = s.t;
  o.threads = s.threads;
  o.exact_fallback = s.exact_fallback;
  return o;
}

void warn_fallback(const RunReport& r, std::ostream& err) {
  if (r.used_fallback)
    err << "WARNING: no width-1 decomposition at the chosen depth; counted by exhaustive backtracking\n";
}

void print_report(const RunReport& r, bool as_json, std::ostream& out) {
  if (as_json) {
    out << to_json(r) << '\n';
    return;
  }
  out << r.count << '\n';
}

int run_count_hom(const Settings& s, std::ostream& out, std::ostream& err) {
  auto g = read_edge_list(s.host).graph;
  auto h = read_edge_list(s.pattern).graph;
  auto t0 = Clock::now();
  auto result = count_homomorphisms_detailed(g, h, count_options(s));
  auto report = make_report(g, result, ms_since(t0));
  warn_fallback(report, err);
  print_report(report, s.json, out);
  return kExitOk;
}

int run_count_sub(const Settings& s, std::ostream& out, std::ostream& err) {
  auto g = read_edge_list(s.host).graph;
  auto h = read_edge_list(s.pattern).graph;
  auto t0 = Clock::now();
  auto result = count_subgraphs_detailed(g, h, count_options(s));
  auto report = make_report(g, result, ms_since(t0));
  warn_fallback(report, err);
  print_report(report, s.json, out);
  return kExitOk;
}

int run_analyze(const Settings& s, std::ostream& out) {
  auto h = read_edge_list(s.pattern).graph;
  auto prof = profile(h);
  const std::size_t t = s.t.value_or(prof.t_min);
  auto entries = spasm(h);
  auto members = enumerate_pattern_extensions(label_pattern(h), t);

  std::size_t with_witness = 0;
  json witnesses = json::array();
  std::ostringstream listing;
  for (std::size_t i = 0; i < members.size(); ++i) {
    auto tree = find_width1_decomposition(members[i].graph);
    if (tree) ++with_witness;
    if (i >= s.witnesses) continue;
    json w = {{"extension", i}, {"arcs", members[i].graph.num_arcs()}};
    listing << "  extension " << i << " (" << members[i].graph.num_arcs() << " arcs): ";
    if (!tree) {
      w["witness"] = nullptr;
      listing << "no width-1 decomposition\n";
    } else {
      std::vector<long long> parents;
      for (auto p : tree->parent) parents.push_back(p == kNoParent ? -1 : static_cast<long long>(p));
      w["witness"] = {{"bags", tree->bags}, {"parent", parents}, {"root", tree->root}};
      listing << "bags";
      for (auto b : tree->bags) listing << ' ' << b;
      listing << " | parent";
      for (auto p : parents) listing << ' ' << p;
      listing << '\n';
    }
    witnesses.push_back(std::move(w));
  }

  if (s.json) {
    json j;
    j["vertices"] = h.num_vertices();
    j["edges"] = h.num_edges();
    j["licl"] = prof.licl;
    j["t_min"] = prof.t_min;
    j["t"] = t;
    j["spasm_licl"] = prof.spasm_licl;
    j["spasm"] = json::array();
    for (const auto& e : entries)
      j["spasm"].push_back({{"coefficient", to_string(e.coefficient)},
                            {"vertices", e.quotient.num_vertices()},
                            {"edges", edge_text(e.quotient)}});
    j["n_extensions"] = members.size();
    j["width1_extensions"] = with_witness;
    j["witnesses"] = std::move(witnesses);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "vertices " << h.num_vertices() << "\nedges " << h.num_edges() << '\n';
  out << "licl " << prof.licl << "\nt_min " << prof.t_min << "\nt " << t << '\n';
  out << "spasm " << entries.size() << " quotients (largest licl " << prof.spasm_licl << ")\n";
  for (const auto& e : entries)
    out << "  " << to_string(e.coefficient) << "  k=" << e.quotient.num_vertices() << "  " << edge_text(e.quotient)
        << '\n';
  out << "extensions " << members.size() << " (" << with_witness << " with width-1 witness)\n";
  out << listing.str();
  if (members.size() > s.witnesses) out << "  ... " << members.size() - s.witnesses << " more\n";
  return kExitOk;
}

int emit_graph(const Settings& s, const UndirectedGraph& g, std::ostream& out) {
  if (s.output.empty())
    write_edge_list(out, g);
  else
    write_edge_list(std::filesystem::path(s.output), g);
  return kExitOk;
}

// One oracle comparison; returns false on mismatch.
bool verify_pair(const UndirectedGraph& g, const UndirectedGraph& h, bool sub, const Settings& s, json& record) {
  CountOptions o = count_options(s);
  BigInt fast = count_homomorphisms(g, h, o);
  BigInt slow = brute_force_hom(g, h);
  record["hom"] = {{"pipeline", big(fast)}, {"oracle", big(slow)}};
  bool ok = fast == slow;
  if (sub) {
    BigInt fs = count_subgraphs(g, h, o);
    BigInt ss = brute_force_sub(g, h);
    record["sub"] = {{"pipeline", big(fs)}, {"oracle", big(ss)}};
    ok = ok && fs == ss;
  }
  record["match"] = ok;
  return ok;
}

int run_verify(const Settings& s, std::ostream& out) {
  json records = json::array();
  std::size_t mismatches = 0;
  if (s.random > 0) {
    std::mt19937_64 rng(s.seed);
    for (std::size_t i = 0; i < s.random; ++i) {
      std::size_t n = std::uniform_int_distribution<std::size_t>(4, 16)(rng);
      std::size_t k = std::uniform_int_distribution<std::size_t>(2, 5)(rng);
      std::uint64_t gs = rng(), hs = rng();
      UndirectedGraph g = (rng() & 1) ? generate_bounded_degeneracy(n, 1 + rng() % 3, gs) : generate_gnp(n, 0.3, gs);
      UndirectedGraph h = generate_connected(k, 0.4, hs);
      json rec = {{"instance", i}, {"host_n", n}, {"host_m", g.num_edges()}, {"pattern", edge_text(h)}};
      if (!verify_pair(g, h, true, s, rec)) ++mismatches;
      records.push_back(std::move(rec));
    }
  } else {
    if (s.host.empty() || s.pattern.empty()) throw CLI::ValidationError("verify needs <host> <pattern> or --random N");
    auto g = read_edge_list(s.host).graph;
    auto h = read_edge_list(s.pattern).graph;
    json rec;
    if (!verify_pair(g, h, s.sub, s, rec)) ++mismatches;
    records.push_back(std::move(rec));
  }
  if (s.json) {
    out << json{{"instances", records.size()}, {"mismatches", mismatches}, {"results", records}}.dump(2) << '\n';
  } else {
    for (const auto& r : records)
      if (!r["match"].get<bool>()) out << "MISMATCH " << r.dump() << '\n';
    out << (records.size() - mismatches) << "/" << records.size() << " instances match\n";
  }
  return mismatches ? kExitMismatch : kExitOk;
}

int run_bench(const Settings& s, std::ostream& out) {
  auto h = read_edge_list(s.pattern).graph;
  CountOptions o = count_options(s);
  json rows = json::array();
  double prev = 0;
  for (std::size_t m : s.sizes) {
    auto g = generate_bounded_degeneracy_edges(m, s.c, s.seed);
    auto t0 = Clock::now();
    BigInt count = count_homomorphisms(g, h, o);
    double secs = ms_since(t0) / 1000.0;
    json row = {{"m", g.num_edges()}, {"n", g.num_vertices()}, {"seconds", secs}, {"count", big(count)}};
    if (prev > 0) row["ratio"] = secs / prev;
    prev = secs;
    if (!s.json) {
      out << "m " << g.num_edges() << "  n " << g.num_vertices() << "  time " << secs << " s";
      if (row.contains("ratio")) out << "  ratio " << row["ratio"].get<double>();
      out << "  count " << count << '\n';
    }
    rows.push_back(std::move(row));
  }
  if (s.json) out << json{{"pattern", edge_text(h)}, {"c", s.c}, {"runs", rows}}.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Homomorphism and subgraph counting in sparse graphs", "sparsecount"};
  app.require_subcommand(1);
  app.add_flag("--json", s.json, "Structured JSON output");

  auto add_counting = [&](CLI::App* cmd) {
    cmd->add_option("host", s.host, "Host edge list")->required()->check(CLI::ExistingFile);
    cmd->add_option("pattern", s.pattern, "Pattern edge list")->required()->check(CLI::ExistingFile);
    cmd->add_flag("--exact-fallback", s.exact_fallback, "Backtrack when no width-1 decomposition exists");
    cmd->add_option("--threads", s.threads, "Worker threads, 0 = all cores (default: $SPARSECOUNT_THREADS or 0)");
  };
  auto* hom = app.add_subcommand("count-hom", "Count homomorphisms pattern -> host");
  add_counting(hom);
  hom->add_option("--t", s.t, "Extension depth (default: minimal for the pattern)")->check(CLI::PositiveNumber);
  auto* sub = app.add_subcommand("count-sub", "Count (non-induced) subgraph copies of pattern in host");
  add_counting(sub);

  auto* analyze = app.add_subcommand("analyze", "Pattern profile, spasm and extension witnesses");
  analyze->add_option("pattern", s.pattern, "Pattern edge list")->required()->check(CLI::ExistingFile);
  analyze->add_option("--t", s.t, "Extension depth (default: t_min)")->check(CLI::PositiveNumber);
  analyze->add_option("--witnesses", s.witnesses, "Extensions listed individually");

  auto* gen = app.add_subcommand("gen", "Generate graphs as edge lists");
  gen->require_subcommand(1);
  gen->add_option("-o,--output", s.output, "Write to file instead of stdout");
  auto* subdiv = gen->add_subcommand("subdiv", "Replace every edge by a path of t+1 edges");
  auto* subdiv2 = gen->add_subcommand("subdiv2", "Replace every edge by paths of t+1 and t+2 edges");
  for (auto* cmd : {subdiv, subdiv2}) {
    cmd->add_option("graph", s.graph, "Input edge list")->required()->check(CLI::ExistingFile);
    cmd->add_option("--t", s.t, "Subdivision parameter")->required()->check(CLI::PositiveNumber);
  }
  auto* degen = gen->add_subcommand("degen", "Random graph with degeneracy at most c");
  degen->add_option("--n", s.n, "Vertices")->required();
  degen->add_option("--c", s.c, "Degeneracy bound")->check(CLI::PositiveNumber);
  degen->add_option("--seed", s.seed, "Seed");
  auto* gnp = gen->add_subcommand("gnp", "Erdos-Renyi G(n, p)");
  gnp->add_option("--n", s.n, "Vertices")->required();
  gnp->add_option("--p", s.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  gnp->add_option("--seed", s.seed, "Seed");

  auto* verify = app.add_subcommand("verify", "Compare the pipeline against brute force");
  verify->add_option("host", s.host, "Host edge list")->check(CLI::ExistingFile);
  verify->add_option("pattern", s.pattern, "Pattern edge list")->check(CLI::ExistingFile);
  verify->add_flag("--sub", s.sub, "Also compare subgraph counts");
  verify->add_option("--random", s.random, "Check N seeded random instances instead of files");
  verify->add_option("--seed", s.seed, "Seed for --random");
  verify->add_option("--threads", s.threads, "Worker threads");

  auto* bench = app.add_subcommand("bench", "Time homomorphism counting on growing hosts");
  bench->add_option("pattern", s.pattern, "Pattern edge list")->required()->check(CLI::ExistingFile);
  bench->add_option("--sizes", s.sizes, "Host edge counts")->required()->delimiter(',');
  bench->add_option("--c", s.c, "Host degeneracy bound")->check(CLI::PositiveNumber);
  bench->add_option("--seed", s.seed, "Seed");
  bench->add_option("--threads", s.threads, "Worker threads");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (hom->parsed()) return run_count_hom(s, out, err);
    if (sub->parsed()) return run_count_sub(s, out, err);
    if (analyze->parsed()) return run_analyze(s, out);
    if (subdiv->parsed()) return emit_graph(s, generate_subdivision(read_edge_list(s.graph).graph, *s.t), out);
    if (subdiv2->parsed())
      return emit_graph(s, generate_double_subdivision(read_edge_list(s.graph).graph, *s.t), out);
    if (degen->parsed()) return emit_graph(s, generate_bounded_degeneracy(s.n, s.c, s.seed), out);
    if (gnp->parsed()) return emit_graph(s, generate_gnp(s.n, s.p, s.seed), out);
    if (verify->parsed()) return run_verify(s, out);
    if (bench->parsed()) return run_bench(s, out);
  } catch (const NoWidth1Decomposition& e) {
    err << "error: " << e.what() << "\nhint: rerun with a larger --t or with --exact-fallback\n";
    return kExitNoWidth1;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cli_main(args, std::cout, std::cerr);
}

}  // namespace sparsecount
