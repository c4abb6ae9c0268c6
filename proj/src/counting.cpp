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

#include "sparsecount/counting.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

#include <absl/container/flat_hash_map.h>

#include "sparsecount/graph_io.hpp"
#include "sparsecount/pattern.hpp"
#include "sparsecount/product.hpp"

namespace sparsecount {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

HomKey make_key(std::span<const VertexId> images, std::span<const std::uint32_t> positions) {
  HomKey key;
  key.size = static_cast<std::uint8_t>(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) key.images[i] = images[positions[i]];
  return key;
}

}  // namespace

BigInt CountDict::at(const HomKey& key) const {
  auto it = values.find(key);
  return it == values.end() ? BigInt(0) : it->second;
}

BigInt CountDict::total() const {
  BigInt sum = 0;
  for (const auto& [key, value] : values) sum += value;
  return sum;
}

// ---------------------------------------------------------------------------
// Root homomorphisms

RootHomPlan::RootHomPlan(const DirWLGraph& pattern, VertexId root) {
  const std::size_t k = pattern.num_vertices();
  if (root >= k) throw std::invalid_argument("RootHomPlan: root out of range");
  pos_.assign(k, kNoVertex);
  std::vector<VertexId> parent(k, kNoVertex);
  order_.push_back(root);
  pos_[root] = 0;
  for (std::size_t i = 0; i < order_.size(); ++i)
    for (const OutArc& a : pattern.out_arcs(order_[i]))
      if (pos_[a.to] == kNoVertex) {
        pos_[a.to] = static_cast<VertexId>(order_.size());
        parent[a.to] = order_[i];
        order_.push_back(a.to);
      }
  if (order_.size() > kMaxPatternVertices)
    throw PatternTooLarge("RootHomPlan: reach set larger than " + std::to_string(kMaxPatternVertices));

  steps_.resize(order_.size());
  for (std::uint32_t i = 0; i < order_.size(); ++i) {
    VertexId v = order_[i];
    Step& s = steps_[i];
    s.label = pattern.label(v);
    s.parent = 0;
    s.parent_weight = 0;
    if (i > 0) {
      s.parent = pos_[parent[v]];
      s.parent_weight = *pattern.arc_weight(parent[v], v);
    }
    for (const OutArc& a : pattern.out_arcs(v))
      if (pos_[a.to] < i) s.checks.push_back({pos_[a.to], true, a.weight});
    for (const OutArc& a : pattern.in_arcs(v))
      if (pos_[a.to] < i && !(i > 0 && a.to == parent[v])) s.checks.push_back({pos_[a.to], false, a.weight});
  }
}

void RootHomPlan::for_each(const DirWLGraph& host, const std::function<void(std::span<const VertexId>)>& f) const {
  const std::size_t k = order_.size();
  std::vector<VertexId> images(k);
  auto admissible = [&](std::uint32_t i, VertexId x) {
    const Step& s = steps_[i];
    if (host.label(x) != s.label) return false;
    for (const Check& c : s.checks) {
      auto w = c.outgoing ? host.arc_weight(x, images[c.other]) : host.arc_weight(images[c.other], x);
      if (!w || *w > c.weight) return false;
    }
    return true;
  };
  auto extend = [&](auto&& self, std::uint32_t i) -> void {
    if (i == k) {
      f(images);
      return;
    }
    const Step& s = steps_[i];
    for (const OutArc& a : host.out_arcs(images[s.parent])) {
      if (a.weight > s.parent_weight || !admissible(i, a.to)) continue;
      images[i] = a.to;
      self(self, i + 1);
    }
  };
  for (VertexId x : host.vertices_with_label(steps_[0].label)) {
    if (!admissible(0, x)) continue;
    images[0] = x;
    extend(extend, 1);
  }
}

std::vector<HomMap> enumerate_root_homs(const DirWLGraph& pattern, VertexId root, const DirWLGraph& host) {
  RootHomPlan plan(pattern, root);
  std::vector<HomMap> out;
  plan.for_each(host, [&](std::span<const VertexId> images) {
    HomMap m{std::vector<VertexId>(pattern.num_vertices(), kNoVertex)};
    for (std::size_t i = 0; i < images.size(); ++i) m.image[plan.vertices()[i]] = images[i];
    out.push_back(std::move(m));
  });
  return out;
}

// ---------------------------------------------------------------------------
// Tree DP

BressanCounter::BressanCounter(const DirWLGraph& pattern, HubTree tree) : pattern_(&pattern), tree_(std::move(tree)) {
  const std::size_t b = tree_.bags.size();
  for (VertexId hub : tree_.bags) plans_.emplace_back(pattern, hub);
  ReachIndex idx(pattern);
  auto children = tree_.children();

  // Reach of each bag's subtree.
  std::vector<ReachIndex::Mask> down(b, 0);
  auto collect = [&](auto&& self, std::size_t bag) -> ReachIndex::Mask {
    ReachIndex::Mask m = idx.of(tree_.bags[bag]);
    for (auto c : children[bag]) m |= self(self, c);
    return down[bag] = m;
  };
  if (b > 0) collect(collect, tree_.root);

  links_.resize(b);
  for (std::size_t bag = 0; bag < b; ++bag) {
    for (auto c : children[bag]) {
      ReachIndex::Mask shared = idx.of(tree_.bags[bag]) & down[c];
      if (shared & ~idx.of(tree_.bags[c]))
        throw std::logic_error("BressanCounter: decomposition does not separate reach sets");
      ChildLink link{c, {}, {}};
      for (ReachIndex::Mask m = shared; m; m &= m - 1) {
        auto v = static_cast<VertexId>(std::countr_zero(m));
        link.parent_positions.push_back(plans_[bag].position(v));
        link.child_positions.push_back(plans_[c].position(v));
      }
      links_[bag].push_back(std::move(link));
    }
  }
}

namespace {

struct CountOverflow {};

void add_to(std::uint64_t& a, std::uint64_t b) {
  if (__builtin_add_overflow(a, b, &a)) throw CountOverflow{};
}
void mul_by(std::uint64_t& a, std::uint64_t b) {
  if (__builtin_mul_overflow(a, b, &a)) throw CountOverflow{};
}
void add_to(BigInt& a, const BigInt& b) { a += b; }
void mul_by(BigInt& a, const BigInt& b) { a *= b; }

// Runs f<std::uint64_t>() and, if a count overflows 64 bits, f<BigInt>().
template <class F>
auto with_fallback(F&& f) {
  try {
    return f(std::uint64_t{});
  } catch (const CountOverflow&) {
    return f(BigInt{});
  }
}

// Child aggregate keyed by the images of the shared vertices. Arity 0 is a
// scalar, arity 1 a dense per-host-vertex array, arity 2 a packed 64-bit
// key; wider keys use the full HomKey.
template <class V>
class SharedTable {
 public:
  SharedTable(std::span<const std::uint32_t> positions, std::size_t host_size) : positions_(positions) {
    if (positions_.size() == 1) dense_.assign(host_size, V(0));
  }

  void add(std::span<const VertexId> images, const V& value) {
    any_ = true;
    switch (positions_.size()) {
      case 0:
        add_to(scalar_, value);
        break;
      case 1:
        add_to(dense_[images[positions_[0]]], value);
        break;
      case 2:
        add_to(pairs_[pack(images, positions_)], value);
        break;
      default:
        add_to(wide_[make_key(images, positions_)], value);
    }
  }

  // Value for the restriction of `images` (laid out by `positions`, which
  // names the same vertices in another plan's order); nullptr when zero.
  const V* find(std::span<const VertexId> images, std::span<const std::uint32_t> positions) const {
    switch (positions.size()) {
      case 0:
        return &scalar_;
      case 1: {
        const V& v = dense_[images[positions[0]]];
        return v == 0 ? nullptr : &v;
      }
      case 2: {
        auto it = pairs_.find(pack(images, positions));
        return it == pairs_.end() ? nullptr : &it->second;
      }
      default: {
        auto it = wide_.find(make_key(images, positions));
        return it == wide_.end() ? nullptr : &it->second;
      }
    }
  }

  bool empty() const { return !any_; }

 private:
  static std::uint64_t pack(std::span<const VertexId> images, std::span<const std::uint32_t> positions) {
    return (static_cast<std::uint64_t>(images[positions[0]]) << 32) | images[positions[1]];
  }

  std::span<const std::uint32_t> positions_;
  bool any_ = false;
  V scalar_ = 0;
  std::vector<V> dense_;
  absl::flat_hash_map<std::uint64_t, V> pairs_;
  absl::flat_hash_map<HomKey, V, HomKeyHash> wide_;
};

}  // namespace

template <class V>
void BressanCounter::visit(std::size_t bag, const DirWLGraph& host, const Sink<V>& sink) const {
  const auto& links = links_[bag];
  std::vector<SharedTable<V>> agg;
  agg.reserve(links.size());
  for (const auto& link : links) {
    auto& table = agg.emplace_back(link.child_positions, host.num_vertices());
    visit<V>(link.child, host, [&](std::span<const VertexId> images, const V& value) { table.add(images, value); });
    if (table.empty()) return;  // some child admits no extension at all
  }
  const V one = 1;
  plans_[bag].for_each(host, [&](std::span<const VertexId> images) {
    if (links.empty()) {
      sink(images, one);
      return;
    }
    V value = 1;
    for (std::size_t i = 0; i < links.size(); ++i) {
      const V* factor = agg[i].find(images, links[i].parent_positions);
      if (!factor) return;
      mul_by(value, *factor);
    }
    sink(images, value);
  });
}

CountDict BressanCounter::count(std::size_t bag, const DirWLGraph& host) const {
  const RootHomPlan& plan = plans_[bag];
  std::vector<VertexId> domain(plan.vertices().begin(), plan.vertices().end());
  std::sort(domain.begin(), domain.end());
  std::vector<std::uint32_t> positions;
  for (VertexId v : domain) positions.push_back(plan.position(v));
  return with_fallback([&](auto zero) {
    using V = decltype(zero);
    std::unordered_map<HomKey, V, HomKeyHash> values;
    visit<V>(bag, host, [&](std::span<const VertexId> images, const V& value) {
      add_to(values[make_key(images, positions)], value);
    });
    CountDict dict;
    dict.domain = domain;
    dict.values.reserve(values.size());
    for (auto& [key, value] : values) dict.values.emplace(key, BigInt(value));
    return dict;
  });
}

BigInt BressanCounter::total(const DirWLGraph& host) const {
  if (tree_.bags.empty()) return 1;  // empty pattern
  return with_fallback([&](auto zero) {
    using V = decltype(zero);
    V sum = 0;
    visit<V>(tree_.root, host, [&](std::span<const VertexId>, const V& value) { add_to(sum, value); });
    return BigInt(sum);
  });
}

CountDict bressan_count(const DirWLGraph& pattern, const HubTree& tree, std::size_t bag, const DirWLGraph& host) {
  return BressanCounter(pattern, tree).count(bag, host);
}

namespace {

std::string dump(const DirWLGraph& g) {
  std::ostringstream out;
  write_wl_dump(out, g);
  return out.str();
}

}  // namespace

BigInt count_hom_extension(const FraternalExtension& pattern_ext, const FraternalExtension& host_ext) {
  auto tree = find_width1_decomposition(pattern_ext.graph);
  if (!tree)
    throw NoWidth1Decomposition("pattern extension has no width-1 hub-tree decomposition:\n" + dump(pattern_ext.graph),
                                pattern_ext.graph);
  return BressanCounter(pattern_ext.graph, std::move(*tree)).total(host_ext.graph);
}

// ---------------------------------------------------------------------------
// Pipeline

namespace {

std::size_t resolve_threads(std::size_t requested) {
  if (requested == 0) requested = std::max(1u, std::thread::hardware_concurrency());
  return requested;
}

ComponentReport count_component(const UndirectedGraph& g, const UndirectedGraph& h, const CountOptions& options) {
  ComponentReport report;
  report.num_vertices = h.num_vertices();
  report.licl = licl(h);
  report.depth = options.depth.value_or(min_extension_depth(report.licl));
  if (report.depth == 0) throw std::invalid_argument("extension depth must be >= 1");

  auto start = Clock::now();
  const LabeledPattern hl = label_pattern(h);
  const ProductHost f = pattern_product(hl, g);
  report.product_ms = elapsed_ms(start);

  start = Clock::now();
  const FraternalExtension host_ext = optimal_extension(f, report.depth);
  report.host_extension_ms = elapsed_ms(start);
  report.host_vertices = host_ext.graph.num_vertices();
  report.host_arcs = host_ext.graph.num_arcs();
  report.host_delta_plus = max_outdegree(host_ext.graph);

  start = Clock::now();
  const auto members = enumerate_pattern_extensions(hl, report.depth, options.extension_cap);
  report.num_extensions = members.size();
  std::vector<BressanCounter> counters;
  counters.reserve(members.size());
  for (const auto& member : members) {
    auto tree = find_width1_decomposition(member.graph);
    if (!tree) {
      if (options.exact_fallback) {
        report.used_fallback = true;
        report.pattern_extension_ms = elapsed_ms(start);
        start = Clock::now();
        report.count = brute_force_hom(g, h, std::numeric_limits<std::size_t>::max());
        report.dp_ms = elapsed_ms(start);
        return report;
      }
      throw NoWidth1Decomposition("pattern extension at depth " + std::to_string(report.depth) +
                                      " has no width-1 hub-tree decomposition (licl " +
                                      std::to_string(report.licl) + "):\n" + dump(member.graph),
                                  member.graph);
    }
    counters.emplace_back(member.graph, std::move(*tree));
  }
  report.pattern_extension_ms = elapsed_ms(start);

  start = Clock::now();
  const std::size_t workers = std::min(resolve_threads(options.threads), std::max<std::size_t>(1, counters.size()));
  std::vector<BigInt> partial(workers, 0);
  if (workers == 1) {
    for (const auto& c : counters) partial[0] += c.total(host_ext.graph);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i; (i = next.fetch_add(1)) < counters.size();) partial[w] += counters[i].total(host_ext.graph);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  for (auto& p : partial) report.count += p;
  report.dp_ms = elapsed_ms(start);
  return report;
}

}  // namespace

HomCountResult count_homomorphisms_detailed(const UndirectedGraph& g, const UndirectedGraph& h,
                                            const CountOptions& options) {
  if (h.num_vertices() == 0) throw std::invalid_argument("count_homomorphisms: pattern has no vertices");
  HomCountResult result;
  result.count = 1;
  for (const auto& comp : connected_components(h)) {
    auto report = count_component(g, induced_undirected(h, comp), options);
    result.count *= report.count;
    result.components.push_back(std::move(report));
  }
  return result;
}

BigInt count_homomorphisms(const UndirectedGraph& g, const UndirectedGraph& h, const CountOptions& options) {
  return count_homomorphisms_detailed(g, h, options).count;
}

SubCountResult count_subgraphs_detailed(const UndirectedGraph& g, const UndirectedGraph& h,
                                        const CountOptions& options) {
  if (h.num_vertices() == 0) throw std::invalid_argument("count_subgraphs: pattern has no vertices");
  CountOptions per_quotient = options;
  per_quotient.depth.reset();
  SubCountResult result;
  Rational sum = 0;
  for (auto& entry : spasm(h)) {
    HomCountResult homs;
    try {
      homs = count_homomorphisms_detailed(g, entry.quotient, per_quotient);
    } catch (const NoWidth1Decomposition& e) {
      std::ostringstream q;
      write_edge_list(q, entry.quotient);
      throw NoWidth1Decomposition("spasm quotient with coefficient " + to_string(entry.coefficient) +
                                      " has no width-1 decomposition; quotient edges:\n" + q.str() + e.what(),
                                  e.extension());
    }
    sum += entry.coefficient * Rational(homs.count);
    result.terms.push_back({std::move(entry.quotient), entry.coefficient, std::move(homs.count),
                            std::move(homs.components)});
  }
  if (boost::multiprecision::denominator(sum) != 1)
    throw std::logic_error("count_subgraphs: spasm combination is not integral: " + to_string(sum));
  result.count = boost::multiprecision::numerator(sum);
  return result;
}

BigInt count_subgraphs(const UndirectedGraph& g, const UndirectedGraph& h, const CountOptions& options) {
  return count_subgraphs_detailed(g, h, options).count;
}

// ---------------------------------------------------------------------------
// Oracles

namespace {

// Pattern vertices ordered so each vertex after the first of its component
// has an earlier neighbor; anchor[i] is that neighbor (or kNoVertex).
struct SearchOrder {
  std::vector<VertexId> order;
  std::vector<VertexId> anchor;
};

SearchOrder search_order(const UndirectedGraph& h) {
  SearchOrder s;
  std::vector<char> seen(h.num_vertices(), 0);
  for (VertexId r = 0; r < h.num_vertices(); ++r) {
    if (seen[r]) continue;
    seen[r] = 1;
    s.order.push_back(r);
    s.anchor.push_back(kNoVertex);
    for (std::size_t i = s.order.size() - 1; i < s.order.size(); ++i)
      for (VertexId w : h.neighbors(s.order[i]))
        if (!seen[w]) {
          seen[w] = 1;
          s.order.push_back(w);
          s.anchor.push_back(s.order[i]);
        }
  }
  return s;
}

std::uint64_t count_maps(const UndirectedGraph& g, const UndirectedGraph& h, bool injective) {
  const auto s = search_order(h);
  const std::size_t k = h.num_vertices();
  std::vector<VertexId> image(k, kNoVertex);
  std::vector<char> used(g.num_vertices(), 0);
  std::vector<VertexId> all(g.num_vertices());
  for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
  std::uint64_t count = 0;
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      ++count;
      return;
    }
    VertexId u = s.order[i];
    std::span<const VertexId> candidates =
        s.anchor[i] == kNoVertex ? std::span<const VertexId>(all) : g.neighbors(image[s.anchor[i]]);
    for (VertexId x : candidates) {
      if (injective && used[x]) continue;
      bool ok = true;
      for (VertexId w : h.neighbors(u))
        if (image[w] != kNoVertex && !g.has_edge(x, image[w])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      image[u] = x;
      used[x] = 1;
      self(self, i + 1);
      used[x] = 0;
      image[u] = kNoVertex;
    }
  };
  extend(extend, 0);
  return count;
}

}  // namespace

BigInt brute_force_hom(const UndirectedGraph& g, const UndirectedGraph& h, std::size_t host_cap) {
  if (g.num_vertices() > host_cap)
    throw OracleLimitExceeded("brute_force_hom: host has " + std::to_string(g.num_vertices()) + " vertices, cap " +
                              std::to_string(host_cap));
  return BigInt(count_maps(g, h, false));
}

BigInt brute_force_sub(const UndirectedGraph& g, const UndirectedGraph& h, std::size_t host_cap) {
  if (g.num_vertices() > host_cap)
    throw OracleLimitExceeded("brute_force_sub: host has " + std::to_string(g.num_vertices()) + " vertices, cap " +
                              std::to_string(host_cap));
  std::uint64_t injective = count_maps(g, h, true);
  std::uint64_t aut = automorphism_count(h);
  if (injective % aut != 0) throw std::logic_error("brute_force_sub: injective count not divisible by |Aut|");
  return BigInt(injective / aut);
}

BigInt brute_force_hom_wl(const DirWLGraph& host, const DirWLGraph& pattern, std::size_t host_cap) {
  if (host.num_vertices() > host_cap)
    throw OracleLimitExceeded("brute_force_hom_wl: host has " + std::to_string(host.num_vertices()) +
                              " vertices, cap " + std::to_string(host_cap));
  const std::size_t k = pattern.num_vertices();
  std::vector<VertexId> image(k, kNoVertex);
  std::uint64_t count = 0;
  auto extend = [&](auto&& self, VertexId u) -> void {
    if (u == k) {
      ++count;
      return;
    }
    for (VertexId x : host.vertices_with_label(pattern.label(u))) {
      bool ok = true;
      for (const OutArc& a : pattern.out_arcs(u))
        if (a.to < u) {
          auto w = host.arc_weight(x, image[a.to]);
          ok = ok && w && *w <= a.weight;
        }
      for (const OutArc& a : pattern.in_arcs(u))
        if (a.to < u) {
          auto w = host.arc_weight(image[a.to], x);
          ok = ok && w && *w <= a.weight;
        }
      if (!ok) continue;
      image[u] = x;
      self(self, u + 1);
    }
  };
  extend(extend, 0);
  return BigInt(count);
}

}  // namespace sparsecount
