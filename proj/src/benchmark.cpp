#include "lfkmsd/benchmark.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <absl/container/flat_hash_set.h>
#include <fmt/format.h>

namespace lfkmsd {

namespace {

std::size_t round_half_up(double x) { return static_cast<std::size_t>(std::floor(x + 0.5)); }

std::uint64_t edge_key(NodeId u, NodeId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

// Pairs stubs inside one group, rejecting self-loops, repeated edges and
// pairs the tier forbids. Rejected stubs are placed by rewiring existing
// group edges. Returns the number of stubs left over.
template <typename Valid>
class StubMatcher {
 public:
  StubMatcher(absl::flat_hash_set<std::uint64_t>& edges, std::mt19937_64& rng, Valid valid)
      : edges_(edges), rng_(rng), valid_(valid) {}

  std::size_t match(std::vector<NodeId> stubs, std::vector<WeightedEdge>& out) {
    group_edges_.clear();
    leftover_.clear();
    std::shuffle(stubs.begin(), stubs.end(), rng_);
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      if (!try_add(stubs[i], stubs[i + 1])) {
        leftover_.push_back(stubs[i]);
        leftover_.push_back(stubs[i + 1]);
      }
    }
    if (stubs.size() % 2 == 1) leftover_.push_back(stubs.back());
    repair();
    for (const auto& [u, v] : group_edges_) out.push_back({u, v, 1.0});
    return leftover_.size();
  }

 private:
  bool allowed(NodeId u, NodeId v) const {
    return u != v && valid_(u, v) && !edges_.contains(edge_key(u, v));
  }

  bool try_add(NodeId u, NodeId v) {
    if (!allowed(u, v)) return false;
    edges_.insert(edge_key(u, v));
    group_edges_.emplace_back(u, v);
    return true;
  }

  void take_leftover(std::size_t i, std::size_t j) {
    if (i < j) std::swap(i, j);
    leftover_[i] = leftover_.back();
    leftover_.pop_back();
    leftover_[j] = leftover_.back();
    leftover_.pop_back();
  }

  void repair() {
    std::size_t budget = 64 * leftover_.size() + 64;
    while (leftover_.size() >= 2 && budget-- > 0) {
      std::uniform_int_distribution<std::size_t> pick(0, leftover_.size() - 1);
      const std::size_t i = pick(rng_);
      std::size_t j = pick(rng_);
      if (i == j) continue;
      const NodeId u = leftover_[i];
      const NodeId v = leftover_[j];
      if (try_add(u, v)) {
        take_leftover(i, j);
        continue;
      }
      if (group_edges_.empty()) continue;
      // Swap (x, y) for (u, x) and (v, y).
      std::uniform_int_distribution<std::size_t> pick_edge(0, group_edges_.size() - 1);
      const std::size_t e = pick_edge(rng_);
      auto [x, y] = group_edges_[e];
      if (rng_() & 1u) std::swap(x, y);
      if (!allowed(u, x) || !allowed(v, y) || edge_key(u, x) == edge_key(v, y)) continue;
      edges_.erase(edge_key(x, y));
      group_edges_[e] = group_edges_.back();
      group_edges_.pop_back();
      try_add(u, x);
      try_add(v, y);
      take_leftover(i, j);
    }
  }

  absl::flat_hash_set<std::uint64_t>& edges_;
  std::mt19937_64& rng_;
  Valid valid_;
  std::vector<std::pair<NodeId, NodeId>> group_edges_;
  std::vector<NodeId> leftover_;
};

}  // namespace

void BenchmarkConfig::validate() const {
  if (nodes == 0) throw InvalidArgument("benchmark needs at least one node");
  if (micro_size < 2) throw InvalidArgument("micro communities need at least 2 nodes");
  if (micros_per_macro < 1) throw InvalidArgument("macro communities need at least one micro");
  if (nodes % (micro_size * micros_per_macro) != 0) {
    throw InvalidArgument(fmt::format("micro_size x micros_per_macro = {} must divide n = {}",
                                      micro_size * micros_per_macro, nodes));
  }
  if (!(mu1 >= 0.0 && mu1 <= mu2 && mu2 < 1.0)) {
    throw InvalidArgument(fmt::format("mixing needs 0 <= mu1 <= mu2 < 1, got mu1={} mu2={}", mu1, mu2));
  }
  if (!(avg_degree >= 1.0) || !std::isfinite(avg_degree)) {
    throw InvalidArgument(fmt::format("average degree must be >= 1, got {}", avg_degree));
  }
  const double max_degree = std::ceil(avg_degree * 1.2);
  if (static_cast<double>(round_half_up((1.0 - mu2) * max_degree)) > static_cast<double>(micro_size - 1)) {
    throw InvalidArgument(fmt::format(
        "(1 - mu2) x degree up to {} does not fit in micro communities of {} nodes; raise "
        "micro_size or lower avg_degree",
        (1.0 - mu2) * max_degree, micro_size));
  }
  if (mu2 > mu1 && micros_per_macro < 2) {
    throw InvalidArgument("mu2 > mu1 needs at least two micro communities per macro");
  }
  if (mu1 > 0.0 && nodes == micro_size * micros_per_macro) {
    throw InvalidArgument("mu1 > 0 needs at least two macro communities");
  }
}

Benchmark generate_hierarchical(const BenchmarkConfig& config) {
  config.validate();
  const std::size_t n = config.nodes;
  const std::size_t macro_size = config.micro_size * config.micros_per_macro;
  const std::size_t micro_count = n / config.micro_size;
  const std::size_t macro_count = n / macro_size;
  auto micro_of = [&](NodeId v) { return v / config.micro_size; };
  auto macro_of = [&](NodeId v) { return v / macro_size; };

  std::mt19937_64 rng(config.rng_seed);
  std::uniform_real_distribution<double> spread(0.8, 1.2);

  std::vector<std::vector<NodeId>> micro_stubs(micro_count);
  std::vector<std::vector<NodeId>> macro_stubs(macro_count);
  std::vector<NodeId> global_stubs;
  for (NodeId v = 0; v < n; ++v) {
    const std::size_t degree = std::max<std::size_t>(1, round_half_up(config.avg_degree * spread(rng)));
    const std::size_t intra_micro = std::min(degree, round_half_up((1.0 - config.mu2) * degree));
    const std::size_t intra_macro =
        std::min(degree - intra_micro, round_half_up((config.mu2 - config.mu1) * degree));
    const std::size_t inter = degree - intra_micro - intra_macro;
    micro_stubs[micro_of(v)].insert(micro_stubs[micro_of(v)].end(), intra_micro, v);
    macro_stubs[macro_of(v)].insert(macro_stubs[macro_of(v)].end(), intra_macro, v);
    global_stubs.insert(global_stubs.end(), inter, v);
  }

  absl::flat_hash_set<std::uint64_t> edge_set;
  std::vector<WeightedEdge> edges;
  std::size_t total_stubs = 0;
  std::size_t unmatched = 0;
  // A group with an odd stub count always leaves one stub; only the excess counts as failure.
  std::size_t odd_groups = 0;
  auto match_group = [&](auto& matcher, std::vector<NodeId>& stubs) {
    total_stubs += stubs.size();
    odd_groups += stubs.size() % 2;
    unmatched += matcher.match(std::move(stubs), edges);
  };
  {
    StubMatcher matcher(edge_set, rng, [](NodeId, NodeId) { return true; });
    for (auto& stubs : micro_stubs) match_group(matcher, stubs);
  }
  {
    StubMatcher matcher(edge_set, rng,
                        [&](NodeId u, NodeId v) { return micro_of(u) != micro_of(v); });
    for (auto& stubs : macro_stubs) match_group(matcher, stubs);
  }
  {
    StubMatcher matcher(edge_set, rng,
                        [&](NodeId u, NodeId v) { return macro_of(u) != macro_of(v); });
    match_group(matcher, global_stubs);
  }

  const double excess = static_cast<double>(unmatched - std::min(unmatched, odd_groups));
  if (excess > std::max(4.0, 0.01 * static_cast<double>(total_stubs))) {
    throw InvalidArgument(fmt::format(
        "could not place {} of {} edge stubs; use larger communities or a lower average degree",
        unmatched, total_stubs));
  }

  Benchmark bench;
  bench.graph = Graph::from_edges(n, edges);
  bench.micro.resize(micro_count);
  bench.macro.resize(macro_count);
  for (NodeId v = 0; v < n; ++v) {
    bench.micro[micro_of(v)].push_back(v);
    bench.macro[macro_of(v)].push_back(v);
  }
  bench.realized_mu1 = measure_mixing(bench.graph, bench.macro);
  bench.realized_mu2 = measure_mixing(bench.graph, bench.micro);
  bench.unmatched_stubs = unmatched;
  return bench;
}

double measure_mixing(const Graph& graph, const CoverSets& partition) {
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(graph.node_count(), kUnassigned);
  for (std::size_t c = 0; c < partition.size(); ++c) {
    for (const NodeId v : partition[c]) {
      if (!graph.contains(v)) throw InvalidArgument(fmt::format("unknown node id {}", v));
      if (owner[v] != kUnassigned) {
        throw InvalidArgument(fmt::format("node {} appears in more than one community", v));
      }
      owner[v] = c;
    }
  }
  double external = 0.0;
  double total = 0.0;
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    if (owner[v] == kUnassigned) {
      throw InvalidArgument(fmt::format("node {} is in no community", v));
    }
    for (const auto& nb : graph.adjacency(v)) {
      total += nb.weight;
      if (owner[nb.node] != owner[v]) external += nb.weight;
    }
  }
  return total > 0.0 ? external / total : 0.0;
}

}  // namespace lfkmsd
