#include "lfkmsd/seeding.hpp"

#include <random>

namespace lfkmsd {

namespace {

// Candidate pool with O(1) uniform draw and O(1) removal by node id.
class CandidatePool {
 public:
  explicit CandidatePool(const Graph& graph) : slot_(graph.node_count(), kAbsent) {
    for (NodeId v = 0; v < graph.node_count(); ++v) {
      if (graph.degree(v) >= 2) {
        slot_[v] = members_.size();
        members_.push_back(v);
      }
    }
  }

  [[nodiscard]] bool empty() const noexcept { return members_.empty(); }

  NodeId draw(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::size_t> pick(0, members_.size() - 1);
    return members_[pick(rng)];
  }

  void erase(NodeId v) {
    const std::size_t i = slot_[v];
    if (i == kAbsent) return;
    const NodeId last = members_.back();
    members_[i] = last;
    slot_[last] = i;
    members_.pop_back();
    slot_[v] = kAbsent;
  }

 private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::vector<NodeId> members_;
  std::vector<std::size_t> slot_;
};

}  // namespace

std::vector<NodeId> draw_seeds(const Graph& graph, const SeedConfig& config) {
  CandidatePool pool(graph);
  std::mt19937_64 rng(config.rng_seed);
  std::vector<NodeId> seeds;
  while (!pool.empty()) {
    const NodeId seed = pool.draw(rng);
    seeds.push_back(seed);
    pool.erase(seed);
    for (const auto& nb : graph.adjacency(seed)) {
      pool.erase(nb.node);
      if (config.rule == SeedRule::ExcludeSecondNeighbors) {
        for (const auto& nb2 : graph.adjacency(nb.node)) pool.erase(nb2.node);
      }
    }
  }
  return seeds;
}

Cover select_seeds(const Graph& graph, const SeedConfig& config) {
  Cover cover;
  for (const NodeId seed : draw_seeds(graph, config)) {
    const NodeId single[] = {seed};
    cover.emplace(graph, single);
  }
  return cover;
}

}  // namespace lfkmsd
