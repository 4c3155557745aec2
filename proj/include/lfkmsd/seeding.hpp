#pragma once

#include <cstdint>
#include <vector>

#include "lfkmsd/cover.hpp"

namespace lfkmsd {

enum class SeedRule {
  /// A drawn seed excludes its neighbors from later draws.
  ExcludeNeighbors = 1,
  /// A drawn seed also excludes its neighbors' neighbors.
  ExcludeSecondNeighbors = 2,
};

struct SeedConfig {
  SeedRule rule = SeedRule::ExcludeNeighbors;
  std::uint64_t rng_seed = 1;
};

/// Seed nodes in draw order. Candidates are the nodes with at least two
/// distinct neighbors; each draw is uniform over the remaining candidates.
std::vector<NodeId> draw_seeds(const Graph& graph, const SeedConfig& config);

/// Cover of singleton communities, one per seed, ids in draw order. Empty when
/// no node qualifies.
Cover select_seeds(const Graph& graph, const SeedConfig& config);

}  // namespace lfkmsd
