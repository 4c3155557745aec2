#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lfkmsd/cover.hpp"
#include "lfkmsd/growth.hpp"
#include "lfkmsd/lfk.hpp"
#include "lfkmsd/merge.hpp"
#include "lfkmsd/seeding.hpp"

namespace lfkmsd {

/// Log-spaced scale values from `a` down to `v_min`:
/// value_i = v_min + (a - v_min) * (1 - log(i) / log(count)), i = 1..count.
/// Values bunch up near v_min. Throws InvalidArgument unless 0 < v_min < a and count >= 2.
std::vector<double> sample_scales(double v_min, double a, std::size_t count);

struct DriverConfig {
  /// Strictly decreasing alpha, i.e. fine to coarse.
  std::vector<ScaleParameter> scales;
  double eta = 0.5;
  unsigned removal_passes = 5;
  unsigned threads = 1;
  unsigned max_phase_rounds = 100;
  SeedConfig seeding;
  /// Replaces seeding when present.
  std::optional<CoverSets> initial_cover;
  KeeperPolicy keeper = KeeperPolicy::LargerCommunity;

  void validate() const;
};

struct ScaleResult {
  double alpha = 0.0;
  /// Node sets, each ascending, in community order.
  CoverSets cover;
  /// Mean community fitness at `alpha`.
  double quality = 0.0;
  std::size_t community_count = 0;
  unsigned phase_rounds = 0;
  /// The round cap stopped the phase loop before it settled.
  bool round_cap_hit = false;
  double wall_time_ms = 0.0;
  /// Nodes contained in no community.
  std::size_t unassigned_nodes = 0;
};

struct Detection {
  std::vector<ScaleResult> scales;
  std::size_t initial_communities = 0;
  std::vector<std::string> warnings;
  double wall_time_ms = 0.0;
};

/// Observation points for tests and progress reporting.
struct DriverHooks {
  /// Called after each scale with the stored result and the live cover that
  /// will seed the next scale.
  std::function<void(const ScaleResult&, const Cover&, const MembershipTable&)> on_scale;
};

/// Runs the multi-scale grow/check/merge loop over every scale in order,
/// carrying each scale's cover into the next.
Detection detect_multiscale(const Graph& graph, const DriverConfig& config,
                            const DriverHooks& hooks = {});

struct ScaleFlags {
  /// A single community spanning at least 95% of the nodes.
  bool mega_community = false;
  /// Part of a run of >= 2 consecutive scales with the same community count.
  bool stable_run_member = false;
  /// Length of the equal-count run this scale belongs to (1 when isolated).
  std::size_t run_length = 1;
};

/// Per-scale annotations; one entry per result. Throws on empty input.
std::vector<ScaleFlags> stability_flags(std::span<const ScaleResult> results,
                                        std::size_t node_count);

}  // namespace lfkmsd
