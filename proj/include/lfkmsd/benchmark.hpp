#pragma once

#include <cstdint>

#include "lfkmsd/cover.hpp"

namespace lfkmsd {

/// Two-level planted-community network: micro communities of equal size
/// nested in macro communities of `micros_per_macro` micros each.
struct BenchmarkConfig {
  std::size_t nodes = 1000;
  std::size_t micro_size = 25;
  std::size_t micros_per_macro = 4;
  double avg_degree = 20.0;
  /// Fraction of a node's edges leaving its macro community.
  double mu1 = 0.05;
  /// Fraction of a node's edges leaving its micro community.
  double mu2 = 0.2;
  std::uint64_t rng_seed = 1;

  /// Throws InvalidArgument when the configuration cannot be generated.
  void validate() const;
};

struct Benchmark {
  Graph graph;
  CoverSets micro;
  CoverSets macro;
  /// Measured against the macro and micro partitions.
  double realized_mu1 = 0.0;
  double realized_mu2 = 0.0;
  /// Stubs left without a partner after repair.
  std::size_t unmatched_stubs = 0;
};

/// Generates the network and its exact ground-truth partitions.
///
/// Each node draws a degree uniformly within +-20% of `avg_degree` and splits
/// it into round((1-mu2) deg) intra-micro stubs, round((mu2-mu1) deg) stubs to
/// other micros of its macro, and the remainder to other macros. Stubs are
/// paired at random inside each tier; self-loops and repeated pairs go back to
/// a leftover pool that a rewiring pass then places. Throws InvalidArgument if
/// too many stubs stay unplaced.
Benchmark generate_hierarchical(const BenchmarkConfig& config);

/// Share of the total weighted degree carried by edges between different
/// communities of `partition`. Throws InvalidArgument unless `partition`
/// places every node in exactly one community.
double measure_mixing(const Graph& graph, const CoverSets& partition);

}  // namespace lfkmsd
