#pragma once

#include <cmath>
#include <cstddef>
#include <span>

#include "lfkmsd/community.hpp"
#include "lfkmsd/cover.hpp"

namespace lfkmsd {

/// Resolution of the LFK fitness. Large values favour small communities.
class ScaleParameter {
 public:
  /// Throws InvalidArgument unless `alpha` is finite and positive.
  explicit ScaleParameter(double alpha);

  [[nodiscard]] double value() const noexcept { return alpha_; }

  friend auto operator<=>(const ScaleParameter&, const ScaleParameter&) = default;

 private:
  double alpha_;
};

/// k_in / (k_in + k_out)^alpha; zero when the community has no incident weight.
[[nodiscard]] double community_fitness(double k_in, double k_out, ScaleParameter alpha);

/// Fitness change from including `node`: f(c + node) - f(c - node).
/// For a member this compares keeping it against dropping it; for an outsider,
/// adding it against the current community. Throws InvalidArgument if `node`
/// is neither a member nor adjacent to one (an empty community accepts anyone).
[[nodiscard]] double node_fitness(const Graph& graph, const Community& community, NodeId node,
                                  ScaleParameter alpha);

/// Fitness gained by adding a non-member with `d_in` weight into the community
/// and weighted degree `degree`, computed from the cached totals.
[[nodiscard]] inline double addition_gain(CommunityDegrees c, double d_in, double degree,
                                          ScaleParameter alpha) {
  return community_fitness(c.k_in + 2.0 * d_in, c.k_out + degree - 2.0 * d_in, alpha) -
         community_fitness(c.k_in, c.k_out, alpha);
}

/// Fitness kept by a member with `d_in` weight to the other members:
/// f(c) - f(c \ member). Negative means dropping it improves the community.
[[nodiscard]] inline double retention_gain(CommunityDegrees c, double d_in, double degree,
                                           ScaleParameter alpha) {
  return community_fitness(c.k_in, c.k_out, alpha) -
         community_fitness(c.k_in - 2.0 * d_in, c.k_out - degree + 2.0 * d_in, alpha);
}

/// Candidate priority 2*d_in / (d_in + d_out)^alpha. Throws if d_in <= 0.
[[nodiscard]] double ranking_factor(double d_in, double d_out, ScaleParameter alpha);

/// Mean community fitness over the cover, recomputed from scratch.
/// Throws InvalidArgument for an empty cover.
[[nodiscard]] double cover_quality(const Graph& graph, const CoverSets& cover, ScaleParameter alpha);

/// Smallest shared-node count at which two communities of sizes `a` and `b`
/// must merge: ceil(eta * min(a, b)), at least 1.
[[nodiscard]] std::size_t overlap_threshold(double eta, std::size_t a, std::size_t b) noexcept;

}  // namespace lfkmsd
