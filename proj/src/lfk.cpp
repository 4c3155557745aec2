#include "lfkmsd/lfk.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace lfkmsd {

ScaleParameter::ScaleParameter(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw InvalidArgument(fmt::format("scale parameter must be positive, got {}", alpha));
  }
}

double community_fitness(double k_in, double k_out, ScaleParameter alpha) {
  const double total = k_in + k_out;
  if (total <= 0.0) return 0.0;
  return k_in / std::pow(total, alpha.value());
}

double node_fitness(const Graph& graph, const Community& community, NodeId node,
                    ScaleParameter alpha) {
  if (!graph.contains(node)) throw InvalidArgument(fmt::format("unknown node id {}", node));
  const double degree = graph.weighted_degree(node);
  const double d_in = community.weight_to(node);
  if (community.contains(node)) {
    return retention_gain(community.degrees(), d_in, degree, alpha);
  }
  if (!community.empty() && !community.is_boundary(node)) {
    throw InvalidArgument(
        fmt::format("node {} is neither in nor adjacent to community {}", node, community.id()));
  }
  return addition_gain(community.degrees(), d_in, degree, alpha);
}

double ranking_factor(double d_in, double d_out, ScaleParameter alpha) {
  if (!(d_in > 0.0)) {
    throw InvalidArgument(fmt::format("ranking factor needs d_in > 0, got {}", d_in));
  }
  return 2.0 * d_in / std::pow(d_in + d_out, alpha.value());
}

double cover_quality(const Graph& graph, const CoverSets& cover, ScaleParameter alpha) {
  if (cover.empty()) throw InvalidArgument("cover quality of an empty cover");
  double sum = 0.0;
  for (const auto& set : cover) {
    const auto d = community_degrees(graph, set);
    sum += community_fitness(d.k_in, d.k_out, alpha);
  }
  return sum / static_cast<double>(cover.size());
}

std::size_t overlap_threshold(double eta, std::size_t a, std::size_t b) noexcept {
  const double smaller = static_cast<double>(std::min(a, b));
  // The slack keeps decimal thresholds such as 0.3 * 10 from rounding up to 4.
  const double need = std::ceil(eta * smaller - 1e-9);
  return need < 1.0 ? 1 : static_cast<std::size_t>(need);
}

}  // namespace lfkmsd
