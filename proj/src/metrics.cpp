#include "lfkmsd/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <absl/container/flat_hash_map.h>
#include <fmt/format.h>

#include "lfkmsd/driver.hpp"

namespace lfkmsd {

namespace {

double h(std::size_t count, double n) {
  if (count == 0) return 0.0;
  const double p = static_cast<double>(count) / n;
  return -p * std::log2(p);
}

// Overlap sizes between one community of the first cover and the
// communities of the second cover it intersects.
using Overlaps = std::vector<std::vector<std::pair<std::size_t, std::size_t>>>;

struct Conditional {
  bool admissible;
  double entropy;
};

Conditional conditional_entropy(std::size_t x_size, std::size_t y_size, std::size_t shared,
                                std::size_t n) {
  const double nd = static_cast<double>(n);
  const double h11 = h(shared, nd);
  const double h10 = h(x_size - shared, nd);
  const double h01 = h(y_size - shared, nd);
  const double h00 = h(n - x_size - y_size + shared, nd);
  const double h_y = h(y_size, nd) + h(n - y_size, nd);
  return {h11 + h00 >= h01 + h10, h11 + h10 + h01 + h00 - h_y};
}

double mean_normalized_conditional(std::span<const std::size_t> x_sizes,
                                   std::span<const std::size_t> y_sizes, const Overlaps& overlaps,
                                   std::size_t n) {
  if (x_sizes.empty()) return 1.0;
  // Communities of Y disjoint from X_k only differ through their size.
  absl::flat_hash_map<std::size_t, std::size_t> y_size_count;
  for (const auto s : y_sizes) ++y_size_count[s];

  const double nd = static_cast<double>(n);
  std::vector<double> terms;
  terms.reserve(x_sizes.size());
  absl::flat_hash_map<std::size_t, std::size_t> intersecting_of_size;
  for (std::size_t k = 0; k < x_sizes.size(); ++k) {
    const std::size_t xs = x_sizes[k];
    double best = std::numeric_limits<double>::infinity();
    bool matched = false;
    auto consider = [&](std::size_t ys, std::size_t shared) {
      const auto c = conditional_entropy(xs, ys, shared, n);
      if (c.admissible) {
        matched = true;
        best = std::min(best, c.entropy);
      }
    };
    intersecting_of_size.clear();
    for (const auto& [l, shared] : overlaps[k]) {
      consider(y_sizes[l], shared);
      ++intersecting_of_size[y_sizes[l]];
    }
    for (const auto& [ys, count] : y_size_count) {
      const auto it = intersecting_of_size.find(ys);
      const std::size_t used = it == intersecting_of_size.end() ? 0 : it->second;
      if (count > used) consider(ys, 0);
    }
    const double h_x = h(xs, nd) + h(n - xs, nd);
    double normalized = 1.0;
    if (matched) normalized = h_x > 0.0 ? std::max(0.0, best) / h_x : 0.0;
    terms.push_back(std::min(1.0, normalized));
  }
  // Summing in sorted order makes the mean independent of community order.
  std::sort(terms.begin(), terms.end());
  double sum = 0.0;
  for (const double t : terms) sum += t;
  return sum / static_cast<double>(terms.size());
}

std::vector<std::size_t> validated_sizes(const CoverSets& cover, std::size_t n, const char* which) {
  std::vector<std::size_t> sizes;
  sizes.reserve(cover.size());
  std::vector<std::size_t> last_seen(n, 0);
  for (std::size_t i = 0; i < cover.size(); ++i) {
    if (cover[i].empty()) {
      throw InvalidArgument(fmt::format("{} cover: community {} is empty", which, i));
    }
    for (const NodeId v : cover[i]) {
      if (v >= n) {
        throw InvalidArgument(fmt::format(
            "{} cover: node {} outside the {}-node universe", which, v, n));
      }
      if (last_seen[v] == i + 1) {
        throw InvalidArgument(fmt::format("{} cover: node {} repeated in community {}", which, v, i));
      }
      last_seen[v] = i + 1;
    }
    sizes.push_back(cover[i].size());
  }
  return sizes;
}

}  // namespace

double overlapping_nmi(const CoverSets& x, const CoverSets& y, std::size_t node_count) {
  if (node_count == 0) throw InvalidArgument("NMI needs at least one node");
  const auto x_sizes = validated_sizes(x, node_count, "first");
  const auto y_sizes = validated_sizes(y, node_count, "second");
  if (x.empty() && y.empty()) return 1.0;
  if (x.empty() || y.empty()) return 0.0;

  std::vector<std::vector<std::uint32_t>> y_of(node_count);
  for (std::size_t l = 0; l < y.size(); ++l) {
    for (const NodeId v : y[l]) y_of[v].push_back(static_cast<std::uint32_t>(l));
  }
  Overlaps x_given(x.size());
  Overlaps y_given(y.size());
  {
    absl::flat_hash_map<std::uint64_t, std::size_t> shared;
    for (std::size_t k = 0; k < x.size(); ++k) {
      for (const NodeId v : x[k]) {
        for (const auto l : y_of[v]) ++shared[(static_cast<std::uint64_t>(k) << 32) | l];
      }
    }
    for (const auto& [key, count] : shared) {
      const auto k = static_cast<std::size_t>(key >> 32);
      const auto l = static_cast<std::size_t>(key & 0xffffffffu);
      x_given[k].emplace_back(l, count);
      y_given[l].emplace_back(k, count);
    }
  }

  const double hx_y = mean_normalized_conditional(x_sizes, y_sizes, x_given, node_count);
  const double hy_x = mean_normalized_conditional(y_sizes, x_sizes, y_given, node_count);
  return std::clamp(1.0 - 0.5 * (hx_y + hy_x), 0.0, 1.0);
}

std::vector<std::optional<double>> windowed_nmi(std::span<const CoverSets> covers,
                                                std::size_t node_count, std::size_t p) {
  if (p < 2) throw InvalidArgument(fmt::format("NMI window needs p >= 2, got {}", p));
  std::vector<std::optional<double>> out(covers.size());
  for (std::size_t s = 0; s < covers.size(); ++s) {
    double sum = 0.0;
    std::size_t terms = 0;
    for (std::size_t j = 1; j < p && s + j < covers.size(); ++j) {
      sum += overlapping_nmi(covers[s], covers[s + j], node_count);
      ++terms;
    }
    if (terms > 0) out[s] = sum / static_cast<double>(terms);
  }
  return out;
}

std::vector<std::optional<double>> windowed_nmi(std::span<const ScaleResult> results,
                                                std::size_t node_count, std::size_t p) {
  std::vector<CoverSets> covers;
  covers.reserve(results.size());
  for (const auto& r : results) covers.push_back(r.cover);
  return windowed_nmi(covers, node_count, p);
}

std::vector<double> reference_nmi(std::span<const CoverSets> covers, const CoverSets& reference,
                                  std::size_t node_count) {
  std::vector<double> out;
  out.reserve(covers.size());
  for (const auto& c : covers) out.push_back(overlapping_nmi(c, reference, node_count));
  return out;
}

std::vector<double> reference_nmi(std::span<const ScaleResult> results, const CoverSets& reference,
                                  std::size_t node_count) {
  std::vector<double> out;
  out.reserve(results.size());
  for (const auto& r : results) out.push_back(overlapping_nmi(r.cover, reference, node_count));
  return out;
}

}  // namespace lfkmsd
