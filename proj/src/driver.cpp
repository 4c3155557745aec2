#include "lfkmsd/driver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include <fmt/format.h>

#include "lfkmsd/parallel.hpp"

namespace lfkmsd {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

Cover initial_cover(const Graph& graph, const DriverConfig& config, Detection& detection) {
  if (config.initial_cover) {
    CoverSets sets;
    for (const auto& s : *config.initial_cover) {
      for (const NodeId v : s) {
        if (!graph.contains(v)) throw InvalidArgument(fmt::format("initial cover names unknown node {}", v));
      }
      if (!s.empty()) sets.push_back(s);
    }
    Cover cover(graph, sets);
    if (const auto dups = cover.merge_identical(); dups > 0) {
      detection.warnings.push_back(
          fmt::format("initial cover: merged {} duplicate communities", dups));
    }
    if (cover.empty()) throw InvalidArgument("initial cover has no non-empty community");
    return cover;
  }
  Cover cover = select_seeds(graph, config.seeding);
  if (cover.empty()) {
    throw InvalidArgument(
        "no node has two or more neighbors, so there are no seeds; supply an initial cover");
  }
  return cover;
}

}  // namespace

std::vector<double> sample_scales(double v_min, double a, std::size_t count) {
  if (!(v_min > 0.0) || !(v_min < a) || !std::isfinite(a)) {
    throw InvalidArgument(fmt::format("scale range needs 0 < v_min < a, got [{}, {}]", v_min, a));
  }
  if (count < 2) throw InvalidArgument("at least two scale values are required");
  std::vector<double> values(count);
  const double log_count = std::log(static_cast<double>(count));
  for (std::size_t i = 1; i <= count; ++i) {
    values[i - 1] = v_min + (a - v_min) * (1.0 - std::log(static_cast<double>(i)) / log_count);
  }
  // v_min + (a - v_min) can differ from a by an ulp.
  values.front() = a;
  values.back() = v_min;
  return values;
}

void DriverConfig::validate() const {
  if (scales.empty()) throw InvalidArgument("no scale values given");
  for (std::size_t i = 1; i < scales.size(); ++i) {
    if (!(scales[i] < scales[i - 1])) {
      throw InvalidArgument(fmt::format(
          "scale values must be strictly decreasing (fine to coarse); got {} after {}",
          scales[i].value(), scales[i - 1].value()));
    }
  }
  GrowthConfig{scales.front(), eta, removal_passes}.validate();
  if (threads < 1) throw InvalidArgument("thread count must be at least 1");
  if (max_phase_rounds < 1) throw InvalidArgument("max phase rounds must be at least 1");
}

Detection detect_multiscale(const Graph& graph, const DriverConfig& config,
                            const DriverHooks& hooks) {
  config.validate();
  if (graph.node_count() == 0) throw InvalidArgument("graph has no nodes");
  const auto run_start = Clock::now();

  Detection detection;
  Cover cover = initial_cover(graph, config, detection);
  detection.initial_communities = cover.size();

  const unsigned threads = config.threads;
  MembershipTable membership(graph.node_count());
  std::vector<GrowthWorkspace> workspaces(threads);
  std::vector<std::vector<CommunityId>> changed_by_worker(threads);
  std::vector<std::uint32_t> sizes;

  for (const ScaleParameter alpha : config.scales) {
    const auto scale_start = Clock::now();
    const GrowthConfig growth{alpha, config.eta, config.removal_passes};
    ScaleResult result;
    result.alpha = alpha.value();

    for (;;) {
      ++result.phase_rounds;
      rebuild_membership(cover, membership);
      sizes.assign(cover.id_bound(), 0);
      for (const auto& c : cover.communities()) sizes[c.id()] = static_cast<std::uint32_t>(c.size());

      // Grow phase.
      bool grew = false;
      for (auto& v : changed_by_worker) v.clear();
      std::vector<char> worker_grew(threads, 0);
      run_chunked(threads, cover.size(), [&](unsigned w, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
          Community& c = cover[i];
          const GrowthOutcome out =
              grow_community(graph, c, membership, sizes, growth, workspaces[w]);
          if (out.changed) worker_grew[w] = 1;
          if (out.needs_merge_check) changed_by_worker[w].push_back(c.id());
        }
      });
      std::vector<CommunityId> check_set;
      for (unsigned w = 0; w < threads; ++w) {
        grew = grew || worker_grew[w] != 0;
        check_set.insert(check_set.end(), changed_by_worker[w].begin(), changed_by_worker[w].end());
      }

      // Check and merge phases.
      std::size_t merges = 0;
      if (!check_set.empty()) {
        auto pairs = find_merge_candidates(check_set, membership, cover, config.eta, threads);
        if (!pairs.empty()) {
          merges = execute_merges(graph, cover, std::move(pairs), membership, config.keeper, threads)
                       .merges;
        }
      }

      if (!grew && merges == 0) break;
      if (result.phase_rounds >= config.max_phase_rounds) {
        result.round_cap_hit = true;
        detection.warnings.push_back(fmt::format(
            "alpha={}: stopped after {} phase rounds without settling", alpha.value(),
            result.phase_rounds));
        break;
      }
    }

    cover.merge_identical(&membership);
    result.cover = cover.node_sets();
    result.community_count = cover.size();
    result.quality = result.cover.empty() ? 0.0 : cover_quality(graph, result.cover, alpha);
    {
      std::vector<char> covered(graph.node_count(), 0);
      for (const auto& s : result.cover) {
        for (const NodeId v : s) covered[v] = 1;
      }
      result.unassigned_nodes =
          static_cast<std::size_t>(std::count(covered.begin(), covered.end(), 0));
    }
    result.wall_time_ms = elapsed_ms(scale_start);
    detection.scales.push_back(std::move(result));
    if (hooks.on_scale) hooks.on_scale(detection.scales.back(), cover, membership);
  }
  detection.wall_time_ms = elapsed_ms(run_start);
  return detection;
}

std::vector<ScaleFlags> stability_flags(std::span<const ScaleResult> results,
                                        std::size_t node_count) {
  if (results.empty()) throw InvalidArgument("stability flags need at least one scale result");
  std::vector<ScaleFlags> flags(results.size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    flags[i].mega_community = r.community_count == 1 && !r.cover.empty() &&
                              static_cast<double>(r.cover.front().size()) >=
                                  0.95 * static_cast<double>(node_count);
  }
  std::size_t start = 0;
  while (start < results.size()) {
    std::size_t end = start + 1;
    while (end < results.size() && results[end].community_count == results[start].community_count) {
      ++end;
    }
    for (std::size_t i = start; i < end; ++i) {
      flags[i].run_length = end - start;
      flags[i].stable_run_member = end - start >= 2;
    }
    start = end;
  }
  return flags;
}

}  // namespace lfkmsd
