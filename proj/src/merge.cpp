#include "lfkmsd/merge.hpp"

#include <algorithm>
#include <numeric>

#include <absl/container/flat_hash_set.h>
#include <fmt/format.h>

#include "lfkmsd/lfk.hpp"
#include "lfkmsd/parallel.hpp"

namespace lfkmsd {

namespace {

std::uint64_t unordered_key(CommunityId a, CommunityId b) noexcept {
  const auto lo = std::min(a, b);
  const auto hi = std::max(a, b);
  return (static_cast<std::uint64_t>(lo) << 32) | hi;
}

std::vector<MergePair> deduplicate(std::span<const MergePair> pairs) {
  absl::flat_hash_set<std::uint64_t> seen;
  std::vector<MergePair> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) {
    if (p.keep == p.absorb) continue;
    if (seen.insert(unordered_key(p.keep, p.absorb)).second) out.push_back(p);
  }
  return out;
}

}  // namespace

std::vector<MergePair> find_merge_candidates(std::span<const CommunityId> check_set,
                                             const MembershipTable& membership, const Cover& cover,
                                             double eta, unsigned threads) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(check_set.size())));
  std::vector<std::vector<MergePair>> found(threads);

  run_chunked(threads, check_set.size(), [&](unsigned worker, std::size_t begin, std::size_t end) {
    std::vector<std::uint32_t> count(cover.id_bound(), 0);
    std::vector<CommunityId> touched;
    auto& out = found[worker];
    for (std::size_t i = begin; i < end; ++i) {
      const Community* c = cover.find(check_set[i]);
      if (c == nullptr) continue;
      const CommunityId self = c->id();
      bool emitted = false;
      for (const NodeId v : c->nodes()) {
        membership.for_each(v, [&](CommunityId other) {
          if (emitted || other == self || other >= count.size()) return;
          const Community* partner = cover.find(other);
          if (partner == nullptr) return;
          if (count[other]++ == 0) touched.push_back(other);
          if (count[other] >= overlap_threshold(eta, c->size(), partner->size())) {
            out.push_back({self, other});
            emitted = true;
          }
        });
        if (emitted) break;
      }
      for (const CommunityId t : touched) count[t] = 0;
      touched.clear();
    }
  });

  std::vector<MergePair> all;
  for (const auto& f : found) all.insert(all.end(), f.begin(), f.end());
  return deduplicate(all);
}

std::vector<std::vector<MergePair>> partition_disjoint_pairs(std::span<const MergePair> pairs) {
  std::vector<std::vector<MergePair>> batches;
  std::vector<MergePair> pending(pairs.begin(), pairs.end());
  while (!pending.empty()) {
    absl::flat_hash_set<CommunityId> used;
    std::vector<MergePair> batch;
    std::vector<MergePair> rest;
    for (const auto& p : pending) {
      if (!used.contains(p.keep) && !used.contains(p.absorb)) {
        used.insert(p.keep);
        used.insert(p.absorb);
        batch.push_back(p);
      } else {
        rest.push_back(p);
      }
    }
    batches.push_back(std::move(batch));
    pending = std::move(rest);
  }
  return batches;
}

MergeStats execute_merges(const Graph& graph, Cover& cover, std::vector<MergePair> pairs,
                          MembershipTable& membership, KeeperPolicy policy, unsigned threads) {
  MergeStats stats;
  std::vector<CommunityId> alias(cover.id_bound());
  std::iota(alias.begin(), alias.end(), CommunityId{0});
  auto resolve = [&alias](CommunityId id) {
    CommunityId root = id;
    while (alias[root] != root) root = alias[root];
    while (alias[id] != root) id = std::exchange(alias[id], root);
    return root;
  };

  for (const auto& p : pairs) {
    if (cover.find(p.keep) == nullptr || cover.find(p.absorb) == nullptr) {
      throw InvalidArgument(fmt::format("merge pair ({}, {}) names an unknown community", p.keep,
                                        p.absorb));
    }
  }

  std::vector<MergePair> pending = deduplicate(pairs);
  while (!pending.empty()) {
    std::vector<MergePair> batch;
    std::vector<MergePair> rest;
    {
      absl::flat_hash_set<CommunityId> used;
      for (const auto& p : pending) {
        if (!used.contains(p.keep) && !used.contains(p.absorb)) {
          used.insert(p.keep);
          used.insert(p.absorb);
          batch.push_back(p);
        } else {
          rest.push_back(p);
        }
      }
    }

    for (auto& p : batch) {
      if (policy == KeeperPolicy::LargerCommunity) {
        const auto keep_size = cover.find(p.keep)->size();
        const auto absorb_size = cover.find(p.absorb)->size();
        if (absorb_size > keep_size || (absorb_size == keep_size && p.absorb < p.keep)) {
          std::swap(p.keep, p.absorb);
        }
      }
    }

    const unsigned workers =
        std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(batch.size())));
    run_chunked(workers, batch.size(), [&](unsigned, std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        Community& keeper = *cover.find(batch[i].keep);
        Community& absorbed = *cover.find(batch[i].absorb);
        keeper.absorb(graph, absorbed);
        for (const NodeId v : absorbed.nodes()) membership.rename(v, absorbed.id(), keeper.id());
        absorbed.clear();
      }
    });
    ++stats.batches;
    stats.merges += batch.size();

    for (const auto& p : batch) alias[p.absorb] = p.keep;
    for (auto& p : rest) {
      p.keep = resolve(p.keep);
      p.absorb = resolve(p.absorb);
      if (p.keep != p.absorb && (cover.find(p.keep) == nullptr || cover.find(p.absorb) == nullptr)) {
        throw InternalError(
            fmt::format("merge pair ({}, {}) refers to a deleted community", p.keep, p.absorb));
      }
    }
    pending = deduplicate(rest);
  }
  cover.compact();
  return stats;
}

}  // namespace lfkmsd
