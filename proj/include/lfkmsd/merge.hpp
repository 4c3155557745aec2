#pragma once

#include <span>
#include <vector>

#include "lfkmsd/cover.hpp"

namespace lfkmsd {

/// Two communities to merge. As emitted by the check phase, `keep` is the
/// checked community and `absorb` the partner it overlaps.
struct MergePair {
  CommunityId keep;
  CommunityId absorb;

  friend bool operator==(const MergePair&, const MergePair&) = default;
};

enum class KeeperPolicy {
  /// The larger community keeps its id (ties: lower id). Order-independent.
  LargerCommunity,
  /// The first id of the pair keeps it, as the pair was emitted.
  FirstOfPair,
};

/// Check phase. For each community in `check_set`, counts shared nodes with
/// every co-resident community through `membership` and emits (c, other) at the
/// first partner reaching overlap_threshold. Unordered duplicates are dropped,
/// keeping the first occurrence. Work is split across `threads` contiguous chunks.
std::vector<MergePair> find_merge_candidates(std::span<const CommunityId> check_set,
                                             const MembershipTable& membership, const Cover& cover,
                                             double eta, unsigned threads = 1);

/// Greedy split into batches in which no community id occurs twice.
std::vector<std::vector<MergePair>> partition_disjoint_pairs(std::span<const MergePair> pairs);

struct MergeStats {
  std::size_t merges = 0;
  std::size_t batches = 0;
};

/// Merge phase. Repeatedly takes a disjoint batch, merges its pairs
/// concurrently, renames absorbed ids in the remaining pairs to their keepers,
/// drops self-pairs and duplicates, until no pair is left. Absorbed
/// communities are removed from `cover` and from `membership`.
MergeStats execute_merges(const Graph& graph, Cover& cover, std::vector<MergePair> pairs,
                          MembershipTable& membership,
                          KeeperPolicy policy = KeeperPolicy::LargerCommunity,
                          unsigned threads = 1);

}  // namespace lfkmsd
