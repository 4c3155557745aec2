#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lfkmsd/lfk.hpp"
#include "lfkmsd/membership.hpp"

namespace lfkmsd {

struct Candidate {
  double key;
  NodeId node;
};

/// Max-heap of growth candidates; equal keys pop the lower node id first.
/// Entries are never updated in place: callers push a fresh entry whenever a
/// node's key changes and skip stale ones on pop.
class CandidateQueue {
 public:
  void push(double key, NodeId node);
  /// Removes and returns the best entry. The queue must not be empty.
  Candidate pop();
  [[nodiscard]] const Candidate& top() const { return heap_.front(); }
  [[nodiscard]] bool empty() const noexcept { return heap_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return heap_.size(); }
  void clear() noexcept { heap_.clear(); }
  /// Pending entries in heap order.
  [[nodiscard]] std::span<const Candidate> entries() const noexcept { return heap_; }

  /// True when `a` pops before `b`.
  static bool precedes(const Candidate& a, const Candidate& b) noexcept {
    return a.key > b.key || (a.key == b.key && a.node < b.node);
  }

 private:
  std::vector<Candidate> heap_;
};

struct GrowthConfig {
  ScaleParameter alpha{1.0};
  /// Merge threshold in (0, 1].
  double eta = 0.5;
  /// Maximum number of member-removal passes after a growth.
  unsigned removal_passes = 5;

  /// Throws InvalidArgument on out-of-range values.
  void validate() const;
};

struct GrowthOutcome {
  bool changed = false;
  bool needs_merge_check = false;
  /// Growth was skipped because the community already overlaps another past the threshold.
  bool overlap_detected = false;
  std::size_t added = 0;
  std::size_t removed = 0;
};

/// Optional record of every queue pop, for checking queue discipline.
struct GrowthTrace {
  struct Pop {
    Candidate popped;
    /// Pending entries right after the pop.
    std::vector<Candidate> remaining;
  };
  std::vector<Pop> pops;
};

/// Per-worker scratch reused across growth calls.
class GrowthWorkspace {
 public:
  CandidateQueue queue;
  std::vector<NodeId> members;
  std::vector<std::uint32_t> shared_count;
  std::vector<CommunityId> touched;
};

/// True once some other community shares at least
/// overlap_threshold(eta, |community|, |other|) nodes with `community`.
/// `sizes[id]` holds the size of community `id` as of the current phase.
bool overlap_precheck(const Community& community, const MembershipTable& membership,
                      std::span<const std::uint32_t> sizes, double eta, GrowthWorkspace& workspace);

/// Greedy LFK growth of one community.
///
/// Skips growth when the overlap pre-check fires. Otherwise repeatedly pops the
/// best-ranked boundary node and adds it if that strictly raises the fitness,
/// re-queueing the added node's outside neighbors. If anything was added, up to
/// `removal_passes` sweeps then drop members whose removal strictly raises the
/// fitness. `membership` is kept in step with every add and removal.
GrowthOutcome grow_community(const Graph& graph, Community& community, MembershipTable& membership,
                             std::span<const std::uint32_t> sizes, const GrowthConfig& config,
                             GrowthWorkspace& workspace, GrowthTrace* trace = nullptr);

}  // namespace lfkmsd
