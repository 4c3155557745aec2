#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "lfkmsd/community.hpp"

namespace lfkmsd {

/// Readers-writer lock giving priority to writers: once a writer is waiting,
/// no new reader gets in. One 32-bit word, blocking through atomic wait/notify.
/// Satisfies SharedLockable, so std::shared_lock / std::unique_lock apply.
class WriterPriorityLock {
 public:
  WriterPriorityLock() = default;
  WriterPriorityLock(const WriterPriorityLock&) = delete;
  WriterPriorityLock& operator=(const WriterPriorityLock&) = delete;

  void lock() noexcept;
  void unlock() noexcept;
  void lock_shared() noexcept;
  void unlock_shared() noexcept;

  /// Writers currently queued (not yet holding the lock). For tests.
  [[nodiscard]] std::uint32_t waiting_writers() const noexcept {
    return (state_.load(std::memory_order_relaxed) & kWaitingMask) >> kWaitingShift;
  }

 private:
  static constexpr std::uint32_t kReaderMask = 0x0000ffffu;
  static constexpr std::uint32_t kWaitingShift = 16;
  static constexpr std::uint32_t kWaitingOne = 1u << kWaitingShift;
  static constexpr std::uint32_t kWaitingMask = 0x7fff0000u;
  static constexpr std::uint32_t kWriter = 0x80000000u;

  std::atomic<std::uint32_t> state_{0};
};

enum class MembershipChange { Add, Remove };

/// Per-node sets of community ids, shared by all growth workers.
///
/// Each node has its own lock, so workers touching different nodes never
/// contend. Id sets are kept ascending.
class MembershipTable {
 public:
  MembershipTable() = default;
  explicit MembershipTable(std::size_t node_count);

  [[nodiscard]] std::size_t node_count() const noexcept { return node_count_; }

  /// Idempotent add/remove of `community` in `node`'s set.
  void update(NodeId node, CommunityId community, MembershipChange change);
  void add(NodeId node, CommunityId community) { update(node, community, MembershipChange::Add); }
  void remove(NodeId node, CommunityId community) {
    update(node, community, MembershipChange::Remove);
  }
  /// Replaces `from` with `to` in one atomic step (merge renaming).
  void rename(NodeId node, CommunityId from, CommunityId to);

  [[nodiscard]] std::vector<CommunityId> snapshot(NodeId node) const;
  /// Copies `node`'s set into `out` (cleared first), reusing its storage.
  void snapshot_into(NodeId node, std::vector<CommunityId>& out) const;

  /// Runs `fn(community_id)` for each id in `node`'s set while holding its read lock.
  template <typename Fn>
  void for_each(NodeId node, Fn&& fn) const {
    check(node);
    const Slot& slot = slots_[node];
    std::shared_lock guard(slot.lock);
    for (const CommunityId c : slot.ids) fn(c);
  }

  [[nodiscard]] bool contains(NodeId node, CommunityId community) const;
  [[nodiscard]] std::size_t set_size(NodeId node) const;

  /// Empties every set. Not safe against concurrent access.
  void clear() noexcept;

 private:
  struct Slot {
    mutable WriterPriorityLock lock;
    std::vector<CommunityId> ids;
  };

  void check(NodeId node) const;

  std::size_t node_count_ = 0;
  std::unique_ptr<Slot[]> slots_;
};

}  // namespace lfkmsd
