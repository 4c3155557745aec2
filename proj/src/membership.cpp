#include "lfkmsd/membership.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace lfkmsd {

void WriterPriorityLock::lock() noexcept {
  state_.fetch_add(kWaitingOne, std::memory_order_relaxed);
  std::uint32_t s = state_.load(std::memory_order_relaxed);
  for (;;) {
    if ((s & (kWriter | kReaderMask)) != 0) {
      state_.wait(s, std::memory_order_relaxed);
      s = state_.load(std::memory_order_relaxed);
      continue;
    }
    if (state_.compare_exchange_weak(s, (s - kWaitingOne) | kWriter, std::memory_order_acquire,
                                     std::memory_order_relaxed)) {
      return;
    }
  }
}

void WriterPriorityLock::unlock() noexcept {
  state_.fetch_and(~kWriter, std::memory_order_release);
  state_.notify_all();
}

void WriterPriorityLock::lock_shared() noexcept {
  std::uint32_t s = state_.load(std::memory_order_relaxed);
  for (;;) {
    // A queued writer shuts the door on new readers.
    if ((s & (kWriter | kWaitingMask)) != 0) {
      state_.wait(s, std::memory_order_relaxed);
      s = state_.load(std::memory_order_relaxed);
      continue;
    }
    if (state_.compare_exchange_weak(s, s + 1, std::memory_order_acquire,
                                     std::memory_order_relaxed)) {
      return;
    }
  }
}

void WriterPriorityLock::unlock_shared() noexcept {
  const std::uint32_t prev = state_.fetch_sub(1, std::memory_order_release);
  if ((prev & kReaderMask) == 1 && (prev & kWaitingMask) != 0) state_.notify_all();
}

MembershipTable::MembershipTable(std::size_t node_count)
    : node_count_(node_count), slots_(std::make_unique<Slot[]>(node_count)) {}

void MembershipTable::check(NodeId node) const {
  if (node >= node_count_) {
    throw InvalidArgument(fmt::format("node id {} out of range ({} nodes)", node, node_count_));
  }
}

void MembershipTable::update(NodeId node, CommunityId community, MembershipChange change) {
  check(node);
  Slot& slot = slots_[node];
  std::unique_lock guard(slot.lock);
  auto& ids = slot.ids;
  const auto it = std::lower_bound(ids.begin(), ids.end(), community);
  const bool present = it != ids.end() && *it == community;
  if (change == MembershipChange::Add) {
    if (!present) ids.insert(it, community);
  } else if (present) {
    ids.erase(it);
  }
}

void MembershipTable::rename(NodeId node, CommunityId from, CommunityId to) {
  check(node);
  Slot& slot = slots_[node];
  std::unique_lock guard(slot.lock);
  auto& ids = slot.ids;
  const auto it = std::lower_bound(ids.begin(), ids.end(), from);
  if (it != ids.end() && *it == from) ids.erase(it);
  const auto jt = std::lower_bound(ids.begin(), ids.end(), to);
  if (jt == ids.end() || *jt != to) ids.insert(jt, to);
}

std::vector<CommunityId> MembershipTable::snapshot(NodeId node) const {
  std::vector<CommunityId> out;
  snapshot_into(node, out);
  return out;
}

void MembershipTable::snapshot_into(NodeId node, std::vector<CommunityId>& out) const {
  check(node);
  const Slot& slot = slots_[node];
  std::shared_lock guard(slot.lock);
  out.assign(slot.ids.begin(), slot.ids.end());
}

bool MembershipTable::contains(NodeId node, CommunityId community) const {
  check(node);
  const Slot& slot = slots_[node];
  std::shared_lock guard(slot.lock);
  return std::binary_search(slot.ids.begin(), slot.ids.end(), community);
}

std::size_t MembershipTable::set_size(NodeId node) const {
  check(node);
  const Slot& slot = slots_[node];
  std::shared_lock guard(slot.lock);
  return slot.ids.size();
}

void MembershipTable::clear() noexcept {
  for (std::size_t i = 0; i < node_count_; ++i) slots_[i].ids.clear();
}

}  // namespace lfkmsd
