#pragma once

#include <iosfwd>
#include <vector>

#include "lfkmsd/community.hpp"
#include "lfkmsd/membership.hpp"

namespace lfkmsd {

using NodeSet = std::vector<NodeId>;
/// Plain node sets of a cover; each set ascending, no empty sets.
using CoverSets = std::vector<NodeSet>;

/// The live, mutable set of (possibly overlapping) communities.
///
/// Ids are unique and never reused; `find` is O(1). Communities absorbed by a
/// merge are emptied in place and dropped by `compact()`.
class Cover {
 public:
  Cover() = default;
  /// Builds communities 0..sets.size()-1 from node sets.
  Cover(const Graph& graph, const CoverSets& sets);

  Community& emplace(const Graph& graph, std::span<const NodeId> nodes);

  [[nodiscard]] std::size_t size() const noexcept { return communities_.size(); }
  [[nodiscard]] bool empty() const noexcept { return communities_.empty(); }
  [[nodiscard]] std::vector<Community>& communities() noexcept { return communities_; }
  [[nodiscard]] const std::vector<Community>& communities() const noexcept { return communities_; }
  [[nodiscard]] Community& operator[](std::size_t index) { return communities_[index]; }
  [[nodiscard]] const Community& operator[](std::size_t index) const { return communities_[index]; }

  /// Community with `id`, or nullptr if unknown or already compacted away.
  [[nodiscard]] Community* find(CommunityId id) noexcept;
  [[nodiscard]] const Community* find(CommunityId id) const noexcept;
  /// One past the largest id ever issued.
  [[nodiscard]] CommunityId id_bound() const noexcept { return next_id_; }

  /// Removes emptied communities, preserving the order of the others.
  void compact();

  /// Node sets, each ascending, in community order.
  [[nodiscard]] CoverSets node_sets() const;

  /// Merges communities with identical node sets into the lowest id among them.
  /// Returns the number of communities removed.
  std::size_t merge_identical(MembershipTable* membership = nullptr);

 private:
  void reindex();

  std::vector<Community> communities_;
  std::vector<std::int64_t> position_;
  CommunityId next_id_ = 0;
};

/// Table mapping each node to exactly the communities that contain it.
MembershipTable rebuild_membership(const Cover& cover, std::size_t node_count);
/// In-place variant; `table` must be sized for the graph.
void rebuild_membership(const Cover& cover, MembershipTable& table);

/// Sorts each set and the list of sets, dropping empty sets.
CoverSets canonicalize(CoverSets sets);

/// One community per line, ascending external labels, lines in ascending order.
void write_cover(const Graph& graph, const CoverSets& sets, std::ostream& out);
/// Reads a cover file, mapping labels through `graph`. Malformed tokens raise
/// ParseError, unknown labels InvalidArgument; blank and `#` lines are skipped.
CoverSets read_cover(const Graph& graph, std::istream& in);
/// Reads a cover file as raw labels.
std::vector<std::vector<NodeLabel>> read_cover_labels(std::istream& in);

}  // namespace lfkmsd
