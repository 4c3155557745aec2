#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "lfkmsd/graph.hpp"

namespace lfkmsd {

using CommunityId = std::uint32_t;

/// Degree totals of a node set. `k_in` counts each internal edge twice, so
/// `k_in + k_out` is the summed weighted degree of the members.
struct CommunityDegrees {
  double k_in = 0.0;
  double k_out = 0.0;

  friend bool operator==(const CommunityDegrees&, const CommunityDegrees&) = default;
};

/// From-scratch degree totals; `nodes` must not contain duplicates.
CommunityDegrees community_degrees(const Graph& graph, std::span<const NodeId> nodes);

/// A node set with incrementally maintained k_in, k_out and boundary.
///
/// Alongside the members, the community tracks every node adjacent to at least
/// one member together with its edge weight into the member set. Non-members in
/// that table form the boundary; members use it for the removal test.
///
/// Member order follows insertion until `sort_nodes()` is called; the growth and
/// merge routines sort before handing a community back.
class Community {
 public:
  Community() = default;
  explicit Community(CommunityId id) : id_(id) {}
  /// Builds from an arbitrary node set (duplicates ignored).
  Community(CommunityId id, const Graph& graph, std::span<const NodeId> nodes);

  [[nodiscard]] CommunityId id() const noexcept { return id_; }
  [[nodiscard]] std::span<const NodeId> nodes() const noexcept { return nodes_; }
  [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
  [[nodiscard]] bool empty() const noexcept { return nodes_.empty(); }
  [[nodiscard]] bool contains(NodeId node) const noexcept;

  [[nodiscard]] double k_in() const noexcept { return k_in_; }
  [[nodiscard]] double k_out() const noexcept { return k_out_; }
  [[nodiscard]] CommunityDegrees degrees() const noexcept { return {k_in_, k_out_}; }

  /// Edge weight from `node` to the members other than itself.
  [[nodiscard]] double weight_to(NodeId node) const noexcept;
  [[nodiscard]] bool is_boundary(NodeId node) const noexcept;
  /// Non-members with at least one edge into the community, ascending.
  [[nodiscard]] std::vector<NodeId> boundary_neighbors() const;

  /// Calls `fn(node, weight_into_community)` for every boundary node.
  template <typename Fn>
  void for_each_boundary(Fn&& fn) const {
    for (const auto& [node, link] : links_) {
      if (!link.member) fn(node, link.weight);
    }
  }

  /// Adds `node`. Throws InvalidArgument if it is already a member.
  void add_node(const Graph& graph, NodeId node);
  /// Removes `node`. Throws InvalidArgument if it is not a member or is the last one.
  void remove_node(const Graph& graph, NodeId node);
  /// Unions `other`'s members into this community.
  void absorb(const Graph& graph, const Community& other);
  /// Drops every member; used when a community is absorbed by another.
  void clear() noexcept;

  void sort_nodes();
  [[nodiscard]] bool nodes_sorted() const noexcept;

  /// Same id, member set, degree caches and boundary table.
  friend bool operator==(const Community& a, const Community& b);

 private:
  struct Link {
    double weight = 0.0;
    std::uint32_t edges = 0;
    bool member = false;

    friend bool operator==(const Link&, const Link&) = default;
  };

  void insert(const Graph& graph, NodeId node, Link& link);

  CommunityId id_ = 0;
  std::vector<NodeId> nodes_;
  double k_in_ = 0.0;
  double k_out_ = 0.0;
  absl::flat_hash_map<NodeId, Link> links_;
  bool sorted_hint_broken_ = false;
};

}  // namespace lfkmsd
