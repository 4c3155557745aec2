#include "lfkmsd/community.hpp"

#include <algorithm>

#include <absl/container/flat_hash_set.h>
#include <fmt/format.h>

namespace lfkmsd {

CommunityDegrees community_degrees(const Graph& graph, std::span<const NodeId> nodes) {
  absl::flat_hash_set<NodeId> members;
  members.reserve(nodes.size());
  for (const NodeId v : nodes) {
    if (!graph.contains(v)) throw InvalidArgument(fmt::format("unknown node id {}", v));
    members.insert(v);
  }
  CommunityDegrees d;
  for (const NodeId v : members) {
    for (const auto& nb : graph.adjacency(v)) {
      if (members.contains(nb.node)) {
        d.k_in += nb.weight;
      } else {
        d.k_out += nb.weight;
      }
    }
  }
  return d;
}

Community::Community(CommunityId id, const Graph& graph, std::span<const NodeId> nodes) : id_(id) {
  for (const NodeId v : nodes) {
    if (!graph.contains(v)) throw InvalidArgument(fmt::format("unknown node id {}", v));
    auto& link = links_[v];
    if (!link.member) insert(graph, v, link);
  }
  sort_nodes();
}

bool Community::contains(NodeId node) const noexcept {
  const auto it = links_.find(node);
  return it != links_.end() && it->second.member;
}

double Community::weight_to(NodeId node) const noexcept {
  const auto it = links_.find(node);
  return it == links_.end() ? 0.0 : it->second.weight;
}

bool Community::is_boundary(NodeId node) const noexcept {
  const auto it = links_.find(node);
  return it != links_.end() && !it->second.member;
}

std::vector<NodeId> Community::boundary_neighbors() const {
  std::vector<NodeId> out;
  for_each_boundary([&out](NodeId v, double) { out.push_back(v); });
  std::sort(out.begin(), out.end());
  return out;
}

void Community::insert(const Graph& graph, NodeId node, Link& link) {
  const double d_in = link.weight;
  const double degree = graph.weighted_degree(node);
  k_in_ += 2.0 * d_in;
  k_out_ += degree - 2.0 * d_in;
  link.member = true;
  if (!nodes_.empty() && node < nodes_.back()) sorted_hint_broken_ = true;
  nodes_.push_back(node);
  // `link` may dangle once the table rehashes below.
  for (const auto& nb : graph.adjacency(node)) {
    auto& l = links_[nb.node];
    l.weight += nb.weight;
    ++l.edges;
  }
}

void Community::add_node(const Graph& graph, NodeId node) {
  if (!graph.contains(node)) throw InvalidArgument(fmt::format("unknown node id {}", node));
  auto& link = links_[node];
  if (link.member) {
    throw InvalidArgument(fmt::format("node {} already in community {}", node, id_));
  }
  insert(graph, node, link);
}

void Community::remove_node(const Graph& graph, NodeId node) {
  const auto it = links_.find(node);
  if (it == links_.end() || !it->second.member) {
    throw InvalidArgument(fmt::format("node {} not in community {}", node, id_));
  }
  if (nodes_.size() == 1) {
    throw InvalidArgument(
        fmt::format("removing node {} would empty community {}; dissolve it instead", node, id_));
  }
  const double d_in = it->second.weight;
  const double degree = graph.weighted_degree(node);
  k_in_ -= 2.0 * d_in;
  k_out_ -= degree - 2.0 * d_in;
  it->second.member = false;
  if (it->second.edges == 0) links_.erase(it);

  for (const auto& nb : graph.adjacency(node)) {
    const auto nit = links_.find(nb.node);
    auto& l = nit->second;
    if (--l.edges == 0) {
      if (!l.member) {
        links_.erase(nit);
        continue;
      }
      l.weight = 0.0;
    } else {
      l.weight -= nb.weight;
    }
  }
  nodes_.erase(std::find(nodes_.begin(), nodes_.end(), node));
  if (nodes_.empty()) {
    k_in_ = 0.0;
    k_out_ = 0.0;
  }
}

void Community::absorb(const Graph& graph, const Community& other) {
  for (const NodeId v : other.nodes_) {
    auto& link = links_[v];
    if (!link.member) insert(graph, v, link);
  }
  sort_nodes();
}

void Community::clear() noexcept {
  nodes_.clear();
  links_.clear();
  k_in_ = 0.0;
  k_out_ = 0.0;
  sorted_hint_broken_ = false;
}

void Community::sort_nodes() {
  if (sorted_hint_broken_) std::sort(nodes_.begin(), nodes_.end());
  sorted_hint_broken_ = false;
}

bool Community::nodes_sorted() const noexcept { return !sorted_hint_broken_; }

bool operator==(const Community& a, const Community& b) {
  if (a.id_ != b.id_ || a.k_in_ != b.k_in_ || a.k_out_ != b.k_out_) return false;
  if (a.nodes_.size() != b.nodes_.size() || a.links_ != b.links_) return false;
  auto na = a.nodes_;
  auto nb = b.nodes_;
  std::sort(na.begin(), na.end());
  std::sort(nb.begin(), nb.end());
  return na == nb;
}

}  // namespace lfkmsd
