#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "lfkmsd/error.hpp"

namespace lfkmsd {

using NodeId = std::uint32_t;
using NodeLabel = std::uint64_t;

struct Neighbor {
  NodeId node;
  double weight;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

struct WeightedEdge {
  NodeId source;
  NodeId target;
  double weight = 1.0;
};

/// Counters collected while reading an edge list.
struct ParseReport {
  std::size_t lines = 0;
  std::size_t edges_read = 0;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_merged = 0;
};

/// Immutable weighted undirected graph in compressed adjacency form.
///
/// Internal ids are dense `0..node_count()-1` and follow the ascending order of
/// the external labels, so neighbor lists sorted by id are also sorted by label.
/// Every undirected edge appears in both endpoint lists with the same weight.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list over internal ids `0..node_count-1`. Edges are
  /// symmetrized, duplicates summed and self-loops dropped. Labels default to ids.
  static Graph from_edges(std::size_t node_count, std::span<const WeightedEdge> edges,
                          ParseReport* report = nullptr);

  /// Same, with an explicit ascending label table (labels[i] is node i's label).
  static Graph from_edges(std::vector<NodeLabel> labels, std::span<const WeightedEdge> edges,
                          ParseReport* report = nullptr);

  [[nodiscard]] std::size_t node_count() const noexcept { return weighted_degree_.size(); }
  /// Number of undirected edges (m).
  [[nodiscard]] std::size_t edge_count() const noexcept { return targets_.size() / 2; }
  [[nodiscard]] double total_weight() const noexcept { return total_weight_; }

  /// Adjacency of `node`, ascending by neighbor id. Throws InvalidArgument for a bad id.
  [[nodiscard]] std::span<const Neighbor> neighbors(NodeId node) const;

  /// Unchecked variant for inner loops.
  [[nodiscard]] std::span<const Neighbor> adjacency(NodeId node) const noexcept {
    return {targets_.data() + offsets_[node], targets_.data() + offsets_[node + 1]};
  }

  [[nodiscard]] double weighted_degree(NodeId node) const noexcept { return weighted_degree_[node]; }
  /// Number of distinct neighbors.
  [[nodiscard]] std::size_t degree(NodeId node) const noexcept {
    return offsets_[node + 1] - offsets_[node];
  }

  [[nodiscard]] NodeLabel label(NodeId node) const noexcept { return labels_[node]; }
  [[nodiscard]] std::span<const NodeLabel> labels() const noexcept { return labels_; }
  /// Internal id for an external label; throws InvalidArgument if absent.
  [[nodiscard]] NodeId id_of(NodeLabel label) const;
  [[nodiscard]] bool has_label(NodeLabel label) const noexcept;

  [[nodiscard]] bool contains(NodeId node) const noexcept { return node < node_count(); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> targets_;
  std::vector<double> weighted_degree_;
  std::vector<NodeLabel> labels_;
  double total_weight_ = 0.0;
};

/// Reads `src dst [weight]` lines. `#` lines and blank lines are skipped.
/// Throws ParseError (with line number) on malformed input and on empty input.
Graph parse_edge_list(std::istream& in, ParseReport* report = nullptr);

/// Writes one `src dst weight` line per undirected edge, using external labels.
void write_edge_list(const Graph& graph, std::ostream& out);

}  // namespace lfkmsd
