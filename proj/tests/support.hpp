#pragma once

#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lfkmsd/cover.hpp"
#include "lfkmsd/graph.hpp"

namespace lfkmsd::test {

inline Graph parse(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

inline Graph graph_of(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges) {
  std::vector<WeightedEdge> list;
  for (const auto& [u, v] : edges) list.push_back({u, v, 1.0});
  return Graph::from_edges(n, list);
}

// Unit-weight isolated triangle on ids 0, 1, 2.
inline Graph triangle() { return graph_of(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline Graph path(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return graph_of(n, edges);
}

inline Graph clique(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return graph_of(n, edges);
}

// Two k-cliques on [0,k) and [k,2k) joined by the edge (k-1, k).
inline Graph barbell(std::size_t k) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId base : {NodeId{0}, static_cast<NodeId>(k)}) {
    for (NodeId u = 0; u < k; ++u) {
      for (NodeId v = u + 1; v < k; ++v) edges.emplace_back(base + u, base + v);
    }
  }
  edges.emplace_back(static_cast<NodeId>(k - 1), static_cast<NodeId>(k));
  return graph_of(2 * k, edges);
}

// Erdos-Renyi graph with optional random weights in [0.5, 3).
inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p, bool weighted = false) {
  std::bernoulli_distribution coin(p);
  std::uniform_real_distribution<double> weight(0.5, 3.0);
  std::vector<WeightedEdge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v, weighted ? weight(rng) : 1.0});
    }
  }
  return Graph::from_edges(n, edges);
}

inline NodeSet random_subset(std::mt19937_64& rng, std::size_t n, std::size_t min_size = 1) {
  std::uniform_int_distribution<std::size_t> size_dist(min_size, n);
  std::vector<NodeId> all(n);
  for (NodeId v = 0; v < n; ++v) all[v] = v;
  std::shuffle(all.begin(), all.end(), rng);
  NodeSet s(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size_dist(rng)));
  std::sort(s.begin(), s.end());
  return s;
}

// Decodes one graph6 line (graphs with at most 62 nodes).
inline Graph from_graph6(const std::string& line) {
  const std::size_t n = static_cast<std::size_t>(line.at(0) - 63);
  std::vector<bool> bits;
  for (std::size_t i = 1; i < line.size(); ++i) {
    const int value = line[i] - 63;
    for (int b = 5; b >= 0; --b) bits.push_back(((value >> b) & 1) != 0);
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::size_t k = 0;
  for (NodeId v = 1; v < n; ++v) {
    for (NodeId u = 0; u < v; ++u, ++k) {
      if (bits.at(k)) edges.emplace_back(u, v);
    }
  }
  return graph_of(n, edges);
}

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(LFKMSD_TEST_DATA) / name;
}

}  // namespace lfkmsd::test
