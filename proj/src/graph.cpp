#include "lfkmsd/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <tuple>

#include <fmt/format.h>

namespace lfkmsd {

namespace {

struct LabeledEdge {
  NodeLabel source;
  NodeLabel target;
  double weight;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splits on runs of spaces/tabs.
std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

NodeLabel parse_label(std::string_view token, std::size_t line) {
  NodeLabel value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, fmt::format("invalid node label '{}'", token));
  }
  return value;
}

double parse_weight(std::string_view token, std::size_t line) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(value)) {
    throw ParseError(line, fmt::format("invalid edge weight '{}'", token));
  }
  if (value < 0.0) {
    throw ParseError(line, fmt::format("negative edge weight {}", value));
  }
  return value;
}

}  // namespace

Graph Graph::from_edges(std::size_t node_count, std::span<const WeightedEdge> edges,
                        ParseReport* report) {
  std::vector<NodeLabel> labels(node_count);
  for (std::size_t i = 0; i < node_count; ++i) labels[i] = i;
  return from_edges(std::move(labels), edges, report);
}

Graph Graph::from_edges(std::vector<NodeLabel> labels, std::span<const WeightedEdge> edges,
                        ParseReport* report) {
  if (!std::is_sorted(labels.begin(), labels.end()) ||
      std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    throw InvalidArgument("node labels must be strictly ascending");
  }
  const std::size_t n = labels.size();

  struct Arc {
    NodeId source;
    NodeId target;
    double weight;
  };
  std::vector<Arc> arcs;
  arcs.reserve(edges.size() * 2);
  std::size_t self_loops = 0;
  for (const auto& e : edges) {
    if (e.source >= n || e.target >= n) {
      throw InvalidArgument(fmt::format("edge ({}, {}) out of range for {} nodes", e.source,
                                        e.target, n));
    }
    if (!(e.weight >= 0.0) || !std::isfinite(e.weight)) {
      throw InvalidArgument(fmt::format("edge ({}, {}) has invalid weight", e.source, e.target));
    }
    if (e.source == e.target) {
      ++self_loops;
      continue;
    }
    arcs.push_back({e.source, e.target, e.weight});
    arcs.push_back({e.target, e.source, e.weight});
  }
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
    return std::tie(a.source, a.target) < std::tie(b.source, b.target);
  });

  Graph g;
  g.labels_ = std::move(labels);
  g.offsets_.assign(n + 1, 0);
  g.weighted_degree_.assign(n, 0.0);
  g.targets_.reserve(arcs.size());
  std::size_t merged_arcs = 0;
  for (std::size_t i = 0; i < arcs.size();) {
    const NodeId s = arcs[i].source;
    const NodeId t = arcs[i].target;
    double w = 0.0;
    std::size_t j = i;
    for (; j < arcs.size() && arcs[j].source == s && arcs[j].target == t; ++j) w += arcs[j].weight;
    merged_arcs += j - i - 1;
    g.targets_.push_back({t, w});
    ++g.offsets_[s + 1];
    g.weighted_degree_[s] += w;
    i = j;
  }
  for (std::size_t u = 0; u < n; ++u) g.offsets_[u + 1] += g.offsets_[u];
  for (std::size_t u = 0; u < n; ++u) g.total_weight_ += g.weighted_degree_[u];
  g.total_weight_ /= 2.0;

  if (report != nullptr) {
    report->self_loops_dropped += self_loops;
    report->duplicates_merged += merged_arcs / 2;
  }
  return g;
}

std::span<const Neighbor> Graph::neighbors(NodeId node) const {
  if (!contains(node)) {
    throw InvalidArgument(fmt::format("node id {} out of range ({} nodes)", node, node_count()));
  }
  return adjacency(node);
}

NodeId Graph::id_of(NodeLabel label) const {
  const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) {
    throw InvalidArgument(fmt::format("unknown node label {}", label));
  }
  return static_cast<NodeId>(it - labels_.begin());
}

bool Graph::has_label(NodeLabel label) const noexcept {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

Graph parse_edge_list(std::istream& in, ParseReport* report) {
  std::vector<LabeledEdge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    const auto tokens = tokenize(content);
    if (tokens.size() < 2 || tokens.size() > 3) {
      throw ParseError(line_no, fmt::format("expected 'src dst [weight]', got {} fields",
                                            tokens.size()));
    }
    const NodeLabel s = parse_label(tokens[0], line_no);
    const NodeLabel t = parse_label(tokens[1], line_no);
    const double w = tokens.size() == 3 ? parse_weight(tokens[2], line_no) : 1.0;
    edges.push_back({s, t, w});
  }
  if (edges.empty()) throw ParseError(line_no, "empty edge list");

  std::vector<NodeLabel> labels;
  labels.reserve(edges.size() * 2);
  for (const auto& e : edges) {
    labels.push_back(e.source);
    labels.push_back(e.target);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  auto to_id = [&labels](NodeLabel l) {
    return static_cast<NodeId>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
  };
  std::vector<WeightedEdge> internal;
  internal.reserve(edges.size());
  for (const auto& e : edges) internal.push_back({to_id(e.source), to_id(e.target), e.weight});

  ParseReport local;
  local.lines = line_no;
  local.edges_read = edges.size();
  Graph g = Graph::from_edges(std::move(labels), internal, &local);
  if (report != nullptr) *report = local;
  return g;
}

void write_edge_list(const Graph& graph, std::ostream& out) {
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    // Isolated nodes survive re-parsing as a dropped self-loop.
    if (graph.degree(u) == 0) out << fmt::format("{} {}\n", graph.label(u), graph.label(u));
    for (const auto& nb : graph.adjacency(u)) {
      if (nb.node <= u) continue;
      out << fmt::format("{} {} {}\n", graph.label(u), graph.label(nb.node), nb.weight);
    }
  }
}

}  // namespace lfkmsd
