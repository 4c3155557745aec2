#include "lfkmsd/cover.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <string>

#include <absl/container/flat_hash_map.h>
#include <absl/hash/hash.h>
#include <fmt/format.h>

namespace lfkmsd {

Cover::Cover(const Graph& graph, const CoverSets& sets) {
  communities_.reserve(sets.size());
  for (const auto& s : sets) emplace(graph, s);
}

Community& Cover::emplace(const Graph& graph, std::span<const NodeId> nodes) {
  const CommunityId id = next_id_++;
  position_.push_back(static_cast<std::int64_t>(communities_.size()));
  return communities_.emplace_back(id, graph, nodes);
}

Community* Cover::find(CommunityId id) noexcept {
  if (id >= position_.size() || position_[id] < 0) return nullptr;
  Community& c = communities_[static_cast<std::size_t>(position_[id])];
  return c.empty() ? nullptr : &c;
}

const Community* Cover::find(CommunityId id) const noexcept {
  return const_cast<Cover*>(this)->find(id);
}

void Cover::compact() {
  std::erase_if(communities_, [](const Community& c) { return c.empty(); });
  reindex();
}

void Cover::reindex() {
  std::fill(position_.begin(), position_.end(), -1);
  for (std::size_t i = 0; i < communities_.size(); ++i) {
    position_[communities_[i].id()] = static_cast<std::int64_t>(i);
  }
}

CoverSets Cover::node_sets() const {
  CoverSets out;
  out.reserve(communities_.size());
  for (const auto& c : communities_) {
    NodeSet s(c.nodes().begin(), c.nodes().end());
    if (!c.nodes_sorted()) std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
  }
  return out;
}

std::size_t Cover::merge_identical(MembershipTable* membership) {
  absl::flat_hash_map<NodeSet, std::size_t> first_index;
  std::size_t removed = 0;
  const CoverSets sets = node_sets();
  for (std::size_t i = 0; i < communities_.size(); ++i) {
    if (sets[i].empty()) continue;
    auto [it, inserted] = first_index.try_emplace(sets[i], i);
    if (inserted) continue;
    Community& kept = communities_[it->second];
    Community& dup = communities_[i];
    if (dup.id() < kept.id()) {
      std::swap(kept, dup);
      std::swap(position_[kept.id()], position_[dup.id()]);
    }
    if (membership != nullptr) {
      for (const NodeId v : dup.nodes()) membership->remove(v, dup.id());
    }
    dup.clear();
    ++removed;
  }
  if (removed > 0) compact();
  return removed;
}

MembershipTable rebuild_membership(const Cover& cover, std::size_t node_count) {
  MembershipTable table(node_count);
  rebuild_membership(cover, table);
  return table;
}

void rebuild_membership(const Cover& cover, MembershipTable& table) {
  table.clear();
  for (const auto& c : cover.communities()) {
    for (const NodeId v : c.nodes()) table.add(v, c.id());
  }
}

CoverSets canonicalize(CoverSets sets) {
  std::erase_if(sets, [](const NodeSet& s) { return s.empty(); });
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  std::sort(sets.begin(), sets.end());
  return sets;
}

void write_cover(const Graph& graph, const CoverSets& sets, std::ostream& out) {
  // Labels ascend with ids, so sorting by id also sorts by label.
  const CoverSets sorted = canonicalize(sets);
  std::string line;
  for (const auto& s : sorted) {
    line.clear();
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i > 0) line.push_back(' ');
      line += std::to_string(graph.label(s[i]));
    }
    line.push_back('\n');
    out << line;
  }
}

std::vector<std::vector<NodeLabel>> read_cover_labels(std::istream& in) {
  std::vector<std::vector<NodeLabel>> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<NodeLabel> community;
    std::size_t pos = 0;
    bool comment = false;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
      if (pos >= line.size()) break;
      if (community.empty() && line[pos] == '#') {
        comment = true;
        break;
      }
      std::size_t end = pos;
      while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
      NodeLabel value = 0;
      const auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, value);
      if (ec != std::errc{} || ptr != line.data() + end) {
        throw ParseError(line_no, fmt::format("invalid node label '{}'", line.substr(pos, end - pos)));
      }
      community.push_back(value);
      pos = end;
    }
    if (!comment && !community.empty()) out.push_back(std::move(community));
  }
  return out;
}

CoverSets read_cover(const Graph& graph, std::istream& in) {
  const auto labeled = read_cover_labels(in);
  CoverSets out;
  out.reserve(labeled.size());
  for (std::size_t i = 0; i < labeled.size(); ++i) {
    NodeSet s;
    s.reserve(labeled[i].size());
    for (const NodeLabel l : labeled[i]) {
      if (!graph.has_label(l)) {
        throw InvalidArgument(
            fmt::format("cover community {}: label {} is not a node of the graph", i + 1, l));
      }
      s.push_back(graph.id_of(l));
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace lfkmsd
