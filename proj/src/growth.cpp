#include "lfkmsd/growth.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace lfkmsd {

namespace {

// std heap functions build a max-heap w.r.t. "less", so less = pops later.
bool pops_later(const Candidate& a, const Candidate& b) noexcept {
  return CandidateQueue::precedes(b, a);
}

}  // namespace

void CandidateQueue::push(double key, NodeId node) {
  heap_.push_back({key, node});
  std::push_heap(heap_.begin(), heap_.end(), pops_later);
}

Candidate CandidateQueue::pop() {
  std::pop_heap(heap_.begin(), heap_.end(), pops_later);
  const Candidate best = heap_.back();
  heap_.pop_back();
  return best;
}

void GrowthConfig::validate() const {
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw InvalidArgument(fmt::format("merge threshold eta must be in (0, 1], got {}", eta));
  }
  if (removal_passes < 1) throw InvalidArgument("removal pass cap k must be at least 1");
}

bool overlap_precheck(const Community& community, const MembershipTable& membership,
                      std::span<const std::uint32_t> sizes, double eta,
                      GrowthWorkspace& workspace) {
  auto& count = workspace.shared_count;
  if (count.size() < sizes.size()) count.resize(sizes.size(), 0);
  auto& touched = workspace.touched;
  touched.clear();

  const CommunityId self = community.id();
  const std::size_t own_size = community.size();
  bool fired = false;
  for (const NodeId v : community.nodes()) {
    membership.for_each(v, [&](CommunityId other) {
      if (fired || other == self || other >= sizes.size() || sizes[other] == 0) return;
      if (count[other]++ == 0) touched.push_back(other);
      if (count[other] >= overlap_threshold(eta, own_size, sizes[other])) fired = true;
    });
    if (fired) break;
  }
  for (const CommunityId c : touched) count[c] = 0;
  return fired;
}

GrowthOutcome grow_community(const Graph& graph, Community& community, MembershipTable& membership,
                             std::span<const std::uint32_t> sizes, const GrowthConfig& config,
                             GrowthWorkspace& workspace, GrowthTrace* trace) {
  if (community.empty()) {
    throw InvalidArgument(fmt::format("cannot grow empty community {}", community.id()));
  }
  GrowthOutcome outcome;
  if (overlap_precheck(community, membership, sizes, config.eta, workspace)) {
    outcome.overlap_detected = true;
    outcome.needs_merge_check = true;
    return outcome;
  }

  const ScaleParameter alpha = config.alpha;
  const CommunityId id = community.id();
  auto& queue = workspace.queue;
  queue.clear();
  auto rank = [&](NodeId v, double d_in) {
    const double degree = graph.weighted_degree(v);
    return ranking_factor(d_in, degree - d_in, alpha);
  };

  community.for_each_boundary([&](NodeId v, double d_in) {
    if (d_in > 0.0) queue.push(rank(v, d_in), v);
  });

  while (!queue.empty()) {
    const Candidate cand = queue.pop();
    if (trace != nullptr) {
      trace->pops.push_back({cand, {queue.entries().begin(), queue.entries().end()}});
    }
    const NodeId v = cand.node;
    if (community.contains(v)) continue;
    const double d_in = community.weight_to(v);
    // A key mismatch means v was re-queued after its weight into c changed.
    if (d_in <= 0.0 || rank(v, d_in) != cand.key) continue;
    if (addition_gain(community.degrees(), d_in, graph.weighted_degree(v), alpha) <= 0.0) continue;

    community.add_node(graph, v);
    membership.add(v, id);
    ++outcome.added;
    for (const auto& nb : graph.adjacency(v)) {
      if (community.contains(nb.node)) continue;
      const double w = community.weight_to(nb.node);
      if (w > 0.0) queue.push(rank(nb.node, w), nb.node);
    }
  }

  if (outcome.added > 0) {
    auto& members = workspace.members;
    for (unsigned pass = 0; pass < config.removal_passes; ++pass) {
      members.assign(community.nodes().begin(), community.nodes().end());
      std::size_t removed_this_pass = 0;
      for (const NodeId v : members) {
        if (community.size() < 2) break;
        const double gain = retention_gain(community.degrees(), community.weight_to(v),
                                           graph.weighted_degree(v), alpha);
        if (gain < 0.0) {
          community.remove_node(graph, v);
          membership.remove(v, id);
          ++removed_this_pass;
        }
      }
      outcome.removed += removed_this_pass;
      if (removed_this_pass == 0) break;
    }
  }

  community.sort_nodes();
  outcome.changed = outcome.added + outcome.removed > 0;
  outcome.needs_merge_check = outcome.changed;
  return outcome;
}

}  // namespace lfkmsd
