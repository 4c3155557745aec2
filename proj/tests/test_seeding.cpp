#include <doctest.h>

#include <algorithm>

#include "lfkmsd/seeding.hpp"
#include "support.hpp"

using namespace lfkmsd;

namespace {

std::vector<std::size_t> distances_from(const Graph& g, NodeId source) {
  std::vector<std::size_t> dist(g.node_count(), SIZE_MAX);
  std::vector<NodeId> frontier{source};
  dist[source] = 0;
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    const NodeId u = frontier[i];
    for (const auto& nb : g.adjacency(u)) {
      if (dist[nb.node] == SIZE_MAX) {
        dist[nb.node] = dist[u] + 1;
        frontier.push_back(nb.node);
      }
    }
  }
  return dist;
}

}  // namespace

TEST_CASE("path of five seeds only from the middle when it is drawn first") {
  const Graph p = test::path(5);
  bool middle_first_seen = false;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    for (const auto rule : {SeedRule::ExcludeNeighbors, SeedRule::ExcludeSecondNeighbors}) {
      const auto seeds = draw_seeds(p, {rule, seed});
      REQUIRE_FALSE(seeds.empty());
      for (const NodeId s : seeds) CHECK(p.degree(s) >= 2);
      if (seeds.front() == 2) {
        middle_first_seen = true;
        CHECK(seeds == std::vector<NodeId>{2});
      }
    }
  }
  CHECK(middle_first_seen);
}

TEST_CASE("two disjoint triangles get one seed each") {
  const Graph g = test::graph_of(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto seeds = draw_seeds(g, {SeedRule::ExcludeNeighbors, seed});
    REQUIRE(seeds.size() == 2);
    std::sort(seeds.begin(), seeds.end());
    CHECK(seeds[0] < 3);
    CHECK(seeds[1] >= 3);
  }
}

TEST_CASE("star graph seeds only its center") {
  const Graph star = test::graph_of(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  const Cover cover = select_seeds(star, {SeedRule::ExcludeNeighbors, 4});
  REQUIRE(cover.size() == 1);
  CHECK(cover[0].nodes()[0] == 0);
  CHECK(cover[0].size() == 1);
}

TEST_CASE("no node with two neighbors yields no seeds") {
  const Graph g = test::graph_of(4, {{0, 1}, {2, 3}});
  CHECK(draw_seeds(g, {}).empty());
  CHECK(select_seeds(g, {}).empty());
}

TEST_CASE("seed distance and coverage properties on random graphs") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = test::random_graph(rng, 60, 0.06);
    for (const auto rule : {SeedRule::ExcludeNeighbors, SeedRule::ExcludeSecondNeighbors}) {
      const std::size_t min_gap = rule == SeedRule::ExcludeNeighbors ? 2 : 3;
      const auto seeds = draw_seeds(g, {rule, static_cast<std::uint64_t>(trial)});
      std::vector<std::size_t> nearest(g.node_count(), SIZE_MAX);
      for (const NodeId s : seeds) {
        CHECK(g.degree(s) >= 2);
        const auto dist = distances_from(g, s);
        for (const NodeId t : seeds) {
          if (t != s) CHECK(dist[t] >= min_gap);
        }
        for (NodeId v = 0; v < g.node_count(); ++v) nearest[v] = std::min(nearest[v], dist[v]);
      }
      // The candidate set only empties once every candidate is excluded.
      for (NodeId v = 0; v < g.node_count(); ++v) {
        if (g.degree(v) >= 2) CHECK(nearest[v] < min_gap);
      }
      CHECK(draw_seeds(g, {rule, static_cast<std::uint64_t>(trial)}) == seeds);
    }
  }
}
