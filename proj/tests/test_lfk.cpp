#include <doctest.h>

#include <cmath>

#include "lfkmsd/lfk.hpp"
#include "support.hpp"

using namespace lfkmsd;

namespace {

const ScaleParameter kOne{1.0};

double brute_fitness(const Graph& g, const std::vector<NodeId>& nodes, ScaleParameter a) {
  const auto d = community_degrees(g, nodes);
  return community_fitness(d.k_in, d.k_out, a);
}

}  // namespace

TEST_CASE("scale parameter must be positive and finite") {
  CHECK(ScaleParameter(0.3).value() == 0.3);
  CHECK_THROWS_AS(ScaleParameter{0.0}, InvalidArgument);
  CHECK_THROWS_AS(ScaleParameter{-1.0}, InvalidArgument);
  CHECK_THROWS_AS(ScaleParameter{std::nan("")}, InvalidArgument);
  CHECK_THROWS_AS(ScaleParameter{INFINITY}, InvalidArgument);
  CHECK(ScaleParameter(0.5) < ScaleParameter(1.0));
}

TEST_CASE("community fitness values") {
  CHECK(community_fitness(6, 0, kOne) == 1.0);
  CHECK(community_fitness(6, 2, kOne) == 0.75);
  // 6 / sqrt(8), evaluated with 50-digit arithmetic.
  CHECK(community_fitness(6, 2, ScaleParameter(0.5)) == doctest::Approx(2.1213203435596425).epsilon(1e-15));
  CHECK(community_fitness(0, 0, kOne) == 0.0);
  CHECK(community_fitness(0, 5, kOne) == 0.0);
}

TEST_CASE("ranking factor values") {
  CHECK(ranking_factor(2, 1, kOne) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  for (const double a : {0.1, 0.5, 1.0, 2.5}) CHECK(ranking_factor(1, 0, ScaleParameter(a)) == 2.0);
  // 6 / 8^0.8, evaluated with 50-digit arithmetic.
  CHECK(ranking_factor(3, 5, ScaleParameter(0.8)) == doctest::Approx(1.1367874248827985).epsilon(1e-15));
  CHECK_THROWS_AS((void)ranking_factor(0, 3, kOne), InvalidArgument);
}

TEST_CASE("node fitness on the isolated triangle") {
  const Graph tri = test::triangle();
  const std::vector<NodeId> ab{0, 1};
  const Community c(0, tri, ab);
  CHECK(node_fitness(tri, c, 2, kOne) == 0.5);
  // Member's value is f(c) - f(c without it).
  const std::vector<NodeId> all{0, 1, 2};
  const Community full(0, tri, all);
  CHECK(node_fitness(tri, full, 2, kOne) == 0.5);
}

TEST_CASE("node fitness is negative for a pure out-degree node") {
  // Community {0,1,2} of a triangle with a pendant 3 hanging off node 2,
  // and node 3 also linked to 4 and 5 outside.
  const Graph g = test::graph_of(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {3, 5}});
  const std::vector<NodeId> tri{0, 1, 2};
  const Community c(0, g, tri);
  CHECK(node_fitness(g, c, 3, kOne) < 0.0);
  CHECK_THROWS_AS((void)node_fitness(g, c, 5, kOne), InvalidArgument);
  CHECK_THROWS_AS((void)node_fitness(g, c, 9, kOne), InvalidArgument);
}

TEST_CASE("node fitness matches brute force on small random graphs") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<std::size_t> size(2, 10);
    const std::size_t n = size(rng);
    const Graph g = test::random_graph(rng, n, 0.4, trial % 3 == 0);
    const NodeSet nodes = test::random_subset(rng, n);
    const Community c(0, g, nodes);
    for (const double a : {0.5, 1.0, 1.7}) {
      const ScaleParameter alpha(a);
      for (NodeId v = 0; v < n; ++v) {
        std::vector<NodeId> with(nodes);
        std::vector<NodeId> without;
        if (!c.contains(v)) with.push_back(v);
        for (const NodeId u : nodes) {
          if (u != v) without.push_back(u);
        }
        const double expected = brute_fitness(g, with, alpha) - brute_fitness(g, without, alpha);
        if (c.contains(v) || c.is_boundary(v)) {
          CHECK(node_fitness(g, c, v, alpha) == doctest::Approx(expected).epsilon(1e-12));
        } else {
          CHECK_THROWS_AS((void)node_fitness(g, c, v, alpha), InvalidArgument);
        }
      }
    }
  }
}

TEST_CASE("cover quality is the mean fitness") {
  const Graph two = test::graph_of(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(cover_quality(two, {{0, 1, 2}, {3, 4, 5}}, kOne) == 1.0);
  const Graph p = test::path(4);
  CHECK(cover_quality(p, {{0, 1, 2, 3}}, ScaleParameter(0.7)) == brute_fitness(p, {0, 1, 2, 3}, ScaleParameter(0.7)));
  CHECK_THROWS_AS((void)cover_quality(p, {}, kOne), InvalidArgument);

  std::mt19937_64 rng(17);
  const Graph g = test::random_graph(rng, 30, 0.2, true);
  CoverSets cover;
  double sum = 0.0;
  for (int i = 0; i < 6; ++i) {
    cover.push_back(test::random_subset(rng, 30));
    sum += brute_fitness(g, cover.back(), ScaleParameter(0.9));
  }
  CHECK(cover_quality(g, cover, ScaleParameter(0.9)) == doctest::Approx(sum / 6.0).epsilon(1e-14));
}

TEST_CASE("overlap threshold rounds up eta times the smaller size") {
  CHECK(overlap_threshold(0.5, 4, 4) == 2);
  CHECK(overlap_threshold(0.5, 5, 9) == 3);
  CHECK(overlap_threshold(0.3, 10, 20) == 3);
  CHECK(overlap_threshold(1.0, 4, 6) == 4);
  CHECK(overlap_threshold(0.01, 3, 3) == 1);
}
