#include <doctest.h>

#include <algorithm>

#include "lfkmsd/community.hpp"
#include "support.hpp"

using namespace lfkmsd;

namespace {

Community make(const Graph& g, std::vector<NodeId> nodes, CommunityId id = 0) {
  return Community(id, g, nodes);
}

}  // namespace

TEST_CASE("community_degrees from scratch") {
  const Graph tri = test::triangle();
  const std::vector<NodeId> all{0, 1, 2};
  CHECK(community_degrees(tri, all) == CommunityDegrees{6.0, 0.0});
  const Graph p = test::path(3);
  const std::vector<NodeId> first_two{0, 1};
  CHECK(community_degrees(p, first_two) == CommunityDegrees{2.0, 1.0});
  CHECK(community_degrees(p, {}) == CommunityDegrees{0.0, 0.0});
  const std::vector<NodeId> bad{7};
  CHECK_THROWS_AS(community_degrees(p, bad), InvalidArgument);
}

TEST_CASE("add_node updates degrees and boundary") {
  SUBCASE("triangle completes") {
    const Graph tri = test::triangle();
    Community c = make(tri, {0, 1});
    CHECK(c.degrees() == CommunityDegrees{2.0, 2.0});
    c.add_node(tri, 2);
    CHECK(c.degrees() == CommunityDegrees{6.0, 0.0});
    CHECK(c.boundary_neighbors().empty());
  }
  SUBCASE("path grows by one") {
    const Graph p = test::path(3);
    Community c = make(p, {0});
    c.add_node(p, 1);
    CHECK(c.degrees() == CommunityDegrees{2.0, 1.0});
    CHECK(c.boundary_neighbors() == std::vector<NodeId>{2});
  }
  SUBCASE("star center joins a leaf") {
    // Center 0 with leaves 1, 2, 3.
    const Graph star = test::graph_of(4, {{0, 1}, {0, 2}, {0, 3}});
    Community c = make(star, {1});
    CHECK(c.boundary_neighbors() == std::vector<NodeId>{0});
    c.add_node(star, 0);
    CHECK(c.degrees() == CommunityDegrees{2.0, 2.0});
    CHECK(c.boundary_neighbors() == std::vector<NodeId>{2, 3});
    CHECK(c.weight_to(2) == 1.0);
    CHECK(c.is_boundary(3));
    CHECK_FALSE(c.is_boundary(1));
  }
  SUBCASE("duplicate add and unknown node are errors") {
    const Graph p = test::path(3);
    Community c = make(p, {0});
    CHECK_THROWS_AS(c.add_node(p, 0), InvalidArgument);
    CHECK_THROWS_AS(c.add_node(p, 9), InvalidArgument);
  }
}

TEST_CASE("remove_node reverses add_node") {
  const Graph tri = test::triangle();
  Community c = make(tri, {0, 1, 2});
  c.remove_node(tri, 2);
  CHECK(c.degrees() == CommunityDegrees{2.0, 2.0});
  CHECK(c.boundary_neighbors() == std::vector<NodeId>{2});

  const Graph g = test::barbell(4);
  const Community original = make(g, {0, 1, 3}, 5);
  Community copy = original;
  copy.add_node(g, 4);
  CHECK_FALSE(copy == original);
  copy.remove_node(g, 4);
  CHECK(copy == original);

  CHECK_THROWS_AS(copy.remove_node(g, 6), InvalidArgument);
  Community single = make(g, {2});
  CHECK_THROWS_AS(single.remove_node(g, 2), InvalidArgument);
}

TEST_CASE("absorb equals the union") {
  std::mt19937_64 rng(3);
  const Graph g = test::random_graph(rng, 20, 0.25, true);
  Community a = make(g, {0, 1, 2, 3, 9});
  const Community b = make(g, {3, 4, 5, 9, 12});
  a.absorb(g, b);
  const std::vector<NodeId> joined{0, 1, 2, 3, 4, 5, 9, 12};
  CHECK(std::vector<NodeId>(a.nodes().begin(), a.nodes().end()) == joined);
  const auto d = community_degrees(g, joined);
  CHECK(a.k_in() == doctest::Approx(d.k_in));
  CHECK(a.k_out() == doctest::Approx(d.k_out));
  CHECK(a.nodes_sorted());
}

TEST_SUITE("oracle") {
  TEST_CASE("incremental degrees match from-scratch recomputation over random steps") {
    std::mt19937_64 rng(2024);
    std::size_t steps = 0;
    for (int graph_index = 0; graph_index < 10; ++graph_index) {
      std::uniform_int_distribution<std::size_t> size_dist(5, 50);
      const std::size_t n = size_dist(rng);
      const Graph g = test::random_graph(rng, n, 0.15, graph_index % 2 == 0);
      std::uniform_int_distribution<NodeId> node(0, static_cast<NodeId>(n - 1));
      Community c = make(g, {node(rng)});
      for (int step = 0; step < 100; ++step, ++steps) {
        const NodeId v = node(rng);
        if (c.contains(v)) {
          if (c.size() > 1) c.remove_node(g, v);
        } else {
          c.add_node(g, v);
        }
        const auto d = community_degrees(g, c.nodes());
        REQUIRE(c.k_in() == doctest::Approx(d.k_in).epsilon(1e-12));
        REQUIRE(c.k_out() == doctest::Approx(d.k_out).epsilon(1e-12));

        // Boundary and link weights against a direct scan.
        std::vector<NodeId> boundary;
        for (NodeId u = 0; u < n; ++u) {
          if (c.contains(u)) continue;
          double w = 0.0;
          for (const auto& nb : g.adjacency(u)) {
            if (c.contains(nb.node)) w += nb.weight;
          }
          if (w > 0.0) boundary.push_back(u);
          REQUIRE(c.weight_to(u) == doctest::Approx(w).epsilon(1e-12));
        }
        REQUIRE(c.boundary_neighbors() == boundary);
      }
    }
    CHECK(steps == 1000);
  }
}
