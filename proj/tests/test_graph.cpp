#include <doctest.h>

#include <sstream>

#include "support.hpp"

using namespace lfkmsd;
using lfkmsd::test::parse;

TEST_CASE("two-edge path parses with unit weights") {
  const Graph g = parse("1 2\n2 3\n");
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 2);
  const NodeId two = g.id_of(2);
  CHECK(g.degree(two) == 2);
  CHECK(g.weighted_degree(two) == 2.0);
  for (NodeId v = 0; v < 3; ++v) {
    for (const auto& nb : g.neighbors(v)) CHECK(nb.weight == 1.0);
  }
}

TEST_CASE("duplicate edges sum their weights") {
  ParseReport report;
  std::istringstream in("1 2 0.5\n1 2 0.5\n");
  const Graph g = parse_edge_list(in, &report);
  REQUIRE(g.edge_count() == 1);
  CHECK(g.neighbors(0)[0].weight == 1.0);
  CHECK(report.duplicates_merged == 1);
  CHECK(report.edges_read == 2);
}

TEST_CASE("self-loop is dropped but its node kept") {
  ParseReport report;
  std::istringstream in("1 1\n");
  const Graph g = parse_edge_list(in, &report);
  CHECK(g.node_count() == 1);
  CHECK(g.edge_count() == 0);
  CHECK(report.self_loops_dropped == 1);
}

TEST_CASE("directed input is symmetrized") {
  const Graph g = parse("5 7 2\n7 5 1\n");
  REQUIRE(g.edge_count() == 1);
  CHECK(g.neighbors(0)[0].weight == 3.0);
  CHECK(g.neighbors(1)[0].weight == 3.0);
  CHECK(g.total_weight() == 3.0);
}

TEST_CASE("comments, blank lines and tabs are accepted") {
  const Graph g = parse("# header\n\n10\t20\n  20 30 1.5  \n# tail\n");
  CHECK(g.node_count() == 3);
  CHECK(g.labels()[0] == 10);
  CHECK(g.labels()[2] == 30);
  CHECK(g.weighted_degree(g.id_of(20)) == doctest::Approx(2.5));
}

TEST_CASE("malformed lines raise parse errors with line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      (void)parse(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("1 2\nx 3\n") == 2);
  CHECK(line_of("1 2\n2 3 -1\n") == 2);
  CHECK(line_of("1 2 abc\n") == 1);
  CHECK(line_of("1\n") == 1);
  CHECK(line_of("1 2 3 4\n") == 1);
  CHECK(line_of("1 -2\n") == 1);
  CHECK(line_of("1 2 nan\n") == 1);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("# only a comment\n"), ParseError);
}

TEST_CASE("neighbors of path, isolated node and weighted triangle") {
  const Graph p = test::path(3);
  const auto mid = p.neighbors(1);
  REQUIRE(mid.size() == 2);
  CHECK(mid[0] == Neighbor{0, 1.0});
  CHECK(mid[1] == Neighbor{2, 1.0});

  const Graph iso = Graph::from_edges(2, std::vector<WeightedEdge>{});
  CHECK(iso.neighbors(1).empty());

  // a=0, b=1, c=2 with ab:2, ac:3, bc:1.
  const Graph tri = Graph::from_edges(3, std::vector<WeightedEdge>{{0, 1, 2.0}, {0, 2, 3.0}, {1, 2, 1.0}});
  const auto a = tri.neighbors(0);
  REQUIRE(a.size() == 2);
  CHECK(a[0] == Neighbor{1, 2.0});
  CHECK(a[1] == Neighbor{2, 3.0});
  CHECK(tri.weighted_degree(0) == 5.0);
}

TEST_CASE("invalid ids and labels are rejected") {
  const Graph g = test::path(3);
  CHECK_THROWS_AS((void)g.neighbors(3), InvalidArgument);
  CHECK_THROWS_AS((void)g.id_of(99), InvalidArgument);
  CHECK_FALSE(g.has_label(99));
  CHECK(g.has_label(2));
  CHECK_THROWS_AS(Graph::from_edges(2, std::vector<WeightedEdge>{{0, 5, 1.0}}), InvalidArgument);
  CHECK_THROWS_AS(Graph::from_edges(2, std::vector<WeightedEdge>{{0, 1, -1.0}}), InvalidArgument);
  CHECK_THROWS_AS(Graph::from_edges(std::vector<NodeLabel>{3, 1}, std::vector<WeightedEdge>{}),
                  InvalidArgument);
}

TEST_CASE("edge list round trip preserves the graph") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = test::random_graph(rng, 15, 0.2, trial % 2 == 1);
    std::ostringstream out;
    write_edge_list(g, out);
    const Graph back = parse(out.str());
    REQUIRE(back.node_count() == g.node_count());
    CHECK(back.edge_count() == g.edge_count());
    for (NodeId v = 0; v < g.node_count(); ++v) {
      const auto a = g.adjacency(v);
      const auto b = back.adjacency(v);
      REQUIRE(a.size() == b.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].node == b[i].node);
        CHECK(a[i].weight == doctest::Approx(b[i].weight));
      }
    }
  }
}

TEST_CASE("adjacency is sorted and symmetric") {
  std::mt19937_64 rng(5);
  const Graph g = test::random_graph(rng, 40, 0.15, true);
  double total = 0.0;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const auto adj = g.adjacency(u);
    double sum = 0.0;
    for (std::size_t i = 0; i < adj.size(); ++i) {
      if (i > 0) CHECK(adj[i - 1].node < adj[i].node);
      CHECK(adj[i].node != u);
      sum += adj[i].weight;
      const auto back = g.adjacency(adj[i].node);
      const auto it = std::find_if(back.begin(), back.end(), [&](const Neighbor& n) { return n.node == u; });
      REQUIRE(it != back.end());
      CHECK(it->weight == adj[i].weight);
    }
    CHECK(sum == doctest::Approx(g.weighted_degree(u)));
    total += sum;
  }
  CHECK(total / 2.0 == doctest::Approx(g.total_weight()));
}
