#include "geodesy/multigraph.hpp"

#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace geodesy;

TEST_CASE("edge list parsing") {
  MultiGraph g = MultiGraph::parse_edge_list("a b 2\nb c 1");
  CHECK(g.num_vertices() == 3);
  REQUIRE(g.edges().size() == 2);
  CHECK(g.edges()[0].mult == 2);
  CHECK(g.edges()[1].mult == 1);
  CHECK(g.name(g.edges()[0].u) == "a");
  CHECK(g.name(g.edges()[0].v) == "b");

  SUBCASE("repeated pairs merge") {
    MultiGraph m = MultiGraph::parse_edge_list("a b 1\na b 1");
    REQUIRE(m.edges().size() == 1);
    CHECK(m.edges()[0].mult == 2);
  }
  SUBCASE("default multiplicity, comments, blank lines") {
    MultiGraph m = MultiGraph::parse_edge_list("# header\n\na b # trailing\n b a 2\n");
    REQUIRE(m.edges().size() == 1);
    CHECK(m.edges()[0].mult == 3);
  }
  SUBCASE("self-loop rejected") {
    CHECK_THROWS_AS(MultiGraph::parse_edge_list("a a 1"), ParseError);
  }
  SUBCASE("non-positive multiplicity rejected") {
    CHECK_THROWS_AS(MultiGraph::parse_edge_list("a b 0"), ParseError);
    CHECK_THROWS_AS(MultiGraph::parse_edge_list("a b -2"), ParseError);
  }
  SUBCASE("malformed line carries its number") {
    try {
      MultiGraph::parse_edge_list("a b 1\na b c d\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
  }
}

TEST_CASE("json parsing") {
  MultiGraph g = MultiGraph::parse_json(
      R"({"vertices": ["a", "b", "z"], "edges": [{"u": "a", "v": "b", "mult": 2}, {"u": "b", "v": "c"}]})");
  CHECK(g.num_vertices() == 4);  // c implied, z isolated
  CHECK(g.degree(g.index_of("z")) == 0);
  CHECK(g.degree(g.index_of("b")) == 3);
  CHECK_THROWS_AS(MultiGraph::parse_json("{"), ParseError);
  CHECK_THROWS_AS(
      MultiGraph::parse_json(R"({"edges": [{"u": "a", "v": "a"}]})"), ParseError);
}

TEST_CASE("degrees") {
  MultiGraph bundle = MultiGraph::from_edges({{"x", "y", 5}});
  CHECK(bundle.max_degree() == 5);
  CHECK(MultiGraph().max_degree() == 0);

  // 4-cycle with alternating multiplicities 1, 2
  MultiGraph c43 = MultiGraph::parse_edge_list("v0 v1 1\nv1 v2 2\nv2 v3 1\nv3 v0 2");
  CHECK(c43.max_degree() == 3);
  for (int v = 0; v < c43.num_vertices(); ++v) CHECK(c43.degree(v) == 3);
  CHECK_FALSE(c43.is_simple());
}

TEST_CASE("girth") {
  CHECK(MultiGraph::parse_edge_list("a b\nb c\nc d\nd a").girth() == 4);
  CHECK(MultiGraph::parse_edge_list("a b 2").girth() == 2);
  CHECK(MultiGraph::parse_edge_list("a b\nb c\nc d").girth() == std::nullopt);
  CHECK(MultiGraph::parse_edge_list("a b\nb c\nc a\nc d\nd e\ne f\nf c").girth() == 3);
  // two squares sharing an edge: still 4
  CHECK(MultiGraph::parse_edge_list("a b\nb c\nc d\nd a\nb e\ne f\nf c").girth() == 4);
}

TEST_CASE("serialization round trips") {
  std::mt19937_64 rng(20240811);
  for (int i = 0; i < 60; ++i) {
    MultiGraph g = testsupport::random_multigraph(rng);
    CHECK(MultiGraph::parse_json(g.to_json()) == g);

    bool isolated = false;
    for (int v = 0; v < g.num_vertices(); ++v)
      if (g.degree(v) == 0) isolated = true;
    if (!isolated && g.num_vertices() > 0 && !g.edges().empty())
      CHECK(MultiGraph::parse_edge_list(g.to_edge_list()) == g);

    // handshake: sum of degrees is twice the multiplicity mass
    mpz_class deg_sum = 0, mult_sum = 0;
    for (int v = 0; v < g.num_vertices(); ++v) deg_sum += g.degree(v);
    for (const auto& e : g.edges()) mult_sum += e.mult;
    CHECK(deg_sum == 2 * mult_sum);

    // a 2-cycle exists exactly when some bundle has mult >= 2
    bool has_parallel = false;
    for (const auto& e : g.edges())
      if (e.mult >= 2) has_parallel = true;
    CHECK((g.girth() == 2) == has_parallel);
  }
}

TEST_CASE("weighted parsing") {
  WeightedGraph w = WeightedGraph::parse_edge_list("a b 0.25\nb c 1/3\nc d 1");
  REQUIRE(w.edges().size() == 3);
  CHECK(w.edges()[0].weight == mpq_class(1, 4));
  CHECK(w.edges()[1].weight == mpq_class(1, 3));
  CHECK(w.edges()[2].weight == 1);
  CHECK_THROWS_AS(WeightedGraph::parse_edge_list("a a 0.5"), ParseError);
  CHECK_THROWS_AS(WeightedGraph::parse_edge_list("a b x"), ParseError);
  CHECK(parse_rational("0.375") == mpq_class(3, 8));
}
