#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flex/generator.hpp"
#include "flex/graph.hpp"
#include "flex/patterns.hpp"
#include "oracles.hpp"

using namespace flex;

TEST_CASE("family parsing") {
  PatternFamily fam = parse_family("K4,C5,C6,C7,B5");
  CHECK(fam.patterns.size() == 5);
  CHECK(fam.str() == "K4,C5,C6,C7,B5");
  CHECK(parse_family("k4, b6").patterns.size() == 2);
  CHECK_THROWS_AS(parse_family("Q3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family(""), std::invalid_argument);
}

TEST_CASE("containment fast paths") {
  CHECK(contains_pattern(complete_graph(4), Pattern::book(4)));
  CHECK_FALSE(contains_pattern(cycle_graph(8), Pattern::cycle(5)));
  CHECK(contains_pattern(cycle_graph(8), Pattern::cycle(8)));
  CHECK(contains_pattern(complete_graph(4), Pattern::clique(4)));
  CHECK_FALSE(contains_pattern(diamond_graph(), Pattern::clique(4)));
  CHECK(contains_pattern(diamond_graph(), Pattern::book(4)));
  CHECK_FALSE(contains_pattern(diamond_graph(), Pattern::book(5)));
}

TEST_CASE("figure-1 chain avoids the forbidden family") {
  Graph g = figure1_chain(5).graph();
  CHECK_FALSE(contains_pattern(g, Pattern::book(5)));
  PatternFamily fam = parse_family("K4,C5,C6,C7,B5");
  CHECK(is_family_free(g, fam));
  CHECK_FALSE(is_family_free(complete_graph(4), fam));
  CHECK(is_family_free(diamond_graph(), fam));
}

TEST_CASE("containment agrees with the brute-force oracle on small graphs") {
  std::vector<Pattern> pats = {Pattern::clique(4), Pattern::cycle(5), Pattern::cycle(6),
                               Pattern::cycle(7), Pattern::book(4), Pattern::book(5)};
  for (int n = 4; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      for (auto& p : pats) {
        bool fast = contains_pattern(g, p);
        bool slow = oracle::brute_subgraph(g, p.realize());
        CAPTURE(n);
        CAPTURE(p.name());
        REQUIRE(fast == slow);
      }
    }
  }
}

TEST_CASE("f-free sets") {
  PatternFamily fam = parse_family("K4,C5,C6,C7,B5");
  Graph dia = diamond_graph();
  // empty set: apex isolated, same as family-freeness
  CHECK(is_f_free_set(dia, {}, fam) == is_family_free(dia, fam));
  // apex over an edge only creates a triangle
  Graph edge = build_graph(2, {{0, 1}});
  CHECK(is_f_free_set(edge, {0, 1}, fam));
  // apex over both diamond middles makes a 3-page book
  CHECK_FALSE(is_f_free_set(dia, {0, 1}, fam));
  PatternFamily big_book = parse_family("K4,C5,C6,C7,B8");
  CHECK(is_f_free_set(dia, {0, 1}, big_book));

  // monotone under removing elements
  Graph p3 = path_graph(3);
  for (auto I : std::vector<std::vector<int>>{{0, 2}, {0}, {2}, {}})
    CHECK(is_f_free_set(p3, I, fam));
}

TEST_CASE("f-free sets shrink monotonically") {
  // removing an element from an F-free set keeps it F-free
  PatternFamily fam = parse_family("K4,C5,C6,C7,B5");
  for (const Graph& g : enumerate_connected_graphs(5)) {
    for (int a = 0; a < g.n(); ++a)
      for (int b = a + 1; b < g.n(); ++b) {
        if (!is_f_free_set(g, {a, b}, fam)) continue;
        CHECK(is_f_free_set(g, {a}, fam));
        CHECK(is_f_free_set(g, {b}, fam));
      }
  }
}

TEST_CASE("monotone under edge removal") {
  Graph g = figure1_chain(5).graph();
  PatternFamily fam = parse_family("K4,C5,C6,C7,B5");
  REQUIRE(is_family_free(g, fam));
  auto edges = g.edges();
  edges.pop_back();
  CHECK(is_family_free(Graph(g.n(), edges), fam));
}
