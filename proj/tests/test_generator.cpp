#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flex/choosability.hpp"
#include "flex/generator.hpp"
#include "flex/graph.hpp"
#include "flex/patterns.hpp"
#include "oracles.hpp"

using namespace flex;

TEST_CASE("chain counts and structure") {
  for (int t : {5, 7}) {
    PlaneGraph pg = figure1_chain(t);
    const Graph& g = pg.graph();
    CHECK(g.n() == 3 * t + 1);
    CHECK(g.edge_count() == 5 * t + 1);
    CHECK(g.connected());
    CHECK(pg.euler_ok());
    // girth 3, no cycle length in [5, 2t]
    CHECK(contains_pattern(g, Pattern::cycle(3)));
    for (int len = 5; len <= 2 * t; ++len)
      CHECK_FALSE(contains_pattern(g, Pattern::cycle(len)));
    CHECK(contains_pattern(g, Pattern::cycle(2 * t + 1)));
  }
  CHECK_THROWS_AS(figure1_chain(4), std::invalid_argument);
}

TEST_CASE("chain is family-free and not 3-colorable") {
  Graph g = figure1_chain(5).graph();
  CHECK(is_family_free(g, parse_family("K4,C5,C6,C7,B5")));
  ListAssignment three;
  three.palette = 3;
  three.lists.assign(g.n(), 0b111);
  CHECK_FALSE(color_with_lists(g, three).has_value());
}

TEST_CASE("random free plane graphs revalidate") {
  PatternFamily fam = parse_family("K4,C5,C6,C7,B5");
  for (int seed : {1, 2, 42}) {
    PlaneGraph pg = random_free_plane_graph(10, fam, seed);
    CHECK(pg.graph().n() == 10);
    CHECK(pg.graph().connected());
    CHECK(pg.euler_ok());
    CHECK(is_family_free(pg.graph(), fam));
    // deterministic per seed
    PlaneGraph again = random_free_plane_graph(10, fam, seed);
    CHECK(again.graph() == pg.graph());
    CHECK(again.rotation() == pg.rotation());
  }
  // generation adds edges beyond the spanning tree
  PlaneGraph dense = random_free_plane_graph(12, fam, 7);
  CHECK(dense.graph().edge_count() > 11);
}

TEST_CASE("connected graph enumeration counts") {
  CHECK(enumerate_connected_graphs(1).size() == 1);
  CHECK(enumerate_connected_graphs(2).size() == 1);
  CHECK(enumerate_connected_graphs(3).size() == 2);
  CHECK(enumerate_connected_graphs(4).size() == 6);
  CHECK(enumerate_connected_graphs(5).size() == 21);
  CHECK(enumerate_connected_graphs(6).size() == 112);
  CHECK_THROWS_AS(enumerate_connected_graphs(8), std::invalid_argument);
}

TEST_CASE("enumeration agrees with the direct mask scan") {
  for (int n = 3; n <= 5; ++n)
    CHECK((long long)enumerate_connected_graphs(n).size() ==
          oracle::count_connected_graphs_direct(n));
}

TEST_CASE("enumerated graphs are pairwise non-isomorphic") {
  // distinct degree/triangle signatures dominate; for equal signatures fall
  // back to the brute-force subgraph check in both directions
  auto gs = enumerate_connected_graphs(5);
  for (size_t i = 0; i < gs.size(); ++i)
    for (size_t j = i + 1; j < gs.size(); ++j) {
      if (gs[i].edge_count() != gs[j].edge_count()) continue;
      bool iso = gs[i].n() == gs[j].n() &&
                 oracle::brute_subgraph(gs[i], gs[j]) &&
                 oracle::brute_subgraph(gs[j], gs[i]);
      CHECK_FALSE(iso);
    }
}
