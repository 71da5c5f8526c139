#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "flex/generator.hpp"
#include "flex/graph.hpp"
#include "flex/json_io.hpp"

using namespace flex;

TEST_CASE("build_graph basics") {
  Graph tri = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(tri.edge_count() == 3);
  for (int v = 0; v < 3; ++v) CHECK(tri.degree(v) == 2);

  Graph dia = diamond_graph();
  CHECK(dia.degree(0) == 3);
  CHECK(dia.degree(1) == 3);
  CHECK(dia.degree(2) == 2);
  CHECK(dia.degree(3) == 2);

  CHECK_THROWS_AS(build_graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("degree sum equals twice the edge count") {
  for (const Graph& g : {complete_graph(5), cycle_graph(7), diamond_graph()}) {
    int sum = 0;
    for (int v = 0; v < g.n(); ++v) sum += g.degree(v);
    CHECK(sum == 2 * g.edge_count());
  }
}

TEST_CASE("figure-1 chain degrees") {
  PlaneGraph pg = figure1_chain(5);
  const Graph& g = pg.graph();
  CHECK(g.n() == 16);
  CHECK(g.edge_count() == 26);
  for (int v = 0; v < g.n(); ++v) {
    CHECK(g.degree(v) >= 3);
    CHECK(g.degree(v) <= 4);
  }
}

TEST_CASE("face tracing on cycles and K4") {
  FaceList fl = trace_faces(plane_cycle(5));
  REQUIRE(fl.faces.size() == 2);
  CHECK(fl.faces[0].length() == 5);
  CHECK(fl.faces[1].length() == 5);

  FaceList k4 = trace_faces(plane_k4());
  REQUIRE(k4.faces.size() == 4);
  for (auto& f : k4.faces) CHECK(f.length() == 3);

  CHECK(plane_cycle(8).euler_ok());
  CHECK(plane_k4().euler_ok());
}

TEST_CASE("face tracing covers every directed edge once") {
  for (int t : {5, 6}) {
    PlaneGraph pg = figure1_chain(t);
    FaceList fl = trace_faces(pg);
    CHECK(fl.total_length() == 2 * pg.graph().edge_count());
    CHECK((int)fl.faces.size() == 2 * t + 2);
    int tri = 0, big = 0;
    for (auto& f : fl.faces) {
      if (f.length() == 3) ++tri;
      if (f.length() == 2 * t + 1) ++big;
    }
    CHECK(tri == 2 * t);
    CHECK(big == 2);
    CHECK(pg.euler_ok());
  }
}

TEST_CASE("induced subgraphs") {
  Graph dia = diamond_graph();
  Graph mid = dia.induced({0, 1});
  CHECK(mid.n() == 2);
  CHECK(mid.edge_count() == 1);

  Graph k4 = complete_graph(4);
  CHECK(k4.induced({0, 2, 3}).edge_count() == 3);

  // whole-vertex-set induction is the identity
  PlaneGraph chain = figure1_chain(5);
  std::vector<int> all(chain.graph().n());
  std::iota(all.begin(), all.end(), 0);
  CHECK(chain.graph().induced(all) == chain.graph());

  // first block of the chain is a diamond: s0, s1, a0, b0
  Graph block = chain.graph().induced({0, 1, 6, 7});
  CHECK(block.n() == 4);
  CHECK(block.edge_count() == 5);

  CHECK_THROWS_AS(dia.induced({0, 9}), std::invalid_argument);
}

TEST_CASE("rotation validation") {
  Graph g = cycle_graph(4);
  std::vector<std::vector<int>> bad(4);
  CHECK_THROWS_AS(PlaneGraph(g, bad), std::invalid_argument);
}

TEST_CASE("graph json round trip") {
  PlaneGraph pg = figure1_chain(5);
  json j = plane_graph_to_json(pg);
  PlaneGraph back = plane_graph_from_json(j);
  CHECK(back.graph() == pg.graph());
  CHECK(back.rotation() == pg.rotation());
  CHECK(trace_faces(back).faces.size() == trace_faces(pg).faces.size());
}

TEST_CASE("blocks of a diamond and a tree") {
  auto bl = blocks(diamond_graph());
  REQUIRE(bl.size() == 1);
  CHECK(bl[0].size() == 4);

  auto pt = blocks(path_graph(4));
  CHECK(pt.size() == 3);  // every edge its own block
}
