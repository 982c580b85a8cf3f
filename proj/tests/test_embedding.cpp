#include <catch2/catch_amalgamated.hpp>

#include "surfcol/embedding.hpp"
#include "test_graphs.hpp"

using namespace surfcol;
namespace tg = testgraphs;

TEST_CASE("triangle embedding basics") {
  Embedding g = tg::triangle();
  REQUIRE(g.order() == 3);
  REQUIRE(g.size() == 3);
  REQUIRE(g.face_count() == 2);
  REQUIRE(g.genus() == 0);
  REQUIRE(g.adjacent(0, 1));
  REQUIRE(g.adjacent(1, 0));
  REQUIRE_FALSE(g.adjacent(0, 0));
  for (int f = 0; f < 2; ++f) {
    REQUIRE(g.face_length(f) == 3);
    REQUIRE(g.face_is_cycle(f));
  }
}

TEST_CASE("single edge has one face of length two") {
  Embedding g = tg::single_edge();
  REQUIRE(g.size() == 1);
  REQUIRE(g.face_count() == 1);
  REQUIRE(g.face_length(0) == 2);
  REQUIRE_FALSE(g.face_is_cycle(0));
  REQUIRE(g.genus() == 0);
}

TEST_CASE("planar K4") {
  Embedding g = tg::k4_plane();
  REQUIRE(g.order() == 4);
  REQUIRE(g.size() == 6);
  REQUIRE(g.face_count() == 4);
  REQUIRE(g.genus() == 0);
  for (int f = 0; f < g.face_count(); ++f) {
    REQUIRE(g.face_length(f) == 3);
    REQUIRE(g.face_is_cycle(f));
  }
}

TEST_CASE("K4 with one reflected rotation lies on the torus") {
  Embedding g = tg::k4_torus();
  REQUIRE(g.face_count() == 2);
  REQUIRE(g.genus() == 1);
  std::vector<int> lens{g.face_length(0), g.face_length(1)};
  std::sort(lens.begin(), lens.end());
  REQUIRE(lens == std::vector<int>{3, 9});
}

TEST_CASE("toroidal grids") {
  Embedding g3 = tg::torus_grid(3, 3);
  REQUIRE(g3.order() == 9);
  REQUIRE(g3.size() == 18);
  REQUIRE(g3.face_count() == 9);
  REQUIRE(g3.genus() == 1);
  for (int f = 0; f < g3.face_count(); ++f) REQUIRE(g3.face_length(f) == 4);

  Embedding g4 = tg::torus_grid(4, 4);
  REQUIRE(g4.order() == 16);
  REQUIRE(g4.size() == 32);
  REQUIRE(g4.face_count() == 16);
  REQUIRE(g4.genus() == 1);
}

TEST_CASE("octahedron and cube") {
  Embedding oct = tg::octahedron();
  REQUIRE(oct.order() == 6);
  REQUIRE(oct.size() == 12);
  REQUIRE(oct.face_count() == 8);
  REQUIRE(oct.genus() == 0);
  for (int f = 0; f < 8; ++f) REQUIRE(oct.face_length(f) == 3);

  Embedding cube = tg::cube();
  REQUIRE(cube.face_count() == 6);
  REQUIRE(cube.genus() == 0);
  for (int f = 0; f < 6; ++f) REQUIRE(cube.face_length(f) == 4);
}

TEST_CASE("bowtie outer walk revisits the cut vertex") {
  Embedding g = tg::bowtie();
  REQUIRE(g.genus() == 0);
  REQUIRE(g.face_count() == 3);
  std::vector<int> lens;
  for (int f = 0; f < 3; ++f) lens.push_back(g.face_length(f));
  std::sort(lens.begin(), lens.end());
  REQUIRE(lens == std::vector<int>{3, 3, 6});
  int big = 0;
  while (g.face_length(big) != 6) ++big;
  REQUIRE_FALSE(g.face_is_cycle(big));
}

TEST_CASE("arc navigation is involutive and face-consistent") {
  Embedding g = tg::octahedron();
  for (int a = 0; a < g.arc_count(); ++a) {
    REQUIRE(g.arc_reverse(g.arc_reverse(a)) == a);
    REQUIRE(g.arc_tail(g.arc_reverse(a)) == g.arc_head(a));
    REQUIRE(g.face_of_arc(g.arc_next_in_face(a)) == g.face_of_arc(a));
  }
  // every arc appears in exactly one face walk
  std::vector<int> hits(g.arc_count(), 0);
  for (int f = 0; f < g.face_count(); ++f)
    for (int a : g.face_arcs(f)) ++hits[a];
  for (int h : hits) REQUIRE(h == 1);
}

TEST_CASE("labels default to indices and can be supplied") {
  Embedding g = Embedding::build({{1, 2}, {2, 0}, {0, 1}}, {10, 20, 30});
  REQUIRE(g.label(0) == 10);
  REQUIRE(g.label(2) == 30);
  Embedding h = tg::triangle();
  REQUIRE(h.label(2) == 2);
}

TEST_CASE("rotation validation rejects malformed inputs") {
  REQUIRE_THROWS_AS(Embedding::build({{1}, {}}), Error);          // dangling
  REQUIRE_THROWS_AS(Embedding::build({{0}}), Error);              // self-loop
  REQUIRE_THROWS_AS(Embedding::build({{1, 1}, {0, 0}}), Error);   // parallel
  REQUIRE_THROWS_AS(Embedding::build({{5}, {0}}), Error);         // range
  REQUIRE_THROWS_AS(
      Embedding::build({{1}, {0}, {3}, {2}}), Error);              // disconnected
  REQUIRE_THROWS_AS(Embedding::build({}), Error);                  // empty
}

TEST_CASE("distance helpers") {
  Embedding g = tg::cycle(6);
  REQUIRE(distance(g, 0, 3) == 3);
  REQUIRE(distance(g, 0, 5) == 1);
  REQUIRE(ball(g, {0}, 1) == std::vector<int>{0, 1, 5});
  REQUIRE(sphere(g, {0}, 2) == std::vector<int>{2, 4});
  REQUIRE(set_distance(g, {0, 1}, {3}) == 2);
  REQUIRE(set_distance(g, {0}, {0, 3}) == 0);
}

TEST_CASE("canonical cycle forms") {
  REQUIRE(canonical_cycle({2, 0, 1}) == Cycle{0, 1, 2});
  REQUIRE(canonical_cycle({2, 1, 0}) == Cycle{0, 1, 2});
  REQUIRE(canonical_cycle({3, 1, 4, 2}) == Cycle{1, 3, 2, 4});
  REQUIRE(canonical_cycle({5, 7, 6}) == Cycle{5, 6, 7});
}

TEST_CASE("subgraph operations") {
  Subgraph a = subgraph_of_cycle({0, 1, 2});
  Subgraph b = subgraph_of_cycle({1, 2, 3});
  Subgraph u = subgraph_union(a, b);
  REQUIRE(u.verts == std::vector<int>{0, 1, 2, 3});
  REQUIRE(u.edges.size() == 5);
  Subgraph i = subgraph_intersection(a, b);
  REQUIRE(i.verts == std::vector<int>{1, 2});
  REQUIRE(i.edges == std::vector<Edge>{Edge(1, 2)});
  REQUIRE(subgraph_contains(u, a));
  REQUIRE_FALSE(subgraph_contains(a, u));
}
