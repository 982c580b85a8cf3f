#include <catch2/catch_amalgamated.hpp>

#include "surfcol/topology.hpp"
#include "test_graphs.hpp"

using namespace surfcol;
namespace tg = testgraphs;

namespace {

// Independent width oracle: direct bounded enumeration. Returns the
// least length of a noncontractible cycle of length <= cap.
int oracle_width(const Embedding& g, int cap, int vertex_budget) {
  EnumLimits lim;
  lim.max_len = cap;
  lim.vertex_budget = vertex_budget;
  int best = kUnbounded;
  for (const Cycle& c : all_simple_cycles(g, cap, lim))
    if (!is_contractible(g, c))
      best = std::min(best, static_cast<int>(c.size()));
  return best;
}

void check_width_against_oracle(const Embedding& g, int expected) {
  int w = edge_width(g);
  REQUIRE(w == expected);
  // the oracle inspects every cycle up to that length
  REQUIRE(oracle_width(g, w, g.order()) == w);
  if (w > 3) REQUIRE(oracle_width(g, w - 1, g.order()) == kUnbounded);
}

}  // namespace

TEST_CASE("contractibility on the sphere: always") {
  Embedding oct = tg::octahedron();
  EnumLimits lim;
  for (const Cycle& c : all_simple_cycles(oct, 6, lim))
    REQUIRE(is_contractible(oct, c));
}

TEST_CASE("contractibility on the torus grid") {
  Embedding g = tg::torus_grid(3, 3);
  REQUIRE(is_contractible(g, {0, 1, 4, 3}));        // facial quad
  REQUIRE(is_contractible(g, {0, 1, 2, 5, 4, 3}));  // two faces
  REQUIRE_FALSE(is_contractible(g, {0, 1, 2}));     // row, winds around
  REQUIRE_FALSE(is_contractible(g, {0, 3, 6}));     // column
  REQUIRE_FALSE(is_separating(g, {0, 1, 2}));
  REQUIRE_FALSE(is_separating(g, {0, 1, 4, 3}));    // side has no vertex
}

TEST_CASE("separating cycles of the octahedron") {
  Embedding g = tg::octahedron();
  auto seps = separating_cycles(g, 4);
  std::vector<Cycle> expect{{0, 1, 2, 3}, {0, 4, 2, 5}, {1, 4, 3, 5}};
  REQUIRE(seps == expect);
  // facial triangles are contractible but have an empty side
  REQUIRE(is_contractible(g, {0, 1, 4}));
  REQUIRE_FALSE(is_separating(g, {0, 1, 4}));
  // a non-equatorial quad also has an empty side
  REQUIRE(is_contractible(g, {0, 1, 2, 4}));
  REQUIRE_FALSE(is_separating(g, {0, 1, 2, 4}));
  REQUIRE_FALSE(is_short_inseparable(g));
}

TEST_CASE("cube is short-inseparable") {
  Embedding g = tg::cube();
  REQUIRE(separating_cycles(g, 4).empty());
  REQUIRE(edge_width(g) == kUnbounded);
  REQUIRE(is_short_inseparable(g));
}

TEST_CASE("enumeration budget guards") {
  Embedding g = tg::torus_grid(5, 5);
  REQUIRE_THROWS_AS(all_simple_cycles(g, 4), BudgetError);  // 25 > 24 vertices
  Embedding h = tg::cube();
  REQUIRE_THROWS_AS(all_simple_cycles(h, 7), BudgetError);  // 7 > 6 length cap
}

TEST_CASE("edge width matches the enumeration oracle") {
  check_width_against_oracle(tg::torus_grid(3, 3), 3);
  check_width_against_oracle(tg::torus_grid(4, 4), 4);
  check_width_against_oracle(tg::k4_torus(), 3);
  REQUIRE(edge_width(tg::k4_plane()) == kUnbounded);
  REQUIRE(edge_width(tg::cube()) == kUnbounded);
}

TEST_CASE("edge width of a wider torus grid") {
  Embedding g = tg::torus_grid(5, 5);
  REQUIRE(edge_width(g) == 5);
  REQUIRE(oracle_width(g, 5, 25) == 5);
  REQUIRE(oracle_width(g, 4, 25) == kUnbounded);
  REQUIRE(is_short_inseparable(g));
}

TEST_CASE("radial construction preserves the surface") {
  Embedding g = tg::torus_grid(3, 3);
  RadialEmbedding r = radial_embedding(g);
  REQUIRE(r.emb.genus() == 1);
  REQUIRE(r.emb.order() == 9 + 9 + 36);
  REQUIRE(r.emb.size() == 4 * 18);

  Embedding oct = tg::octahedron();
  RadialEmbedding ro = radial_embedding(oct);
  REQUIRE(ro.emb.genus() == 0);
  REQUIRE(ro.emb.order() == 6 + 8 + 48 / 2);
  REQUIRE(ro.emb.face_count() == 12);  // one face per host edge
}

TEST_CASE("face width on tori and spheres") {
  REQUIRE(face_width(tg::k4_plane()) == kUnbounded);
  REQUIRE(face_width(tg::torus_grid(3, 3)) == 3);
  REQUIRE(face_width(tg::torus_grid(4, 4)) == 4);
  int fw_k4 = face_width(tg::k4_torus());
  REQUIRE(fw_k4 <= edge_width(tg::k4_torus()));
  // cross-check on the radial surface itself
  RadialEmbedding r = radial_embedding(tg::k4_torus());
  REQUIRE(oracle_width(r.emb, 4 * fw_k4, r.emb.order()) == 4 * fw_k4);
}

TEST_CASE("face width against radial enumeration oracle") {
  Embedding g = tg::torus_grid(3, 3);
  RadialEmbedding r = radial_embedding(g);
  REQUIRE(oracle_width(r.emb, 12, r.emb.order()) == 12);
  REQUIRE(oracle_width(r.emb, 11, r.emb.order()) == kUnbounded);
}

TEST_CASE("natural partition along the octahedron equator") {
  Embedding g = tg::octahedron();
  auto [a, b] = natural_partition(g, {0, 1, 2, 3});
  REQUIRE(subgraph_union(a, b) == g.whole_graph());
  REQUIRE(subgraph_intersection(a, b) == subgraph_of_cycle({0, 1, 2, 3}));
  std::vector<int> top{0, 1, 2, 3, 4}, bottom{0, 1, 2, 3, 5};
  bool order1 = a.verts == top && b.verts == bottom;
  bool order2 = a.verts == bottom && b.verts == top;
  REQUIRE((order1 || order2));
  REQUIRE(a.edges.size() == 8);
  REQUIRE(b.edges.size() == 8);
}

TEST_CASE("natural partition rejects bad cycles") {
  Embedding t = tg::torus_grid(3, 3);
  REQUIRE_THROWS_AS(natural_partition(t, {0, 1, 2}), HypothesisError);
  Embedding k = tg::k4_plane();
  auto [a, b] = natural_partition(k, {0, 1, 2});  // facial: one side trivial
  REQUIRE(subgraph_union(a, b) == k.whole_graph());
  bool trivial_a = a == subgraph_of_cycle({0, 1, 2});
  bool trivial_b = b == subgraph_of_cycle({0, 1, 2});
  REQUIRE((trivial_a || trivial_b));
}

TEST_CASE("chord partition of a hexagon") {
  Embedding g = tg::hexagon_chord();
  Cycle hexagon{0, 1, 2, 3, 4, 5};
  GeneralizedChord q{{0, 3}};
  auto [a, b] = natural_chord_partition(g, hexagon, q);
  Subgraph left, right;
  left.verts = {0, 1, 2, 3};
  left.edges = {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(0, 3)};
  left.normalize();
  right.verts = {0, 3, 4, 5};
  right.edges = {Edge(3, 4), Edge(4, 5), Edge(0, 5), Edge(0, 3)};
  right.normalize();
  bool o1 = a == left && b == right;
  bool o2 = a == right && b == left;
  REQUIRE((o1 || o2));
}

TEST_CASE("chord partition through a middle vertex") {
  Embedding g = tg::hexagon_two_chord();
  Cycle hexagon{0, 1, 2, 3, 4, 5};
  GeneralizedChord q{{0, 6, 3}};
  auto [a, b] = natural_chord_partition(g, hexagon, q);
  REQUIRE(subgraph_intersection(a, b).verts == std::vector<int>{0, 3, 6});
  REQUIRE(subgraph_union(a, b) == g.whole_graph());
  REQUIRE(a.verts.size() == 5);
  REQUIRE(b.verts.size() == 5);
}

TEST_CASE("chord partition with an improper chord") {
  Embedding g = tg::bowtie();
  GeneralizedChord q{{0, 3, 4, 0}};
  auto [a, b] = natural_chord_partition(g, {0, 1, 2}, q);
  Subgraph tri = subgraph_of_cycle({0, 3, 4});
  bool o1 = a == g.whole_graph() && b == tri;
  bool o2 = b == g.whole_graph() && a == tri;
  REQUIRE((o1 || o2));
}

TEST_CASE("chord partition input validation") {
  Embedding g = tg::hexagon_chord();
  Cycle hexagon{0, 1, 2, 3, 4, 5};
  REQUIRE_THROWS_AS(
      natural_chord_partition(g, hexagon, GeneralizedChord{{0, 1}}),
      HypothesisError);  // a C edge is not a chord
  REQUIRE_THROWS_AS(
      natural_chord_partition(g, hexagon, GeneralizedChord{{0, 4}}),
      HypothesisError);  // not an edge at all
  REQUIRE_THROWS_AS(
      natural_chord_partition(g, {0, 1, 2, 3}, GeneralizedChord{{0, 3}}),
      HypothesisError);  // C not facial
}

TEST_CASE("k-chord enumeration") {
  Subgraph hex = subgraph_of_cycle({0, 1, 2, 3, 4, 5});
  SECTION("one-chords") {
    auto ch = k_chords(tg::hexagon_chord(), hex, 1);
    REQUIRE(ch == std::vector<std::vector<int>>{{0, 3}});
    REQUIRE(k_chords(tg::cycle(6), hex, 1).empty());
  }
  SECTION("two-chords") {
    auto ch = k_chords(tg::hexagon_two_chord(), hex, 2);
    REQUIRE(ch == std::vector<std::vector<int>>{{0, 6, 3}});
  }
  SECTION("hub two-chords of a wheel") {
    Embedding w = tg::wheel(5);
    Subgraph rim = subgraph_of_cycle({0, 1, 2, 3, 4});
    auto ch = k_chords(w, rim, 2);
    REQUIRE(ch.size() == 10);  // one per rim pair, through the hub
    for (const auto& p : ch) {
      REQUIRE(p.size() == 3);
      REQUIRE(p[1] == 5);
      REQUIRE(p[0] < p[2]);
    }
  }
  SECTION("improper chords") {
    Subgraph tri = subgraph_of_cycle({0, 1, 2});
    auto ch = k_chords(tg::bowtie(), tri, 3, ChordKind::Improper);
    REQUIRE(ch == std::vector<std::vector<int>>{{0, 3, 4, 0}});
    REQUIRE(k_chords(tg::bowtie(), tri, 3, ChordKind::Proper).empty());
  }
}

TEST_CASE("cycle hop distance") {
  Cycle c{0, 1, 2, 3, 4, 5};
  REQUIRE(cycle_hop_distance(c, 0, 3) == 3);
  REQUIRE(cycle_hop_distance(c, 0, 5) == 1);
  REQUIRE(cycle_hop_distance(c, 2, 2) == 0);
  REQUIRE_THROWS_AS(cycle_hop_distance(c, 0, 9), HypothesisError);
}

TEST_CASE("adding a chord inside a face") {
  Embedding g = tg::cycle(6);
  Embedding h = add_edge_in_face(g, 0, 0, 3);
  REQUIRE(h.size() == 7);
  REQUIRE(h.face_count() == 3);
  REQUIRE(h.genus() == 0);
  REQUIRE(h.adjacent(0, 3));
  // crossing chord cannot be added in either face of h
  for (int f = 0; f < h.face_count(); ++f) {
    bool has1 = false, has4 = false;
    for (int v : h.face_vertices(f)) {
      has1 |= v == 1;
      has4 |= v == 4;
    }
    if (!(has1 && has4))
      REQUIRE_THROWS_AS(add_edge_in_face(h, f, 1, 4), HypothesisError);
  }
  REQUIRE_THROWS_AS(add_edge_in_face(h, 0, 0, 3), HypothesisError);  // exists
}

TEST_CASE("extracting a side of a separating cycle") {
  Embedding g = tg::octahedron();
  int topface = g.face_of_arc(g.arc(0, 4));  // a face incident to the pole
  ExtractedSide side = extract_cycle_side(g, {0, 1, 2, 3}, topface);
  REQUIRE(side.emb.order() == 5);
  REQUIRE(side.emb.size() == 8);
  REQUIRE(side.emb.genus() == 0);
  REQUIRE(side.emb.face_length(side.outer_face) == 4);
  REQUIRE(side.emb.face_is_cycle(side.outer_face));
  // boundary maps back to the equator
  for (size_t i = 0; i < side.boundary.size(); ++i)
    REQUIRE(side.to_host[side.boundary[i]] == static_cast<int>(i));
  // the pole is inside
  REQUIRE(side.from_host[4] >= 0);
  REQUIRE(side.from_host[5] < 0);
}

TEST_CASE("extracting a trivial side gives the cycle itself") {
  Embedding g = tg::torus_grid(4, 4);
  Cycle quad{0, 1, 5, 4};
  int f = find_face_of_cycle(g, quad);
  REQUIRE(f >= 0);
  ExtractedSide side = extract_cycle_side(g, quad, f);
  REQUIRE(side.emb.order() == 4);
  REQUIRE(side.emb.size() == 4);
  REQUIRE(side.emb.genus() == 0);
  REQUIRE_THROWS_AS(extract_cycle_side(g, {0, 1, 2, 3}, 0), HypothesisError);
}

TEST_CASE("induced sub-embeddings") {
  Embedding g = tg::octahedron();
  SubEmbedding w = extract_induced(g, {0, 1, 2, 3, 4});
  REQUIRE(w.emb.order() == 5);
  REQUIRE(w.emb.size() == 8);
  REQUIRE(w.emb.genus() == 0);
  REQUIRE(w.to_host == std::vector<int>{0, 1, 2, 3, 4});
  REQUIRE_THROWS_AS(extract_induced(g, {4, 5}), Error);  // disconnected poles

  SubEmbedding c = extract_edge_subembedding(
      g, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(0, 3)});
  REQUIRE(c.emb.order() == 4);
  REQUIRE(c.emb.size() == 4);
}

TEST_CASE("induced component splitting") {
  Embedding g = tg::bowtie();
  auto comps = induced_components(g, {1, 2, 3, 4});
  REQUIRE(comps ==
          std::vector<std::vector<int>>{{1, 2}, {3, 4}});
  auto one = induced_components(g, {0, 1, 2});
  REQUIRE(one.size() == 1);
}

TEST_CASE("block decomposition") {
  Embedding bow = tg::bowtie();
  BlockDecomposition b = blocks(bow);
  REQUIRE(b.blocks.size() == 2);
  REQUIRE(b.cut_vertices == std::vector<int>{0});
  REQUIRE_FALSE(is_biconnected(bow));

  REQUIRE(is_biconnected(tg::cube()));
  REQUIRE(is_biconnected(tg::octahedron()));

  Embedding p = tg::path3();
  BlockDecomposition pb = blocks(p);
  REQUIRE(pb.blocks.size() == 2);
  REQUIRE(pb.cut_vertices == std::vector<int>{1});
}
