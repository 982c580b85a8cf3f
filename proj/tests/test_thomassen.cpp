#include "surfcol/thomassen.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "test_graphs.hpp"

using namespace surfcol;

namespace {

// Independent validator: total, proper, inside the lists.
void check_total(const Embedding& g, const ListAssignment& L,
                 const PartialColoring& phi) {
  REQUIRE(phi.size() == static_cast<size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    REQUIRE(phi.has(v));
    REQUIRE(colorset_has(L.at(v), phi.at(v)));
    for (int u : g.rotation(v)) REQUIRE(phi.at(u) != phi.at(v));
  }
}

struct Lcg {
  std::uint64_t s;
  explicit Lcg(std::uint64_t seed) : s(seed) {}
  std::uint32_t next() {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<std::uint32_t>(s >> 33);
  }
  int below(int n) { return static_cast<int>(next() % n); }
};

ColorSet random_kset(Lcg& rng, int k, int ncolors) {
  ColorSet s = 0;
  while (colorset_size(s) < k) s |= ColorSet{1} << rng.below(ncolors);
  return s;
}

int outer_face_of_cycle(const Embedding& g, const Cycle& c) {
  int f = find_face_of_cycle(g, c);
  REQUIRE(f >= 0);
  return f;
}

}  // namespace

TEST_CASE("triangulate_internal fills faces and keeps the outer one") {
  Embedding g = testgraphs::cycle(6);
  int outer = 0;  // both faces are hexagons; designate face 0 as outer
  auto [tg, tout] = triangulate_internal(g, outer);
  CHECK(tg.order() == 6);
  CHECK(tg.size() == 6 + 3);  // a hexagon needs three chords
  CHECK(tg.genus() == 0);
  CHECK(tg.face_length(tout) == 6);
  for (int f = 0; f < tg.face_count(); ++f)
    if (f != tout) CHECK(tg.face_length(f) == 3);

  // already triangulated inputs pass through untouched
  Embedding oct = testgraphs::octahedron();
  auto [tg2, tout2] = triangulate_internal(oct, 2);
  CHECK(tg2.size() == oct.size());
  CHECK(tout2 == 2);
}

TEST_CASE("thomassen on a bare triangle") {
  Embedding g = testgraphs::triangle();
  ListAssignment L = ListAssignment::from_lists({{1}, {2}, {1, 2, 3}});
  PartialColoring phi = thomassen_extend(g, 0, Edge{0, 1}, L);
  check_total(g, L, phi);
  CHECK(phi.at(0) == 1);
  CHECK(phi.at(1) == 2);
  CHECK(phi.at(2) == 3);
}

TEST_CASE("thomassen precondition failures are reported") {
  Embedding g = testgraphs::wheel(5);
  Cycle rim{0, 1, 2, 3, 4};
  int outer = outer_face_of_cycle(g, rim);

  ListAssignment L(6);
  for (int v = 0; v < 5; ++v) L.sets[v] = colorset_from({0, 1, 2});
  L.sets[5] = colorset_from({0, 1, 2, 3, 4});

  SECTION("valid instance passes") {
    check_total(g, L, thomassen_extend(g, outer, Edge{0, 1}, L));
  }
  SECTION("interior list of four is rejected") {
    L.sets[5] = colorset_from({0, 1, 2, 3});
    CHECK_THROWS_WITH(thomassen_extend(g, outer, Edge{0, 1}, L),
                      Catch::Matchers::ContainsSubstring("interior vertex 5"));
  }
  SECTION("short outer list is rejected") {
    L.sets[3] = colorset_from({0, 1});
    CHECK_THROWS_WITH(thomassen_extend(g, outer, Edge{0, 1}, L),
                      Catch::Matchers::ContainsSubstring("outer vertex 3"));
  }
  SECTION("uncolorable edge is rejected") {
    L.sets[0] = colorset_from({2});
    L.sets[1] = colorset_from({2});
    CHECK_THROWS_WITH(thomassen_extend(g, outer, Edge{0, 1}, L),
                      Catch::Matchers::ContainsSubstring("not list-colorable"));
  }
  SECTION("edge off the outer cycle is rejected") {
    CHECK_THROWS_WITH(thomassen_extend(g, outer, Edge{0, 5}, L),
                      Catch::Matchers::ContainsSubstring("not on the outer"));
  }
  SECTION("bad forced pair is rejected") {
    CHECK_THROWS_AS(thomassen_extend(g, outer, Edge{0, 1}, L,
                                     std::make_pair(0, 0)),
                    HypothesisError);
    CHECK_THROWS_AS(thomassen_extend(g, outer, Edge{0, 1}, L,
                                     std::make_pair(5, 0)),
                    HypothesisError);
  }
  SECTION("nonzero genus is rejected") {
    Embedding t = testgraphs::torus_grid(3, 3);
    ListAssignment Lt = ListAssignment::uniform(9, {0, 1, 2, 3, 4});
    CHECK_THROWS_WITH(thomassen_extend(t, 0, Edge{0, 1}, Lt),
                      Catch::Matchers::ContainsSubstring("genus"));
  }
}

TEST_CASE("thomassen on C5 exhaustively") {
  Embedding g = testgraphs::cycle(5);
  int outer = 0;
  // all singleton pairs on the edge 0-1 and all 3-subsets of {1..6}
  // elsewhere; the recursion must never fail and always validate
  std::vector<std::vector<int>> triples;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b)
      for (int c = b + 1; c <= 6; ++c) triples.push_back({a, b, c});
  REQUIRE(triples.size() == 20);
  long long runs = 0;
  for (int ax = 1; ax <= 6; ++ax)
    for (int by = 1; by <= 6; ++by) {
      if (ax == by) continue;
      for (size_t i = 0; i < triples.size(); ++i)
        for (size_t j = 0; j < triples.size(); ++j)
          for (size_t k = 0; k < triples.size(); ++k) {
            ListAssignment L = ListAssignment::from_lists(
                {{ax}, {by}, triples[i], triples[j], triples[k]});
            PartialColoring phi = thomassen_extend(g, outer, Edge{0, 1}, L);
            check_total(g, L, phi);
            if (runs % 97 == 0) REQUIRE(solve(g, L).has_value());
            ++runs;
          }
    }
  CHECK(runs == 30ll * 20 * 20 * 20);
}

TEST_CASE("thomassen on C5 with full list pairs on the edge") {
  Embedding g = testgraphs::cycle(5);
  Lcg rng(0x1234u);
  for (int trial = 0; trial < 300; ++trial) {
    ListAssignment L(5);
    L.sets[0] = random_kset(rng, 1 + rng.below(3), 6);
    L.sets[1] = random_kset(rng, 1 + rng.below(3), 6);
    for (int v = 2; v < 5; ++v) L.sets[v] = random_kset(rng, 3, 6);
    bool colorable =
        L.sets[0] && L.sets[1] &&
        !(L.sets[0] == L.sets[1] && colorset_size(L.sets[0]) == 1);
    if (!colorable) {
      CHECK_THROWS_AS(thomassen_extend(g, 0, Edge{0, 1}, L), HypothesisError);
      continue;
    }
    check_total(g, L, thomassen_extend(g, 0, Edge{0, 1}, L));
  }
}

TEST_CASE("thomassen on W5 with random rim lists") {
  Embedding g = testgraphs::wheel(5);
  Cycle rim{0, 1, 2, 3, 4};
  int outer = outer_face_of_cycle(g, rim);
  Lcg rng(0x5eedu);
  for (int trial = 0; trial < 1000; ++trial) {
    ListAssignment L(6);
    for (int v = 0; v < 5; ++v) L.sets[v] = random_kset(rng, 3, 7);
    L.sets[5] = random_kset(rng, 5, 7);
    PartialColoring phi = thomassen_extend(g, outer, Edge{0, 1}, L);
    check_total(g, L, phi);
    // oracle agreement: an extension had to exist, and does
    REQUIRE(solve(g, L).has_value());
  }
}

TEST_CASE("thomassen handles forced pairs and deeper interiors") {
  Embedding g = testgraphs::concentric_squares(3);
  REQUIRE(g.genus() == 0);
  Cycle boundary{0, 1, 2, 3};
  int outer = outer_face_of_cycle(g, boundary);
  ListAssignment L(12);
  for (int v = 0; v < 4; ++v) L.sets[v] = colorset_from({0, 1, 2});
  for (int v = 4; v < 12; ++v) L.sets[v] = colorset_from({0, 1, 2, 3, 4});
  SECTION("free pair") {
    check_total(g, L, thomassen_extend(g, outer, Edge{0, 1}, L));
  }
  SECTION("every proper forced pair") {
    for (int a : {0, 1, 2})
      for (int b : {0, 1, 2}) {
        if (a == b) continue;
        PartialColoring phi =
            thomassen_extend(g, outer, Edge{0, 1}, L, std::make_pair(a, b));
        check_total(g, L, phi);
        CHECK(phi.at(0) == a);
        CHECK(phi.at(1) == b);
      }
  }
}

TEST_CASE("thomassen crosses cut vertices") {
  Embedding g = testgraphs::wheel_with_pendant_triangle();
  REQUIRE(g.genus() == 0);
  Cycle boundary{0, 1, 2, 3};
  int outer = outer_face_of_cycle(g, boundary);
  ListAssignment L(7);
  for (int v = 0; v < 4; ++v) L.sets[v] = colorset_from({0, 1, 2});
  for (int v = 4; v < 7; ++v) L.sets[v] = colorset_from({0, 1, 2, 3, 4});
  PartialColoring phi = thomassen_extend(g, outer, Edge{0, 1}, L);
  check_total(g, L, phi);
}

TEST_CASE("short cycle extension around a triangle") {
  // triangle 0-1-2 with one interior vertex joined to all three
  Embedding g = testgraphs::k4_plane();
  Cycle c{0, 1, 2};
  int outer = outer_face_of_cycle(g, c);
  ListAssignment L(4);
  for (int v = 0; v < 3; ++v) L.sets[v] = colorset_from({0, 1, 2});
  L.sets[3] = colorset_from({0, 1, 2, 3, 4});
  PartialColoring phi;
  phi.set(0, 0);
  phi.set(1, 1);
  phi.set(2, 2);
  PartialColoring full = extend_short_cycle(g, outer, phi, L);
  check_total(g, L, full);
  CHECK(full.at(3) == 3);  // lists 0,1,2 are taken by the boundary
}

TEST_CASE("short cycle extension on W4 over every boundary coloring") {
  Embedding g = testgraphs::wheel(4);
  Cycle rim{0, 1, 2, 3};
  int outer = outer_face_of_cycle(g, rim);
  ListAssignment L(5);
  for (int v = 0; v < 4; ++v) L.sets[v] = colorset_from({0, 1, 2, 3, 4});
  L.sets[4] = colorset_from({0, 1, 2, 3, 4});
  int checked = 0;
  for (int c0 = 0; c0 < 5; ++c0)
    for (int c1 = 0; c1 < 5; ++c1)
      for (int c2 = 0; c2 < 5; ++c2)
        for (int c3 = 0; c3 < 5; ++c3) {
          if (c0 == c1 || c1 == c2 || c2 == c3 || c3 == c0) continue;
          PartialColoring phi;
          phi.set(0, c0);
          phi.set(1, c1);
          phi.set(2, c2);
          phi.set(3, c3);
          PartialColoring full = extend_short_cycle(g, outer, phi, L);
          check_total(g, L, full);
          ++checked;
        }
  CHECK(checked == 260);  // proper colorings of C4 from 5 colors
}

TEST_CASE("short cycle extension with twelve interior vertices") {
  Embedding g = testgraphs::concentric_squares(4);
  REQUIRE(g.order() == 16);
  Cycle boundary{0, 1, 2, 3};
  int outer = outer_face_of_cycle(g, boundary);
  ListAssignment L(16);
  for (int v = 0; v < 4; ++v) L.sets[v] = colorset_from({0, 1, 2, 3});
  for (int v = 4; v < 16; ++v) L.sets[v] = colorset_from({0, 1, 2, 3, 4});
  Lcg rng(0xfeedu);
  for (int trial = 0; trial < 50; ++trial) {
    PartialColoring phi;
    for (;;) {
      phi = PartialColoring{};
      for (int v = 0; v < 4; ++v) phi.set(v, rng.below(4));
      if (phi.at(0) != phi.at(1) && phi.at(1) != phi.at(2) &&
          phi.at(2) != phi.at(3) && phi.at(3) != phi.at(0))
        break;
    }
    PartialColoring full = extend_short_cycle(g, outer, phi, L);
    check_total(g, L, full);
    // oracle agreement on existence
    ListAssignment fixed = L;
    for (auto& [v, c] : phi.entries()) fixed.sets[v] = ColorSet{1} << c;
    REQUIRE(solve(g, fixed).has_value());
  }
}

TEST_CASE("short cycle extension over octahedron faces") {
  Embedding g = testgraphs::octahedron();
  Cycle c{0, 1, 4};
  int outer = outer_face_of_cycle(g, c);
  ListAssignment L = ListAssignment::uniform(6, {0, 1, 2, 3, 4});
  int runs = 0;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int d = 0; d < 5; ++d) {
        if (a == b || b == d || a == d) continue;
        PartialColoring phi;
        phi.set(0, a);
        phi.set(1, b);
        phi.set(4, d);
        PartialColoring full = extend_short_cycle(g, outer, phi, L);
        check_total(g, L, full);
        ++runs;
      }
  CHECK(runs == 60);
}

TEST_CASE("short cycle extension rejects bad inputs") {
  Embedding g = testgraphs::wheel(5);
  Cycle rim{0, 1, 2, 3, 4};
  int outer = outer_face_of_cycle(g, rim);
  ListAssignment L = ListAssignment::uniform(6, {0, 1, 2, 3, 4});
  PartialColoring phi;
  for (int v = 0; v < 5; ++v) phi.set(v, v % 2 == 0 ? (v == 4 ? 2 : 0) : 1);
  CHECK_THROWS_WITH(extend_short_cycle(g, outer, phi, L),
                    Catch::Matchers::ContainsSubstring("longer than four"));

  Embedding w4 = testgraphs::wheel(4);
  Cycle rim4{0, 1, 2, 3};
  int outer4 = outer_face_of_cycle(w4, rim4);
  ListAssignment L4 = ListAssignment::uniform(5, {0, 1, 2, 3, 4});
  PartialColoring partial;
  partial.set(0, 0);
  partial.set(1, 1);
  partial.set(2, 0);
  CHECK_THROWS_WITH(extend_short_cycle(w4, outer4, partial, L4),
                    Catch::Matchers::ContainsSubstring("uncolored"));
  partial.set(3, 1);
  partial.set(4, 2);  // hub is off the boundary
  CHECK_THROWS_WITH(extend_short_cycle(w4, outer4, partial, L4),
                    Catch::Matchers::ContainsSubstring("strays off"));
  PartialColoring improper;
  improper.set(0, 0);
  improper.set(1, 0);
  improper.set(2, 1);
  improper.set(3, 1);
  CHECK_THROWS_AS(extend_short_cycle(w4, outer4, improper, L4),
                  HypothesisError);
  PartialColoring ok;
  ok.set(0, 0);
  ok.set(1, 1);
  ok.set(2, 0);
  ok.set(3, 1);
  ListAssignment small = L4;
  small.sets[4] = colorset_from({0, 1, 2, 3});
  CHECK_THROWS_WITH(extend_short_cycle(w4, outer4, ok, small),
                    Catch::Matchers::ContainsSubstring("interior vertex 4"));
}

TEST_CASE("corresponding_face locates regions of sub-embeddings") {
  Embedding g = testgraphs::octahedron();
  // equator square 0-1-2-3 as an edge sub-embedding
  SubEmbedding sub = extract_edge_subembedding(
      g, {Edge{0, 1}, Edge{1, 2}, Edge{2, 3}, Edge{0, 3}});
  REQUIRE(sub.emb.face_count() == 2);
  // faces holding the two poles must differ
  int f_top = -1, f_bot = -1;
  for (int f = 0; f < g.face_count(); ++f) {
    std::vector<int> vs = g.face_vertices(f);
    for (int v : vs) {
      if (v == 4) f_top = corresponding_face(g, sub, f);
      if (v == 5) f_bot = corresponding_face(g, sub, f);
    }
  }
  REQUIRE(f_top >= 0);
  REQUIRE(f_bot >= 0);
  CHECK(f_top != f_bot);
}
