#pragma once
// Hand-built embeddings shared across test binaries.

#include <cmath>

#include "surfcol/embedding.hpp"

namespace testgraphs {

using surfcol::Embedding;

inline Embedding triangle() {
  return Embedding::build({{1, 2}, {2, 0}, {0, 1}});
}

inline Embedding single_edge() { return Embedding::build({{1}, {0}}); }

inline Embedding path3() { return Embedding::build({{1}, {0, 2}, {1}}); }

inline Embedding k4_plane() {
  return Embedding::build({{1, 3, 2}, {0, 2, 3}, {0, 3, 1}, {0, 1, 2}});
}

// Same rotation data with vertex 3 reflected: a one-face hexagonal pair,
// genus 1.
inline Embedding k4_torus() {
  return Embedding::build({{1, 3, 2}, {0, 2, 3}, {0, 3, 1}, {2, 1, 0}});
}

inline Embedding cycle(int n) {
  std::vector<std::vector<int>> rot(n);
  for (int i = 0; i < n; ++i) rot[i] = {(i + n - 1) % n, (i + 1) % n};
  return Embedding::build(std::move(rot));
}

// C6 with the chord 0-3 drawn inside.
inline Embedding hexagon_chord() {
  return Embedding::build(
      {{1, 3, 5}, {2, 0}, {3, 1}, {4, 0, 2}, {5, 3}, {0, 4}});
}

// C6 with an inside path 0-6-3 (a 2-chord through a new vertex).
inline Embedding hexagon_two_chord() {
  return Embedding::build(
      {{1, 6, 5}, {2, 0}, {3, 1}, {4, 6, 2}, {5, 3}, {0, 4}, {3, 0}});
}

// Two triangles 0-1-2 and 0-3-4 glued at vertex 0.
inline Embedding bowtie() {
  return Embedding::build({{1, 2, 3, 4}, {2, 0}, {0, 1}, {4, 0}, {0, 3}});
}

// Octahedron: equator 0-1-2-3, poles 4 (top) and 5 (bottom).
inline Embedding octahedron() {
  return Embedding::build({{4, 3, 5, 1},
                           {4, 0, 5, 2},
                           {4, 1, 5, 3},
                           {0, 4, 2, 5},
                           {0, 1, 2, 3},
                           {1, 0, 3, 2}});
}

// Cube skeleton: outer square 0-1-2-3, inner square 4-5-6-7, spokes i-(i+4).
inline Embedding cube() {
  return Embedding::build({{1, 4, 3},
                           {2, 5, 0},
                           {3, 6, 1},
                           {0, 7, 2},
                           {0, 5, 7},
                           {1, 6, 4},
                           {2, 7, 5},
                           {3, 4, 6}});
}

// m x n toroidal grid, rotation [north, east, south, west]; m, n >= 3.
inline Embedding torus_grid(int m, int n) {
  std::vector<std::vector<int>> rot(m * n);
  auto id = [&](int i, int j) { return ((i + m) % m) * n + ((j + n) % n); };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      rot[id(i, j)] = {id(i - 1, j), id(i, j + 1), id(i + 1, j), id(i, j - 1)};
  return Embedding::build(std::move(rot));
}

// Wheel: hub n at the center of cycle 0..n-1.
inline Embedding wheel(int n) {
  std::vector<std::vector<int>> rot(n + 1);
  for (int i = 0; i < n; ++i)
    rot[i] = {(i + 1) % n, n, (i + n - 1) % n};
  for (int i = 0; i < n; ++i) rot[n].push_back(i);
  return Embedding::build(std::move(rot));
}

// Embedding of a straight-line planar drawing: rotations sorted by angle.
inline Embedding from_points(
    const std::vector<std::pair<double, double>>& pts,
    const std::vector<std::pair<int, int>>& edges) {
  int n = static_cast<int>(pts.size());
  std::vector<std::vector<int>> rot(n);
  for (auto [u, v] : edges) {
    rot[u].push_back(v);
    rot[v].push_back(u);
  }
  for (int v = 0; v < n; ++v)
    std::sort(rot[v].begin(), rot[v].end(), [&](int a, int b) {
      return std::atan2(pts[a].second - pts[v].second,
                        pts[a].first - pts[v].first) <
             std::atan2(pts[b].second - pts[v].second,
                        pts[b].first - pts[v].first);
    });
  return Embedding::build(std::move(rot));
}

// Nested squares joined by spokes and one diagonal per quad; ring r holds
// vertices 4r..4r+3, ring 0 outermost. The innermost square face is left
// untriangulated.
inline Embedding concentric_squares(int rings) {
  std::vector<std::pair<double, double>> pts;
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < rings; ++r) {
    double s = rings - r;
    pts.push_back({s, s});
    pts.push_back({-s, s});
    pts.push_back({-s, -s});
    pts.push_back({s, -s});
    for (int k = 0; k < 4; ++k)
      edges.push_back({4 * r + k, 4 * r + (k + 1) % 4});
    if (r) {
      for (int k = 0; k < 4; ++k) {
        edges.push_back({4 * (r - 1) + k, 4 * r + k});
        edges.push_back({4 * (r - 1) + k, 4 * r + (k + 1) % 4});
      }
    }
  }
  return from_points(pts, edges);
}

// A 4-wheel with a pendant triangle block hanging off the hub, drawn
// inside one wheel sector: exercises cut-vertex handling. Outer square
// 0-1-2-3, hub 4, triangle 4-5-6.
inline Embedding wheel_with_pendant_triangle() {
  std::vector<std::pair<double, double>> pts = {
      {2, 2}, {-2, 2}, {-2, -2}, {2, -2}, {0, 0}, {1.2, 0.4}, {1.2, -0.4}};
  std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                                            {0, 4}, {1, 4}, {2, 4}, {3, 4},
                                            {4, 5}, {4, 6}, {5, 6}};
  return from_points(pts, edges);
}

// C4 with the chord 0-2 drawn inside.
inline Embedding square_diag() {
  return from_points({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}},
                     {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
}

inline std::vector<std::pair<double, double>> regular_polygon(int n,
                                                              double radius) {
  std::vector<std::pair<double, double>> pts;
  for (int k = 0; k < n; ++k) {
    double a = 6.283185307179586 * k / n;
    pts.push_back({radius * std::cos(a), radius * std::sin(a)});
  }
  return pts;
}

// C5 with one inside vertex 5 joined to the consecutive run 0,1,2.
inline Embedding pentagon_ear() {
  auto pts = regular_polygon(5, 2);
  pts.push_back({0.33, 1.03});
  return from_points(pts, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                           {5, 0}, {5, 1}, {5, 2}});
}

// C5 with one inside vertex 5 joined to 0,1,2,3: three triangles plus one
// quadrilateral face 3-4-0-5 touching the boundary.
inline Embedding pentagon_quad() {
  auto pts = regular_polygon(5, 2);
  pts.push_back({-0.15, 0.48});
  return from_points(pts, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                           {5, 0}, {5, 1}, {5, 2}, {5, 3}});
}

// One triangulated gap between consecutive rings of a fan annulus. Inner
// vertex i is joined to spans[i] consecutive outer-ring vertices starting
// at start + sum of (spans[j] - 1) over j < i, so consecutive inner
// vertices share an arc endpoint. Spans sum to 2n; no two cyclically
// adjacent spans may both be 1.
struct GapSpec {
  int start = 0;
  std::vector<int> spans;
};

// Concentric n-cycles: ring t holds vertices t*n .. t*n+n-1 indexed
// counterclockwise, ring 0 outermost, consecutive rings triangulated per
// gap spec. cap 0 leaves the innermost face open, cap 1 adds a hub vertex
// rings*n joined to the whole innermost ring, cap 2 triangulates the
// innermost face by chords from its vertex cap_at.
inline Embedding fan_annulus(int n, const std::vector<GapSpec>& gaps,
                             int cap = 0, int cap_at = 0) {
  int rings = static_cast<int>(gaps.size()) + 1;
  auto vid = [n](int t, int i) { return t * n + ((i % n) + n) % n; };
  std::vector<std::vector<int>> arc_start(gaps.size());
  for (size_t t = 0; t < gaps.size(); ++t) {
    const GapSpec& gap = gaps[t];
    if (static_cast<int>(gap.spans.size()) != n)
      throw std::invalid_argument("fan_annulus: need n spans per gap");
    arc_start[t].resize(n);
    int at = gap.start;
    for (int i = 0; i < n; ++i) {
      if (gap.spans[i] == 1 && gap.spans[(i + 1) % n] == 1)
        throw std::invalid_argument("fan_annulus: adjacent width-1 spans");
      arc_start[t][i] = at;
      at += gap.spans[i] - 1;
    }
    if (at != gap.start + n)
      throw std::invalid_argument("fan_annulus: spans must sum to 2n");
  }
  std::vector<std::vector<int>> rot(rings * n + (cap == 1 ? 1 : 0));
  for (int t = 0; t < rings; ++t)
    for (int i = 0; i < n; ++i) {
      auto& r = rot[vid(t, i)];
      r.push_back(vid(t, i - 1));
      if (t > 0)  // the arc on the enclosing ring, counterclockwise
        for (int l = 0; l < gaps[t - 1].spans[i]; ++l)
          r.push_back(vid(t - 1, arc_start[t - 1][i] + l));
      r.push_back(vid(t, i + 1));
      if (t + 1 < rings) {
        // enclosed-ring neighbours, listed clockwise: sort the covering
        // arcs by how far counterclockwise their centre sits from here
        std::vector<std::pair<double, int>> below;
        for (int ii = 0; ii < n; ++ii)
          for (int l = 0; l < gaps[t].spans[ii]; ++l)
            if (vid(t, arc_start[t][ii] + l) == vid(t, i))
              below.push_back({(gaps[t].spans[ii] - 1) / 2.0 - l, ii});
        std::sort(below.rbegin(), below.rend());
        for (auto& [off, ii] : below) r.push_back(vid(t + 1, ii));
      }
    }
  int T = rings - 1;
  if (cap == 1) {
    for (int i = 0; i < n; ++i) {
      rot[rings * n].push_back(vid(T, i));
      rot[vid(T, i)].push_back(rings * n);
    }
  } else if (cap == 2) {
    for (int l = 2; l <= n - 2; ++l) {
      rot[vid(T, cap_at)].push_back(vid(T, cap_at + l));
      rot[vid(T, cap_at + l)].push_back(vid(T, cap_at));
    }
  }
  return Embedding::build(std::move(rot));
}

// Concentric hexagons with alternating 3,1 fan spans: even inner vertices
// see three consecutive outer vertices, odd ones a single outer vertex.
inline Embedding hex_fan(int rings, bool capped = false) {
  std::vector<GapSpec> gaps(rings - 1, GapSpec{-1, {3, 1, 3, 1, 3, 1}});
  return fan_annulus(6, gaps, capped ? 1 : 0);
}

}  // namespace testgraphs
