#pragma once
// Deterministic fixture generation for the verification suites: a portable
// counter RNG and embedding builders (triangulated discs grown by face
// stacking). The random suites elsewhere build on these.

#include "surfcol/embedding.hpp"

namespace surfcol {

// SplitMix-style counter generator; identical output on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform value in [0, n).
  int below(int n) {
    if (n <= 0) throw HypothesisError("Rng::below: empty range");
    return static_cast<int>(next() % static_cast<std::uint64_t>(n));
  }
  bool flip() { return (next() & 1) != 0; }

 private:
  std::uint64_t state_;
};

// New embedding with one extra vertex placed inside face f and joined to
// every vertex of the face walk. The walk must be a simple cycle; each new
// triangle (v_i, v_{i+1}, w) replaces a slice of the old face.
inline Embedding insert_vertex_in_face(const Embedding& g, int f) {
  if (!g.face_is_cycle(f))
    throw HypothesisError("insert_vertex_in_face: face walk is not a cycle");
  std::vector<int> walk = g.face_vertices(f);
  int w = g.order();
  std::vector<std::vector<int>> rot(w + 1);
  for (int v = 0; v < w; ++v) rot[v] = g.rotation(v);
  int m = static_cast<int>(walk.size());
  for (int i = 0; i < m; ++i) {
    // along the walk the new vertex sits just past the incoming neighbour
    int prev = walk[(i + m - 1) % m];
    auto& r = rot[walk[i]];
    r.insert(std::find(r.begin(), r.end(), prev) + 1, w);
  }
  rot[w].assign(walk.rbegin(), walk.rend());
  std::vector<long long> labels = g.labels();
  labels.push_back(w);
  Embedding out = Embedding::build(std::move(rot), std::move(labels));
  if (out.genus() != g.genus())
    throw InvariantError("insert_vertex_in_face: surgery changed the surface");
  return out;
}

struct GeneratedDisc {
  Embedding emb;
  Cycle boundary;      // outer cycle, vertices 0..n-1 in order
  int outer_face = -1; // the face on the empty side of the boundary
};

// Triangulated disc: an n-cycle boundary around a hub, plus `extra`
// vertices stacked into interior triangles chosen by the generator.
inline GeneratedDisc gen_triangulated_disc(Rng& rng, int n, int extra) {
  if (n < 3) throw HypothesisError("gen_triangulated_disc: boundary too short");
  std::vector<std::vector<int>> rot(n + 1);
  for (int i = 0; i < n; ++i) rot[i] = {(i + 1) % n, n, (i + n - 1) % n};
  for (int i = 0; i < n; ++i) rot[n].push_back(i);
  Embedding g = Embedding::build(std::move(rot));
  auto is_boundary_face = [n](const Embedding& e, int f) {
    for (int v : e.face_vertices(f))
      if (v >= n) return false;
    return true;
  };
  for (int t = 0; t < extra; ++t) {
    std::vector<int> candidates;
    for (int f = 0; f < g.face_count(); ++f)
      if (g.face_length(f) == 3 && !is_boundary_face(g, f))
        candidates.push_back(f);
    g = insert_vertex_in_face(g, candidates[rng.below(
            static_cast<int>(candidates.size()))]);
  }
  GeneratedDisc out;
  out.boundary.resize(n);
  std::iota(out.boundary.begin(), out.boundary.end(), 0);
  for (int f = 0; f < g.face_count(); ++f)
    if (is_boundary_face(g, f)) out.outer_face = f;
  if (out.outer_face < 0)
    throw InvariantError("gen_triangulated_disc: boundary face lost");
  out.emb = std::move(g);
  return out;
}

}  // namespace surfcol
