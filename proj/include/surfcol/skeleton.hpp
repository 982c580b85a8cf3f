#pragma once
// Structural analysis of a cycle with a designated disc side: the Delta
// sets of exterior neighbours, the split/nonsplit classification, inward
// towers (the w^k / F^k sequence), nonsplit depth, and the recursive
// (k,r)-skeleton builder together with an independent verifier.
//
// Every operation takes the designated "inside" explicitly as a host face
// on the chosen side of the cycle, so the same machinery serves outer
// boundaries and inward-facing faces alike.

#include <array>
#include <cstdlib>
#include <tuple>

#include "surfcol/topology.hpp"

namespace surfcol {

// Vertices strictly inside the designated side that see at least three
// cycle vertices, and the subset whose neighbourhood on the cycle is
// exactly a length-two subpath (or all of a triangle cycle).
struct DeltaSets {
  std::vector<int> at_least3;
  std::vector<int> two_path;
};

// Split verdict for a cycle of length > 3. `reason` names the definition
// clause that fired: 1 = a non-triangular face of the side touches the
// cycle, 2 = the at-least-3 Delta set is empty, 3 = a chord inside,
// 4 = a 2-chord inside whose endpoints are >= 3 apart along the cycle.
// Detection prefers concrete witnesses: 3, then 4, then 1, then 2.
// `anomaly` marks nonsplit cycles whose two-path Delta set is nonetheless
// empty (an apex adjacent to four or more cycle vertices); towers starting
// from such a cycle cannot grow.
struct SplitVerdict {
  bool split = false;
  int reason = 0;
  bool anomaly = false;
  std::optional<Edge> chord;
  std::optional<std::array<int, 3>> two_chord;  // endpoint, midpoint, endpoint
  explicit operator bool() const { return split; }
};

struct TowerLevel {
  Subgraph h;   // everything between the base and this level's cycle
  Cycle inner;  // the level cycle
};

// The unique inward tower of a nonsplit base cycle: level i+1 absorbs the
// two-path Delta vertices of level i that lie within hop distance one of
// the base. `degenerate` marks an anomalous nonsplit base whose first step
// is already empty.
struct Tower {
  Cycle base;
  std::vector<TowerLevel> levels;
  bool degenerate = false;

  int terminal() const { return static_cast<int>(levels.size()) - 1; }
  const Subgraph& w() const { return levels.back().h; }
  const Cycle& f() const { return levels.back().inner; }
};

// An inward-facing face of a skeleton with its classification:
// type 1 = empty at-least-3 Delta set and no chord inside,
// type 2 = nonsplit depth at least r and no longer than the root cycle,
// type 0 = neither (verification failure; `detail` explains).
struct SkeletonFace {
  Cycle cycle;
  int inside_face = -1;  // representative host face inside this face
  int type = 0;
  std::string detail;
};

struct SkeletonResult {
  Subgraph k_graph;
  int k = 0;
  int r = 0;
  std::vector<SkeletonFace> faces;
};

struct SkeletonVerification {
  bool ok = false;
  bool boundary_in_k = false;      // the cycle is a subgraph of K
  bool contained_in_side = false;  // K stays on the designated side
  bool two_connected = false;
  bool within_ball = false;        // V(K) within hop distance k of the cycle
  std::vector<SkeletonFace> faces;
  std::string detail;
  explicit operator bool() const { return ok; }
};

namespace skdetail {

// A cycle with its designated disc side resolved against the host: region
// ids per face, boundary positions, and the strictly-inside vertex set.
struct SideView {
  Cycle cycle;
  int inside_region = -1;
  std::vector<int> region_of_face;
  std::vector<int> pos;        // vertex -> position on the cycle, else -1
  std::vector<char> interior;  // vertex -> strictly inside
  std::vector<int> interior_verts;

  int n() const { return static_cast<int>(cycle.size()); }
  bool on_cycle(int v) const { return pos[v] >= 0; }
  bool face_inside(int f) const { return region_of_face[f] == inside_region; }
  // Hop distance between two cycle vertices along the cycle.
  int hop(int a, int b) const {
    int d = std::abs(pos[a] - pos[b]);
    return std::min(d, n() - d);
  }
};

inline SideView make_side_impl(const Embedding& g, const Cycle& c,
                               int token_face, bool token_is_inside,
                               const char* who) {
  validate_cycle(g, c, who);
  if (token_face < 0 || token_face >= g.face_count())
    throw HypothesisError(std::string(who) + ": side face out of range");
  RegionDecomposition d = decompose_by_edges(g, cycle_edges(c));
  if (d.region_count != 2)
    throw HypothesisError(std::string(who) +
                          ": cycle does not separate the surface");
  SideView s;
  s.cycle = c;
  int token_region = d.region_of_face[token_face];
  s.inside_region = token_is_inside ? token_region : 1 - token_region;
  if (d.interior_characteristic(s.inside_region) != 1)
    throw HypothesisError(std::string(who) +
                          ": designated side is not a disc");
  s.pos.assign(g.order(), -1);
  for (int i = 0; i < s.n(); ++i) s.pos[c[i]] = i;
  s.interior.assign(g.order(), 0);
  s.interior_verts = d.region_verts[s.inside_region];
  for (int v : s.interior_verts) s.interior[v] = 1;
  s.region_of_face = std::move(d.region_of_face);
  return s;
}

inline SideView make_side(const Embedding& g, const Cycle& c, int inside_face,
                          const char* who) {
  return make_side_impl(g, c, inside_face, true, who);
}

// Designate the side away from a reference face (used when recursing on
// cycles nested inside the original one: the original outside face stays
// outside every nested cycle).
inline SideView make_side_opposite(const Embedding& g, const Cycle& c,
                                   int outside_face, const char* who) {
  return make_side_impl(g, c, outside_face, false, who);
}

inline int outside_face_rep(const SideView& s) {
  for (int f = 0; f < static_cast<int>(s.region_of_face.size()); ++f)
    if (s.region_of_face[f] != s.inside_region) return f;
  throw InvariantError("side view: no face outside the cycle");
}

inline std::vector<int> cycle_hits(const Embedding& g, const SideView& s,
                                   int u) {
  std::vector<int> hits;
  for (int nb : g.rotation(u))
    if (s.on_cycle(nb)) hits.push_back(s.pos[nb]);
  std::sort(hits.begin(), hits.end());
  return hits;
}

// Positions form a consecutive triple along the cycle, wrap included.
inline bool is_two_path(const std::vector<int>& hits, int n) {
  if (static_cast<int>(hits.size()) != 3) return false;
  if (hits[2] - hits[0] == 2 && hits[1] == hits[0] + 1) return true;
  return hits[0] == 0 &&
         ((hits[1] == n - 2 && hits[2] == n - 1) ||
          (hits[1] == 1 && hits[2] == n - 1));
}

// Midpoint position of a two-path neighbourhood.
inline int two_path_mid(const std::vector<int>& hits, int n) {
  if (hits[2] - hits[0] == 2) return hits[1];
  return hits[1] == n - 2 ? n - 1 : 0;
}

inline DeltaSets delta_impl(const Embedding& g, const SideView& s) {
  DeltaSets out;
  for (int u : s.interior_verts) {
    std::vector<int> hits = cycle_hits(g, s, u);
    if (static_cast<int>(hits.size()) < 3) continue;
    out.at_least3.push_back(u);
    if (s.n() == 3 || is_two_path(hits, s.n())) out.two_path.push_back(u);
  }
  return out;
}

// Lexicographically least chord of the cycle lying on the inside.
inline std::optional<Edge> find_inside_chord(const Embedding& g,
                                             const SideView& s) {
  for (const Edge& e : g.edges()) {  // edges() is sorted
    if (!s.on_cycle(e.u) || !s.on_cycle(e.v)) continue;
    if (s.hop(e.u, e.v) == 1) continue;  // a cycle edge
    if (s.face_inside(g.face_of_arc(g.arc(e.u, e.v)))) return e;
  }
  return std::nullopt;
}

// Least (by endpoints, then midpoint) inside 2-chord whose endpoints are at
// hop distance >= 3 along the cycle.
inline std::optional<std::array<int, 3>> find_distant_two_chord(
    const Embedding& g, const SideView& s) {
  std::optional<std::array<int, 3>> best;
  auto better = [](const std::array<int, 3>& a, const std::array<int, 3>& b) {
    return std::tie(a[0], a[2], a[1]) < std::tie(b[0], b[2], b[1]);
  };
  for (int w : s.interior_verts) {
    std::vector<int> ends;
    for (int nb : g.rotation(w))
      if (s.on_cycle(nb)) ends.push_back(nb);
    std::sort(ends.begin(), ends.end());
    for (size_t i = 0; i < ends.size(); ++i)
      for (size_t j = i + 1; j < ends.size(); ++j) {
        if (s.hop(ends[i], ends[j]) < 3) continue;
        std::array<int, 3> cand{ends[i], w, ends[j]};
        if (!best || better(cand, *best)) best = cand;
      }
  }
  return best;
}

// First face of the inside that touches the hop-k ball of the cycle and is
// not a triangle; the face bounded by the cycle itself is exempt.
inline std::optional<int> first_nontriangle_face(const Embedding& g,
                                                 const SideView& s, int k) {
  std::vector<int> dist = bfs_distances(g, s.cycle);
  for (int f = 0; f < g.face_count(); ++f) {
    if (!s.face_inside(f) || g.face_length(f) == 3) continue;
    if (g.face_length(f) == s.n()) {
      bool is_cycle_face = true;
      for (int a : g.face_arcs(f)) {
        int u = g.arc_tail(a), v = g.arc_head(a);
        if (!s.on_cycle(u) || !s.on_cycle(v) || s.hop(u, v) != 1) {
          is_cycle_face = false;
          break;
        }
      }
      if (is_cycle_face) continue;
    }
    for (int v : g.face_vertices(f))
      if (dist[v] <= k) return f;
  }
  return std::nullopt;
}

inline SplitVerdict split_impl(const Embedding& g, const SideView& s,
                               const char* who) {
  if (s.n() <= 3)
    throw HypothesisError(std::string(who) +
                          ": split is undefined for triangles");
  SplitVerdict v;
  if (auto ch = find_inside_chord(g, s)) {
    v.split = true;
    v.reason = 3;
    v.chord = ch;
    return v;
  }
  if (auto tc = find_distant_two_chord(g, s)) {
    v.split = true;
    v.reason = 4;
    v.two_chord = tc;
    return v;
  }
  if (first_nontriangle_face(g, s, 0)) {
    v.split = true;
    v.reason = 1;
    return v;
  }
  DeltaSets ds = delta_impl(g, s);
  if (ds.at_least3.empty()) {
    v.split = true;
    v.reason = 2;
    return v;
  }
  v.anomaly = ds.two_path.empty();
  return v;
}

inline Tower tower_impl(const Embedding& g, const SideView& base,
                        const char* who) {
  if (split_impl(g, base, who).split)
    throw HypothesisError(std::string(who) +
                          ": cycle is split, the tower is undefined");
  std::vector<int> dist = bfs_distances(g, base.cycle);
  int outside = outside_face_rep(base);
  Tower t;
  t.base = base.cycle;
  t.levels.push_back({subgraph_of_cycle(base.cycle), base.cycle});
  SideView cur = base;
  for (int guard = 0;; ++guard) {
    if (guard > g.order())
      throw InvariantError(std::string(who) + ": tower fails to terminate");
    std::vector<int> grow;
    {
      DeltaSets ds = delta_impl(g, cur);
      for (int u : ds.two_path)
        if (dist[u] <= 1) grow.push_back(u);
    }
    if (grow.empty()) break;
    std::vector<int> repl(cur.n(), -1);
    for (int u : grow) {
      int mid = two_path_mid(cycle_hits(g, cur, u), cur.n());
      if (repl[mid] >= 0)
        throw InvariantError(std::string(who) +
                             ": colliding two-path midpoints");
      repl[mid] = u;
    }
    Cycle next(cur.cycle);
    for (int i = 0; i < cur.n(); ++i)
      if (repl[i] >= 0) next[i] = repl[i];
    Subgraph h = t.levels.back().h;
    for (int u : grow) {
      h.verts.push_back(u);
      for (int nb : g.rotation(u))
        if (cur.on_cycle(nb)) h.edges.emplace_back(u, nb);
    }
    h.normalize();
    cur = make_side_opposite(g, next, outside, who);
    t.levels.push_back({std::move(h), std::move(next)});
  }
  t.degenerate = t.levels.size() == 1;
  return t;
}

// Nonsplit depth computed from a resolved side; kUnbounded for triangles
// and for anomalous fixpoints (a nonsplit level whose tower cannot grow).
inline int ndepth_impl(const Embedding& g, SideView s, int outside,
                       const char* who) {
  if (s.n() == 3) return kUnbounded;
  for (int r = 0;; ++r) {
    if (r > g.order())
      throw InvariantError(std::string(who) + ": no split level found");
    if (split_impl(g, s, who).split) return r;
    Tower t = tower_impl(g, s, who);
    if (t.degenerate) return kUnbounded;
    s = make_side_opposite(g, t.f(), outside, who);
  }
}

inline std::pair<Subgraph, Cycle> wk_impl(const Embedding& g, SideView s,
                                          int outside, int k,
                                          const char* who) {
  Subgraph w = subgraph_of_cycle(s.cycle);
  Cycle f = s.cycle;
  for (int step = 0; step < k; ++step) {
    if (split_impl(g, s, who).split) break;  // stabilized
    Tower t = tower_impl(g, s, who);
    if (t.degenerate) break;  // anomalous fixpoint
    w = subgraph_union(w, t.w());
    f = t.f();
    s = make_side_opposite(g, f, outside, who);
  }
  return {std::move(w), std::move(f)};
}

// Split a cycle at positions i < j, optionally through a midpoint vertex.
inline std::pair<Cycle, Cycle> split_cycle(const Cycle& c, int i, int j,
                                           std::optional<int> mid) {
  Cycle a0(c.begin() + i, c.begin() + j + 1);
  Cycle a1(c.begin() + j, c.end());
  a1.insert(a1.end(), c.begin(), c.begin() + i + 1);
  if (mid) {
    a0.push_back(*mid);
    a1.push_back(*mid);
  }
  return {std::move(a0), std::move(a1)};
}

inline Subgraph skeleton_rec(const Embedding& g, const Cycle& d, int outside,
                             int budget, int r) {
  SideView s = make_side_opposite(g, d, outside, "build_skeleton");
  int n = s.n();
  if (budget < r * (n - 3))
    throw InvariantError("build_skeleton: recursion broke the budget bound");
  if (n == 3 || r == 0) return subgraph_of_cycle(d);
  int m = ndepth_impl(g, s, outside, "build_skeleton");
  if (m >= r) return subgraph_of_cycle(d);
  auto [wm, fm] = wk_impl(g, s, outside, m, "build_skeleton");
  SideView fs = make_side_opposite(g, fm, outside, "build_skeleton");
  int i = -1, j = -1;
  std::optional<int> mid;
  if (auto ch = find_inside_chord(g, fs)) {
    i = fs.pos[ch->u];
    j = fs.pos[ch->v];
  } else if (delta_impl(g, fs).at_least3.empty()) {
    return wm;  // the split level itself closes the skeleton (type 1)
  } else if (auto tc = find_distant_two_chord(g, fs)) {
    i = fs.pos[(*tc)[0]];
    j = fs.pos[(*tc)[2]];
    mid = (*tc)[1];
  } else {
    throw InvariantError(
        "build_skeleton: split level admits no chord and no distant 2-chord");
  }
  if (i > j) std::swap(i, j);
  auto [a0, a1] = split_cycle(fm, i, j, mid);
  Subgraph k0 = skeleton_rec(g, a0, outside, budget - (m + 1), r);
  Subgraph k1 = skeleton_rec(g, a1, outside, budget - (m + 1), r);
  return subgraph_union(wm, subgraph_union(k0, k1));
}

// Classify every inward-facing face of K against the two skeleton clauses.
// Faces that satisfy neither get type 0 and a complaint in `detail`.
inline std::vector<SkeletonFace> classify_faces(const Embedding& g,
                                                const Subgraph& k_graph,
                                                int outside, int r,
                                                int base_len) {
  SubEmbedding sub = extract_edge_subembedding(g, k_graph.edges);
  int outer = corresponding_face(g, sub, outside);
  std::vector<SkeletonFace> out;
  for (int f = 0; f < sub.emb.face_count(); ++f) {
    if (f == outer) continue;
    SkeletonFace rec;
    if (!sub.emb.face_is_cycle(f)) {
      for (int a : sub.emb.face_arcs(f))
        rec.cycle.push_back(sub.to_host[sub.emb.arc_tail(a)]);
      rec.detail = "face walk is not a cycle";
      out.push_back(std::move(rec));
      continue;
    }
    for (int v : sub.emb.face_vertices(f)) rec.cycle.push_back(sub.to_host[v]);
    int a0 = sub.emb.face_arcs(f)[0];
    int hu = sub.to_host[sub.emb.arc_tail(a0)];
    int hv = sub.to_host[sub.emb.arc_head(a0)];
    rec.inside_face = g.face_of_arc(g.arc(hu, hv));
    SideView fs = make_side(g, rec.cycle, rec.inside_face, "skeleton face");
    if (delta_impl(g, fs).at_least3.empty() && !find_inside_chord(g, fs)) {
      rec.type = 1;
    } else {
      int nd = fs.n() == 3 ? kUnbounded
                           : ndepth_impl(g, fs, outside, "skeleton face");
      if (nd >= r && fs.n() <= base_len) {
        rec.type = 2;
      } else {
        rec.detail = nd < r ? "nonsplit depth " + std::to_string(nd) +
                                  " below r=" + std::to_string(r)
                            : "face longer than the root cycle";
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace skdetail

inline DeltaSets delta_sets(const Embedding& g, const Cycle& c,
                            int inside_face) {
  return skdetail::delta_impl(g,
                              skdetail::make_side(g, c, inside_face,
                                                  "delta_sets"));
}

// Every face of the designated side touching the hop-k ball of the cycle
// is a triangle (the face bounded by the cycle itself excepted).
inline bool is_k_triangulated(const Embedding& g, const Cycle& c,
                              int inside_face, int k) {
  skdetail::SideView s =
      skdetail::make_side(g, c, inside_face, "is_k_triangulated");
  return !skdetail::first_nontriangle_face(g, s, k).has_value();
}

inline SplitVerdict is_split(const Embedding& g, const Cycle& c,
                             int inside_face) {
  skdetail::SideView s = skdetail::make_side(g, c, inside_face, "is_split");
  return skdetail::split_impl(g, s, "is_split");
}

inline Tower grow_tower(const Embedding& g, const Cycle& c, int inside_face) {
  skdetail::SideView s = skdetail::make_side(g, c, inside_face, "grow_tower");
  if (s.n() <= 3) throw HypothesisError("grow_tower: cycle of length 3");
  return skdetail::tower_impl(g, s, "grow_tower");
}

// The k-th stage of the inward tower sequence: repeated full towers, frozen
// once the current front cycle is split.
inline std::pair<Subgraph, Cycle> wk_tower(const Embedding& g, const Cycle& c,
                                           int inside_face, int k) {
  skdetail::SideView s = skdetail::make_side(g, c, inside_face, "wk_tower");
  if (s.n() <= 3) throw HypothesisError("wk_tower: cycle of length 3");
  if (k < 0) throw HypothesisError("wk_tower: negative stage");
  return skdetail::wk_impl(g, s, skdetail::outside_face_rep(s), k,
                           "wk_tower");
}

// Smallest stage whose front cycle is split; kUnbounded for triangles and
// for anomalous fixpoints.
inline int ndepth(const Embedding& g, const Cycle& c, int inside_face) {
  skdetail::SideView s = skdetail::make_side(g, c, inside_face, "ndepth");
  if (s.n() == 3) return kUnbounded;
  return skdetail::ndepth_impl(g, s, skdetail::outside_face_rep(s), "ndepth");
}

inline SkeletonResult build_skeleton(const Embedding& g, const Cycle& c,
                                     int inside_face, int k, int r) {
  skdetail::SideView s =
      skdetail::make_side(g, c, inside_face, "build_skeleton");
  if (k < 0 || r < 0)
    throw HypothesisError("build_skeleton: negative parameter");
  int n = s.n();
  if (k < r * (n - 3))
    throw HypothesisError("build_skeleton: k below r(|V(C)|-3)");
  {
    ExtractedSide side = extract_cycle_side(g, c, inside_face);
    if (!is_biconnected(side.emb))
      throw HypothesisError("build_skeleton: side is not 2-connected");
  }
  if (auto bad = skdetail::first_nontriangle_face(g, s, k + r))
    throw HypothesisError("build_skeleton: side is not " +
                          std::to_string(k + r) +
                          "-triangulated, offending face " +
                          std::to_string(*bad));
  int outside = skdetail::outside_face_rep(s);
  SkeletonResult out;
  out.k = k;
  out.r = r;
  out.k_graph = skdetail::skeleton_rec(g, c, outside, k, r);
  std::vector<int> dist = bfs_distances(g, c);
  for (int v : out.k_graph.verts)
    if (dist[v] > k)
      throw InvariantError("build_skeleton: vertex escapes the k-ball");
  out.faces = skdetail::classify_faces(g, out.k_graph, outside, r, n);
  for (const SkeletonFace& f : out.faces)
    if (f.type == 0)
      throw InvariantError("build_skeleton: unclassifiable face: " + f.detail);
  return out;
}

// Pure checker: containment, 2-connectivity, the distance bound, and a
// per-face classification report.
inline SkeletonVerification verify_skeleton(const Embedding& g, const Cycle& c,
                                            int inside_face,
                                            const Subgraph& k_graph, int k,
                                            int r) {
  skdetail::SideView s =
      skdetail::make_side(g, c, inside_face, "verify_skeleton");
  SkeletonVerification rep;
  rep.boundary_in_k = subgraph_contains(k_graph, subgraph_of_cycle(c));
  rep.contained_in_side = true;
  for (int v : k_graph.verts)
    if (!s.on_cycle(v) && !s.interior[v]) rep.contained_in_side = false;
  for (const Edge& e : k_graph.edges) {
    if (g.edge_index(e.u, e.v) < 0) {
      rep.contained_in_side = false;
      rep.detail = "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                   " is not in the host";
      continue;
    }
    bool on_c = s.on_cycle(e.u) && s.on_cycle(e.v) && s.hop(e.u, e.v) == 1;
    if (!on_c && !s.face_inside(g.face_of_arc(g.arc(e.u, e.v))))
      rep.contained_in_side = false;
  }
  if (!rep.contained_in_side || !rep.boundary_in_k) return rep;
  SubEmbedding sub = extract_edge_subembedding(g, k_graph.edges);
  bool covered = true;
  for (int v : k_graph.verts)
    if (sub.from_host[v] < 0) covered = false;
  rep.two_connected = covered && is_biconnected(sub.emb);
  std::vector<int> dist = bfs_distances(g, c);
  rep.within_ball = true;
  for (int v : k_graph.verts)
    if (dist[v] > k) rep.within_ball = false;
  try {
    rep.faces = skdetail::classify_faces(
        g, k_graph, skdetail::outside_face_rep(s), r,
        static_cast<int>(c.size()));
  } catch (const Error& err) {
    rep.detail = err.what();
    return rep;
  }
  rep.ok = rep.boundary_in_k && rep.contained_in_side && rep.two_connected &&
           rep.within_ball;
  for (const SkeletonFace& f : rep.faces)
    if (f.type == 0) rep.ok = false;
  return rep;
}

}  // namespace surfcol
