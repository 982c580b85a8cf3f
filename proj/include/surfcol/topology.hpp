#pragma once
// Surface-topological queries on embeddings: region decompositions along
// blocking subgraphs, cycle contractibility, natural partitions, chords,
// bounded cycle enumeration, edge width, face width via the radial
// construction, and embedding surgery (chord insertion, sub-embeddings).

#include <deque>
#include <set>

#include "surfcol/embedding.hpp"

namespace surfcol {

inline void validate_cycle(const Embedding& g, const Cycle& c,
                           const char* who = "cycle") {
  if (c.size() < 3) throw HypothesisError(std::string(who) + ": length < 3");
  std::vector<int> s(c);
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw HypothesisError(std::string(who) + ": repeated vertex");
  for (size_t i = 0; i < c.size(); ++i) {
    int u = c[i], v = c[(i + 1) % c.size()];
    if (u < 0 || u >= g.order() || !g.adjacent(u, v))
      throw HypothesisError(std::string(who) + ": missing edge " +
                            std::to_string(u) + "-" + std::to_string(v));
  }
}

// ---------------------------------------------------------------------------
// Region decomposition: cut the surface along a blocking edge set S and
// group the faces of the host that remain connected without crossing S.

struct RegionDecomposition {
  std::vector<char> blocked_edge;        // host edge index -> in S
  int region_count = 0;
  std::vector<int> region_of_face;       // host face -> region id
  std::vector<std::vector<int>> region_faces;
  std::vector<std::vector<int>> region_verts;   // strictly interior vertices
  std::vector<std::vector<Edge>> region_edges;  // strictly interior edges
  // Euler characteristic of the closed region (region + boundary walk
  // along a cycle blocker): Vin - Ein + Fin. A disc side of a cycle has
  // value 1.
  int interior_characteristic(int r) const {
    return static_cast<int>(region_verts[r].size()) -
           static_cast<int>(region_edges[r].size()) +
           static_cast<int>(region_faces[r].size());
  }
};

inline RegionDecomposition decompose_by_edges(const Embedding& g,
                                              const std::vector<Edge>& blockers) {
  RegionDecomposition d;
  d.blocked_edge.assign(g.size(), 0);
  for (const Edge& e : blockers) {
    int idx = g.edge_index(e.u, e.v);
    if (idx < 0)
      throw HypothesisError("decompose: blocker edge not in host");
    d.blocked_edge[idx] = 1;
  }
  d.region_of_face.assign(g.face_count(), -1);
  for (int f0 = 0; f0 < g.face_count(); ++f0) {
    if (d.region_of_face[f0] >= 0) continue;
    int r = d.region_count++;
    std::vector<int> stack{f0};
    d.region_of_face[f0] = r;
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (int a : g.face_arcs(f)) {
        int u = g.arc_tail(a), v = g.arc_head(a);
        if (d.blocked_edge[g.edge_index(u, v)]) continue;
        int f2 = g.face_of_arc(g.arc_reverse(a));
        if (d.region_of_face[f2] < 0) {
          d.region_of_face[f2] = r;
          stack.push_back(f2);
        }
      }
    }
  }
  d.region_faces.resize(d.region_count);
  for (int f = 0; f < g.face_count(); ++f)
    d.region_faces[d.region_of_face[f]].push_back(f);
  std::vector<char> on_blocker(g.order(), 0);
  for (const Edge& e : blockers) on_blocker[e.u] = on_blocker[e.v] = 1;
  d.region_verts.resize(d.region_count);
  for (int v = 0; v < g.order(); ++v) {
    if (on_blocker[v] || g.degree(v) == 0) continue;
    int a = g.arc_at(v, 0);
    d.region_verts[d.region_of_face[g.face_of_arc(a)]].push_back(v);
  }
  d.region_edges.resize(d.region_count);
  for (int ei = 0; ei < g.size(); ++ei) {
    if (d.blocked_edge[ei]) continue;
    const Edge& e = g.edges()[ei];
    int f = g.face_of_arc(g.arc(e.u, e.v));
    d.region_edges[d.region_of_face[f]].push_back(e);
  }
  return d;
}

// The region lying on the side of the directed arc u->v.
inline int region_of_arc_side(const Embedding& g, const RegionDecomposition& d,
                              int u, int v) {
  return d.region_of_face[g.face_of_arc(g.arc(u, v))];
}

// ---------------------------------------------------------------------------
// Contractibility: a cycle is contractible iff it separates the surface
// and one side closes up to a disc (interior characteristic 1).

inline bool is_contractible(const Embedding& g, const Cycle& c) {
  validate_cycle(g, c, "is_contractible");
  RegionDecomposition d = decompose_by_edges(g, cycle_edges(c));
  int left = region_of_arc_side(g, d, c[0], c[1]);
  int right = region_of_arc_side(g, d, c[1], c[0]);
  if (left == right) return false;  // does not separate
  return d.interior_characteristic(left) == 1 ||
         d.interior_characteristic(right) == 1;
}

// A separating cycle: contractible with graph vertices strictly on both
// sides of the surface split.
inline bool is_separating(const Embedding& g, const Cycle& c) {
  validate_cycle(g, c, "is_separating");
  RegionDecomposition d = decompose_by_edges(g, cycle_edges(c));
  int left = region_of_arc_side(g, d, c[0], c[1]);
  int right = region_of_arc_side(g, d, c[1], c[0]);
  if (left == right) return false;
  if (d.interior_characteristic(left) != 1 &&
      d.interior_characteristic(right) != 1)
    return false;
  return !d.region_verts[left].empty() && !d.region_verts[right].empty();
}

// ---------------------------------------------------------------------------
// Natural partition along a contractible cycle: the two closed sides.

inline std::pair<Subgraph, Subgraph> natural_partition(const Embedding& g,
                                                       const Cycle& c) {
  validate_cycle(g, c, "natural_partition");
  RegionDecomposition d = decompose_by_edges(g, cycle_edges(c));
  if (d.region_count != 2)
    throw HypothesisError("natural_partition: cycle does not separate");
  if (d.interior_characteristic(0) != 1 && d.interior_characteristic(1) != 1)
    throw HypothesisError("natural_partition: cycle not contractible");
  Subgraph base = subgraph_of_cycle(c);
  auto side = [&](int r) {
    Subgraph s = base;
    s.verts.insert(s.verts.end(), d.region_verts[r].begin(),
                   d.region_verts[r].end());
    s.edges.insert(s.edges.end(), d.region_edges[r].begin(),
                   d.region_edges[r].end());
    s.normalize();
    return s;
  };
  return {side(0), side(1)};
}

// ---------------------------------------------------------------------------
// Generalized chords. A proper k-chord of a subgraph H is a path of k
// edges whose endpoints lie on H, interior off H, and no edge in H; an
// improper one (k >= 3) is a cycle meeting H in exactly one vertex.

enum class ChordKind { Proper, Improper, Both };

inline std::vector<std::vector<int>> k_chords(const Embedding& g,
                                              const Subgraph& h, int k,
                                              ChordKind kind = ChordKind::Both) {
  if (k < 1) throw HypothesisError("k_chords: k must be >= 1");
  std::vector<std::vector<int>> out;
  std::vector<char> inH(g.order(), 0);
  for (int v : h.verts) inH[v] = 1;
  std::vector<int> path;
  std::vector<char> used(g.order(), 0);
  auto edge_in_h = [&](int a, int b) { return h.has_edge(Edge(a, b)); };

  auto dfs = [&](auto&& self, int last, int depth) -> void {
    for (int nb : g.rotation(last)) {
      if (edge_in_h(last, nb)) continue;
      if (depth + 1 == k) {
        bool proper = inH[nb] && nb != path[0];
        bool improper = (nb == path[0]) && k >= 3;
        if (proper && (kind == ChordKind::Proper || kind == ChordKind::Both)) {
          if (path[0] < nb) {  // reversal appears from the other endpoint
            path.push_back(nb);
            out.push_back(path);
            path.pop_back();
          }
        }
        if (improper &&
            (kind == ChordKind::Improper || kind == ChordKind::Both)) {
          if (path[1] < path.back()) {  // direction canonicalization
            out.push_back(path);
            out.back().push_back(path[0]);  // close the walk
          }
        }
      } else {
        if (inH[nb] || used[nb]) continue;
        used[nb] = 1;
        path.push_back(nb);
        self(self, nb, depth + 1);
        path.pop_back();
        used[nb] = 0;
      }
    }
  };

  for (int s : h.verts) {
    path.assign(1, s);
    used.assign(g.order(), 0);
    used[s] = 1;
    dfs(dfs, s, 0);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Distance between positions along a cycle (number of cycle edges).
inline int cycle_hop_distance(const Cycle& c, int a, int b) {
  int ia = -1, ib = -1;
  for (int i = 0; i < static_cast<int>(c.size()); ++i) {
    if (c[i] == a) ia = i;
    if (c[i] == b) ib = i;
  }
  if (ia < 0 || ib < 0)
    throw HypothesisError("cycle_hop_distance: vertex not on cycle");
  int d = std::abs(ia - ib);
  return std::min(d, static_cast<int>(c.size()) - d);
}

// ---------------------------------------------------------------------------
// Bounded simple-cycle enumeration. Exponential in general; both knobs
// exist to keep accidental blowups loud instead of slow.

struct EnumLimits {
  int max_len = 6;
  int vertex_budget = 24;
};

inline std::vector<Cycle> all_simple_cycles(const Embedding& g, int max_len,
                                            const EnumLimits& lim = {}) {
  if (max_len > lim.max_len)
    throw BudgetError("cycle enumeration: max_len " + std::to_string(max_len) +
                      " exceeds limit " + std::to_string(lim.max_len));
  if (g.order() > lim.vertex_budget)
    throw BudgetError("cycle enumeration: " + std::to_string(g.order()) +
                      " vertices exceed budget " +
                      std::to_string(lim.vertex_budget));
  std::vector<Cycle> out;
  std::vector<int> path;
  std::vector<char> used(g.order(), 0);
  auto dfs = [&](auto&& self, int s, int last) -> void {
    for (int nb : g.rotation(last)) {
      if (nb == s && path.size() >= 3) {
        if (path[1] < path.back()) out.push_back(path);
        continue;
      }
      if (nb <= s || used[nb] ||
          static_cast<int>(path.size()) >= max_len)
        continue;
      used[nb] = 1;
      path.push_back(nb);
      self(self, s, nb);
      path.pop_back();
      used[nb] = 0;
    }
  };
  for (int s = 0; s < g.order(); ++s) {
    path.assign(1, s);
    used.assign(g.order(), 0);
    used[s] = 1;
    dfs(dfs, s, s);
  }
  // each cycle is emitted in canonical form already (least vertex first,
  // smaller direction); sort for a stable overall order
  std::sort(out.begin(), out.end());
  return out;
}

// Separating cycles of length at most max_len.
inline std::vector<Cycle> separating_cycles(const Embedding& g, int max_len,
                                            const EnumLimits& lim = {}) {
  std::vector<Cycle> out;
  for (const Cycle& c : all_simple_cycles(g, max_len, lim))
    if (is_separating(g, c)) out.push_back(c);
  return out;
}

// ---------------------------------------------------------------------------
// Edge width: length of a shortest noncontractible cycle. Found through
// fundamental cycles of breadth-first trees from every root; closed
// walks are split into simple cycles before testing.

namespace detail {

inline void split_closed_walk(const std::vector<int>& walk,
                              std::vector<Cycle>& out) {
  int L = static_cast<int>(walk.size());
  std::map<int, int> first;
  for (int i = 0; i < L; ++i) {
    auto it = first.find(walk[i]);
    if (it != first.end()) {
      int j = it->second;
      std::vector<int> inner(walk.begin() + j, walk.begin() + i);
      std::vector<int> rest(walk.begin(), walk.begin() + j);
      rest.insert(rest.end(), walk.begin() + i, walk.end());
      if (inner.size() >= 3) split_closed_walk(inner, out);
      if (rest.size() >= 3) split_closed_walk(rest, out);
      return;
    }
    first.emplace(walk[i], i);
  }
  if (L >= 3) out.push_back(walk);
}

}  // namespace detail

inline int edge_width(const Embedding& g) {
  if (g.genus() == 0) return kUnbounded;
  std::set<Cycle> tried;
  int best = kUnbounded;
  for (int root = 0; root < g.order(); ++root) {
    std::vector<int> parent(g.order(), -2);
    std::vector<int> order;
    parent[root] = -1;
    order.push_back(root);
    for (size_t h = 0; h < order.size(); ++h) {
      int v = order[h];
      for (int u : g.rotation(v))
        if (parent[u] == -2) {
          parent[u] = v;
          order.push_back(u);
        }
    }
    auto path_to_root = [&](int v) {
      std::vector<int> p;
      for (int x = v; x != -1; x = parent[x]) p.push_back(x);
      return p;  // v ... root
    };
    for (const Edge& e : g.edges()) {
      if (parent[e.u] == e.v || parent[e.v] == e.u) continue;
      std::vector<int> pu = path_to_root(e.u);   // u .. root
      std::vector<int> pv = path_to_root(e.v);   // v .. root
      std::vector<int> walk(pu.rbegin(), pu.rend());  // root .. u
      walk.insert(walk.end(), pv.begin(), pv.end() - 1);  // v .. (excl root)
      std::vector<Cycle> pieces;
      detail::split_closed_walk(walk, pieces);
      for (Cycle& c : pieces) {
        if (static_cast<int>(c.size()) >= best) continue;
        Cycle key = canonical_cycle(c);
        if (!tried.insert(key).second) continue;
        if (!is_contractible(g, c)) best = static_cast<int>(c.size());
      }
    }
  }
  if (best == kUnbounded)
    throw InvariantError("edge_width: no noncontractible cycle on g>0 surface");
  return best;
}

// ---------------------------------------------------------------------------
// Radial construction: vertex-face incidence structure with every
// incidence edge subdivided (keeps the graph simple even when a vertex
// meets a face more than once). Cycle lengths scale by a factor of 4
// relative to face-width units.

struct RadialEmbedding {
  Embedding emb;
  int host_vertices = 0;  // radial indices [0, host_vertices) are host vertices
  int host_faces = 0;     // then [host_vertices, host_vertices+host_faces)
};

inline RadialEmbedding radial_embedding(const Embedding& g) {
  int n = g.order(), F = g.face_count(), A = g.arc_count();
  auto build = [&](bool flip_faces) {
    std::vector<std::vector<int>> rot(n + F + A);
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < g.degree(v); ++i)
        rot[v].push_back(n + F + g.arc_at(v, i));
    for (int f = 0; f < F; ++f) {
      std::vector<int> corners;
      for (int a : g.face_arcs(f)) corners.push_back(n + F + a);
      if (flip_faces) std::reverse(corners.begin(), corners.end());
      rot[n + f] = corners;
    }
    for (int a = 0; a < A; ++a)
      rot[n + F + a] = {g.arc_tail(a), n + g.face_of_arc(a)};
    return Embedding::build(std::move(rot));
  };
  for (bool flip : {false, true}) {
    Embedding r = build(flip);
    if (r.genus() == g.genus()) return {std::move(r), n, F};
  }
  throw InvariantError("radial_embedding: genus mismatch in both orientations");
}

inline int face_width(const Embedding& g) {
  if (g.genus() == 0) return kUnbounded;
  RadialEmbedding r = radial_embedding(g);
  int w = edge_width(r.emb);
  if (w % 4 != 0)
    throw InvariantError("face_width: radial width not divisible by 4");
  return w / 4;
}

inline bool is_short_inseparable(const Embedding& g) {
  int ew = edge_width(g);
  if (ew != kUnbounded && ew <= 4) return false;
  EnumLimits lim;
  lim.max_len = 4;
  lim.vertex_budget = std::max(lim.vertex_budget, g.order());
  return separating_cycles(g, 4, lim).empty();
}

// ---------------------------------------------------------------------------
// Natural partition along a facial cycle C and a generalized chord Q.

struct GeneralizedChord {
  std::vector<int> path;  // v0 .. vk; improper when v0 == vk
  bool improper() const { return path.front() == path.back(); }
};

inline int find_face_of_cycle(const Embedding& g, const Cycle& c) {
  Cycle want = canonical_cycle(c);
  for (int f = 0; f < g.face_count(); ++f) {
    if (g.face_length(f) != static_cast<int>(c.size())) continue;
    if (!g.face_is_cycle(f)) continue;
    if (canonical_cycle(g.face_vertices(f)) == want) return f;
  }
  return -1;
}

inline std::pair<Subgraph, Subgraph> natural_chord_partition(
    const Embedding& g, const Cycle& c, const GeneralizedChord& q) {
  validate_cycle(g, c, "natural_chord_partition");
  int cface = find_face_of_cycle(g, c);
  if (cface < 0)
    throw HypothesisError("natural_chord_partition: C is not facial");
  const std::vector<int>& p = q.path;
  if (p.size() < 2)
    throw HypothesisError("natural_chord_partition: chord too short");
  std::vector<char> onC(g.order(), 0);
  for (int v : c) onC[v] = 1;
  if (!onC[p.front()] || !onC[p.back()])
    throw HypothesisError("natural_chord_partition: chord endpoint off C");
  for (size_t i = 1; i + 1 < p.size(); ++i)
    if (onC[p[i]])
      throw HypothesisError("natural_chord_partition: chord interior meets C");
  if (q.improper() && p.size() < 4)
    throw HypothesisError("natural_chord_partition: improper chord too short");
  std::vector<Edge> qedges;
  Subgraph csub = subgraph_of_cycle(c);
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    if (!g.adjacent(p[i], p[i + 1]))
      throw HypothesisError("natural_chord_partition: chord edge missing");
    Edge e(p[i], p[i + 1]);
    if (csub.has_edge(e))
      throw HypothesisError("natural_chord_partition: chord uses a C edge");
    qedges.push_back(e);
  }

  // Every cycle of C+Q must be contractible.
  std::vector<Cycle> constituent;
  if (q.improper()) {
    constituent.push_back(c);
    constituent.push_back(Cycle(p.begin(), p.end() - 1));
  } else {
    constituent.push_back(c);
    // split C at the chord endpoints into two arcs
    int k = static_cast<int>(c.size());
    int ia = -1, ib = -1;
    for (int i = 0; i < k; ++i) {
      if (c[i] == p.front()) ia = i;
      if (c[i] == p.back()) ib = i;
    }
    Cycle arc1, arc2;
    for (int i = ia; i != ib; i = (i + 1) % k) arc1.push_back(c[i]);
    arc1.push_back(c[ib]);
    for (int i = ib; i != ia; i = (i + 1) % k) arc2.push_back(c[i]);
    arc2.push_back(c[ia]);
    // arc + reversed chord interior
    Cycle cyc1 = arc1, cyc2 = arc2;
    for (size_t i = p.size() - 2; i >= 1; --i) cyc1.push_back(p[i]);
    for (size_t i = 1; i + 1 < p.size(); ++i) cyc2.push_back(p[i]);
    constituent.push_back(cyc1);
    constituent.push_back(cyc2);
  }
  for (const Cycle& cc : constituent)
    if (!is_contractible(g, cc))
      throw HypothesisError(
          "natural_chord_partition: a cycle of C+Q is noncontractible");

  std::vector<Edge> blockers = csub.edges;
  blockers.insert(blockers.end(), qedges.begin(), qedges.end());
  RegionDecomposition d = decompose_by_edges(g, blockers);
  if (d.region_count != 3)
    throw InvariantError("natural_chord_partition: expected 3 regions, got " +
                         std::to_string(d.region_count));
  int cregion = d.region_of_face[cface];
  if (d.region_faces[cregion].size() != 1)
    throw InvariantError("natural_chord_partition: C face region not trivial");
  std::vector<int> others;
  for (int r = 0; r < 3; ++r)
    if (r != cregion) others.push_back(r);
  auto side = [&](int r) {
    Subgraph s;
    s.verts = d.region_verts[r];
    s.edges = d.region_edges[r];
    for (const Edge& e : blockers) {
      int fa = g.face_of_arc(g.arc(e.u, e.v));
      int fb = g.face_of_arc(g.arc(e.v, e.u));
      if (d.region_of_face[fa] == r || d.region_of_face[fb] == r) {
        s.edges.push_back(e);
        s.verts.push_back(e.u);
        s.verts.push_back(e.v);
      }
    }
    s.normalize();
    return s;
  };
  Subgraph g0 = side(others[0]), g1 = side(others[1]);
  Subgraph qsub;
  qsub.verts = p;
  qsub.edges = qedges;
  qsub.normalize();
  Subgraph uni = subgraph_union(g0, g1);
  if (uni != g.whole_graph())
    throw InvariantError("natural_chord_partition: sides do not cover G");
  if (subgraph_intersection(g0, g1) != qsub)
    throw InvariantError("natural_chord_partition: sides do not meet in Q");
  return {g0, g1};
}

// ---------------------------------------------------------------------------
// Embedding surgery.

// Insert edge x-y inside face f of g (at the first corners of x and y on
// that face). The face must contain both vertices and the edge must be new.
inline Embedding add_edge_in_face(const Embedding& g, int f, int x, int y) {
  if (x == y || g.adjacent(x, y))
    throw HypothesisError("add_edge_in_face: edge exists or degenerate");
  int ax = -1, ay = -1;
  for (int a : g.face_arcs(f)) {
    if (ax < 0 && g.arc_tail(a) == x) ax = a;
    if (ay < 0 && g.arc_tail(a) == y) ay = a;
  }
  if (ax < 0 || ay < 0)
    throw HypothesisError("add_edge_in_face: vertex not on face");
  // The corner of x used by arc ax lies between the previous face arc
  // (w -> x) and ax = (x -> z); in rot(x), z directly follows w. Insert y
  // between them, i.e. just before z.
  std::vector<std::vector<int>> rot(g.order());
  for (int v = 0; v < g.order(); ++v) rot[v] = g.rotation(v);
  auto insert_before = [&](int v, int succ, int nb) {
    auto& r = rot[v];
    auto it = std::find(r.begin(), r.end(), succ);
    r.insert(it, nb);
  };
  insert_before(x, g.arc_head(ax), y);
  insert_before(y, g.arc_head(ay), x);
  Embedding out = Embedding::build(std::move(rot), g.labels());
  if (out.genus() != g.genus() || out.face_count() != g.face_count() + 1)
    throw InvariantError("add_edge_in_face: surgery changed the surface");
  return out;
}

// Sub-embedding induced by a vertex subset; throws if disconnected.
struct SubEmbedding {
  Embedding emb;
  std::vector<int> to_host;    // sub index -> host index
  std::vector<int> from_host;  // host index -> sub index or -1
};

inline SubEmbedding extract_induced(const Embedding& g,
                                    const std::vector<int>& keep) {
  std::vector<int> verts(keep);
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<int> from_host(g.order(), -1);
  for (int i = 0; i < static_cast<int>(verts.size()); ++i)
    from_host[verts[i]] = i;
  std::vector<std::vector<int>> rot(verts.size());
  std::vector<long long> labels(verts.size());
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
    labels[i] = g.label(verts[i]);
    for (int nb : g.rotation(verts[i]))
      if (from_host[nb] >= 0) rot[i].push_back(from_host[nb]);
  }
  SubEmbedding s{Embedding::build(std::move(rot), std::move(labels)), verts,
                 from_host};
  return s;
}

// Sub-embedding spanned by an edge set; vertices are the endpoints.
inline SubEmbedding extract_edge_subembedding(const Embedding& g,
                                              const std::vector<Edge>& edges) {
  std::vector<char> keep_edge(g.size(), 0);
  std::vector<int> verts;
  for (const Edge& e : edges) {
    int idx = g.edge_index(e.u, e.v);
    if (idx < 0) throw HypothesisError("extract: edge not in host");
    keep_edge[idx] = 1;
    verts.push_back(e.u);
    verts.push_back(e.v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<int> from_host(g.order(), -1);
  for (int i = 0; i < static_cast<int>(verts.size()); ++i)
    from_host[verts[i]] = i;
  std::vector<std::vector<int>> rot(verts.size());
  std::vector<long long> labels(verts.size());
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
    labels[i] = g.label(verts[i]);
    for (int nb : g.rotation(verts[i]))
      if (from_host[nb] >= 0 && keep_edge[g.edge_index(verts[i], nb)])
        rot[i].push_back(from_host[nb]);
  }
  return {Embedding::build(std::move(rot), std::move(labels)), verts,
          from_host};
}

// The face of a connected sub-embedding whose interior holds a given host
// face. Cutting the host along the sub-embedding's edges yields one region
// per face of the sub-embedding; `host_face` lands in exactly one of them.
inline int corresponding_face(const Embedding& host, const SubEmbedding& sub,
                              int host_face) {
  std::vector<Edge> cut;
  for (const Edge& e : sub.emb.edges())
    cut.push_back(Edge{sub.to_host[e.u], sub.to_host[e.v]});
  RegionDecomposition d = decompose_by_edges(host, cut);
  int target = d.region_of_face[host_face];
  for (int f = 0; f < sub.emb.face_count(); ++f) {
    int a = sub.emb.face_arcs(f)[0];
    int hu = sub.to_host[sub.emb.arc_tail(a)];
    int hv = sub.to_host[sub.emb.arc_head(a)];
    if (d.region_of_face[host.face_of_arc(host.arc(hu, hv))] == target)
      return f;
  }
  throw InvariantError("corresponding_face: host face not reachable");
}

// Connected components of an induced subgraph, as host vertex lists.
inline std::vector<std::vector<int>> induced_components(
    const Embedding& g, const std::vector<int>& keep) {
  std::vector<char> in(g.order(), 0), vis(g.order(), 0);
  for (int v : keep) in[v] = 1;
  std::vector<std::vector<int>> comps;
  for (int s : keep) {
    if (vis[s] || !in[s]) continue;
    std::vector<int> comp, stack{s};
    vis[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u : g.rotation(v))
        if (in[u] && !vis[u]) {
          vis[u] = 1;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

// ---------------------------------------------------------------------------
// Extraction of one closed side of a separating cycle as an embedding of
// its own. The face of the result that stands for the removed side is
// reported as `outer_face`.

struct ExtractedSide {
  Embedding emb;
  std::vector<int> to_host;
  std::vector<int> from_host;
  Cycle boundary;  // the cycle, in sub indices
  int outer_face = -1;
};

inline ExtractedSide extract_cycle_side(const Embedding& g, const Cycle& c,
                                        int side_face) {
  validate_cycle(g, c, "extract_cycle_side");
  RegionDecomposition d = decompose_by_edges(g, cycle_edges(c));
  if (d.region_count != 2)
    throw HypothesisError("extract_cycle_side: cycle does not separate");
  int r = d.region_of_face[side_face];
  std::vector<Edge> edges = d.region_edges[r];
  for (const Edge& e : cycle_edges(c)) edges.push_back(e);
  SubEmbedding sub = extract_edge_subembedding(g, edges);
  ExtractedSide out;
  out.to_host = sub.to_host;
  out.from_host = sub.from_host;
  out.boundary.reserve(c.size());
  for (int v : c) out.boundary.push_back(sub.from_host[v]);
  // Identify the face of the extraction that covers the removed side.
  out.outer_face = -1;
  for (int f = 0; f < sub.emb.face_count(); ++f) {
    int a = sub.emb.face_arcs(f)[0];
    int hu = sub.to_host[sub.emb.arc_tail(a)];
    int hv = sub.to_host[sub.emb.arc_head(a)];
    int hostf = g.face_of_arc(g.arc(hu, hv));
    if (d.region_of_face[hostf] != r) {
      if (out.outer_face >= 0 && out.outer_face != f)
        throw InvariantError("extract_cycle_side: several outside faces");
      out.outer_face = f;
    }
  }
  if (out.outer_face < 0)
    throw InvariantError("extract_cycle_side: no outside face found");
  out.emb = std::move(sub.emb);
  return out;
}

// ---------------------------------------------------------------------------
// Blocks (biconnected components) and cut vertices.

struct BlockDecomposition {
  std::vector<std::vector<Edge>> blocks;
  std::vector<int> cut_vertices;
};

inline BlockDecomposition blocks(const Embedding& g) {
  BlockDecomposition out;
  int n = g.order();
  std::vector<int> num(n, -1), low(n, 0), parent(n, -1);
  std::vector<char> is_cut(n, 0);
  std::vector<Edge> stack;
  int timer = 0;
  auto dfs = [&](auto&& self, int v) -> void {
    num[v] = low[v] = timer++;
    int children = 0;
    for (int u : g.rotation(v)) {
      if (num[u] == -1) {
        ++children;
        parent[u] = v;
        stack.emplace_back(v, u);
        self(self, u);
        low[v] = std::min(low[v], low[u]);
        if ((parent[v] == -1 && children > 1) ||
            (parent[v] != -1 && low[u] >= num[v])) {
          is_cut[v] = 1;
        }
        if (low[u] >= num[v]) {
          std::vector<Edge> blk;
          Edge top(v, u);
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            blk.push_back(e);
            if (e == top) break;
          }
          std::sort(blk.begin(), blk.end());
          out.blocks.push_back(std::move(blk));
        }
      } else if (u != parent[v] && num[u] < num[v]) {
        stack.emplace_back(v, u);
        low[v] = std::min(low[v], num[u]);
      }
    }
  };
  if (n > 0) dfs(dfs, 0);
  for (int v = 0; v < n; ++v)
    if (is_cut[v]) out.cut_vertices.push_back(v);
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

inline bool is_biconnected(const Embedding& g) {
  if (g.order() < 3) return false;
  BlockDecomposition b = blocks(g);
  return b.blocks.size() == 1 && b.cut_vertices.empty();
}

}  // namespace surfcol
