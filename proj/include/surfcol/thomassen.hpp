#pragma once
// Constructive 5-choosability engines for planar graphs with a designated
// outer cycle: extension from a colorable boundary edge, and extension of
// a fully precolored boundary cycle of length at most four.

#include <functional>
#include <optional>

#include "surfcol/listcolor.hpp"
#include "surfcol/topology.hpp"

namespace surfcol {

// Triangulates every face except `outer_face` by repeatedly inserting a
// chord between two face-distance-2 vertices that are not yet adjacent.
// Vertex ids are preserved; the returned index tracks the outer face.
inline std::pair<Embedding, int> triangulate_internal(const Embedding& g,
                                                      int outer_face) {
  Embedding cur = g;
  int out = outer_face;
  std::vector<int> anchor = cur.face_vertices(out);
  if (anchor.size() < 2)
    throw HypothesisError("triangulate_internal: degenerate outer face");
  int t0 = anchor[0], t1 = anchor[1];
  for (;;) {
    int target = -1;
    for (int f = 0; f < cur.face_count(); ++f)
      if (f != out && cur.face_length(f) > 3) {
        target = f;
        break;
      }
    if (target < 0) break;
    if (!cur.face_is_cycle(target))
      throw HypothesisError("triangulate_internal: internal face not a cycle");
    std::vector<int> vs = cur.face_vertices(target);
    int n = static_cast<int>(vs.size());
    int pick = -1;
    for (int i = 0; i < n; ++i)
      if (!cur.has_edge(vs[i], vs[(i + 2) % n])) {
        pick = i;
        break;
      }
    if (pick < 0)
      throw InvariantError("triangulate_internal: no chordable pair");
    cur = add_edge_in_face(cur, target, vs[pick], vs[(pick + 2) % n]);
    out = cur.face_of_arc(cur.arc(t0, t1));
  }
  return {std::move(cur), out};
}

namespace thdetail {

struct ColorSink {
  std::vector<int>* color;  // indexed by the original host
  void assign(int host_v, int c) {
    int& slot = (*color)[host_v];
    if (slot >= 0 && slot != c)
      throw InvariantError("coloring recursion contradicted itself");
    slot = c;
  }
  int get(int host_v) const { return (*color)[host_v]; }
};

inline std::vector<int> rotate_to(const std::vector<int>& walk, int first) {
  auto it = std::find(walk.begin(), walk.end(), first);
  if (it == walk.end())
    throw InvariantError("rotate_to: vertex not on walk");
  std::vector<int> out(it, walk.end());
  out.insert(out.end(), walk.begin(), it);
  return out;
}

inline int lowest_two(ColorSet s, int* second) {
  int a = colorset_lowest(s);
  s &= s - 1;
  *second = colorset_lowest(s);
  return a;
}

// Core recursion on a 2-connected near-triangulation. walk = outer cycle
// in face-trace order; walk[0], walk[1] carry colors a, b. Every other
// walk vertex has a list of size >= 3, interior vertices >= 5.
inline void tri_rec(const Embedding& g, std::vector<int> walk, int a, int b,
                    std::vector<ColorSet> lists, const std::vector<int>& hostof,
                    ColorSink& sink) {
  int k = static_cast<int>(walk.size());
  if (k < 3) throw InvariantError("tri_rec: outer walk shorter than 3");
  int x = walk[0], y = walk[1];
  {  // sanity: walk really is the trace of the face left of x->y
    int f = g.face_of_arc(g.arc(x, y));
    if (g.face_length(f) != k || rotate_to(g.face_vertices(f), x) != walk)
      throw InvariantError("tri_rec: walk is not the outer face trace");
  }
  sink.assign(hostof[x], a);
  sink.assign(hostof[y], b);

  if (g.order() == 3) {
    int z = walk[2];
    ColorSet avail = lists[z] & ~(ColorSet{1} << a) & ~(ColorSet{1} << b);
    if (!avail) throw InvariantError("tri_rec: triangle tip starved");
    sink.assign(hostof[z], colorset_lowest(avail));
    return;
  }

  // chord case: split along the lex-least chord of the outer cycle
  int ci = -1, cj = -1;
  Edge best{0, 0};
  for (int i = 0; i < k; ++i)
    for (int j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      if (!g.has_edge(walk[i], walk[j])) continue;
      Edge e{walk[i], walk[j]};
      if (ci < 0 || e < best) {
        best = e;
        ci = i;
        cj = j;
      }
    }
  if (ci >= 0) {
    Cycle inner(walk.begin() + ci, walk.begin() + cj + 1);
    Cycle rest(walk.begin() + cj, walk.end());
    rest.insert(rest.end(), walk.begin(), walk.begin() + ci + 1);
    const Cycle& withxy = (ci == 0) ? inner : rest;
    const Cycle& other = (ci == 0) ? rest : inner;
    int outer = g.face_of_arc(g.arc(x, y));

    auto descend = [&](const Cycle& cyc, int px, int py, int pa, int pb) {
      RegionDecomposition d = decompose_by_edges(g, cycle_edges(cyc));
      if (d.region_count != 2)
        throw InvariantError("tri_rec: chord cycle fails to separate");
      int inside = 1 - d.region_of_face[outer];
      ExtractedSide side =
          extract_cycle_side(g, cyc, d.region_faces[inside][0]);
      std::vector<int> w2 = side.emb.face_vertices(side.outer_face);
      w2 = rotate_to(w2, side.from_host[px]);
      int sy = side.from_host[py];
      if (w2[1] != sy) {
        std::swap(px, py);
        std::swap(pa, pb);
        w2 = rotate_to(w2, side.from_host[px]);
        if (w2[1] != side.from_host[py])
          throw InvariantError("tri_rec: colored pair split by extraction");
      }
      std::vector<ColorSet> l2(side.to_host.size());
      std::vector<int> h2(side.to_host.size());
      for (size_t i = 0; i < side.to_host.size(); ++i) {
        l2[i] = lists[side.to_host[i]];
        h2[i] = hostof[side.to_host[i]];
      }
      tri_rec(side.emb, std::move(w2), pa, pb, std::move(l2), h2, sink);
    };

    descend(withxy, x, y, a, b);
    int u = walk[ci], v = walk[cj];
    descend(other, u, v, sink.get(hostof[u]), sink.get(hostof[v]));
    return;
  }

  // no chord: delete the outer neighbour of x opposite y, reserving two of
  // its colors from the interior fan it exposes
  int w = walk[k - 1], p = walk[k - 2];
  const std::vector<int>& rotw = g.rotation(w);
  int d = static_cast<int>(rotw.size());
  if (d < 3) throw InvariantError("tri_rec: boundary vertex of degree 2");
  std::vector<int> fan = rotate_to(rotw, x);
  if (fan.back() != p)
    throw InvariantError("tri_rec: fan does not close at the walk");
  ColorSet reserve_from = lists[w] & ~(ColorSet{1} << a);
  if (colorset_size(reserve_from) < 2)
    throw InvariantError("tri_rec: fewer than two reserve colors");
  int ra, rb;
  ra = lowest_two(reserve_from, &rb);
  ColorSet strip = ~((ColorSet{1} << ra) | (ColorSet{1} << rb));
  for (size_t i = 1; i + 1 < fan.size(); ++i) lists[fan[i]] &= strip;

  std::vector<int> keep;
  for (int v = 0; v < g.order(); ++v)
    if (v != w) keep.push_back(v);
  SubEmbedding sub = extract_induced(g, keep);
  std::vector<int> w2 = sub.emb.face_vertices(
      sub.emb.face_of_arc(sub.emb.arc(sub.from_host[x], sub.from_host[y])));
  w2 = rotate_to(w2, sub.from_host[x]);
  if (w2[1] != sub.from_host[y])
    throw InvariantError("tri_rec: lost the colored pair after deletion");
  std::vector<ColorSet> l2(sub.to_host.size());
  std::vector<int> h2(sub.to_host.size());
  for (size_t i = 0; i < sub.to_host.size(); ++i) {
    l2[i] = lists[sub.to_host[i]];
    h2[i] = hostof[sub.to_host[i]];
  }
  tri_rec(sub.emb, std::move(w2), a, b, std::move(l2), h2, sink);

  int pc = sink.get(hostof[p]);
  int cw = (ra == pc) ? rb : ra;
  sink.assign(hostof[w], cw);
}

// One 2-connected piece: triangulate, orient the walk at the colored
// edge, recurse.
inline void color_two_connected(const Embedding& g, int outer_face, int x,
                                int y, int a, int b,
                                std::vector<ColorSet> lists,
                                const std::vector<int>& hostof,
                                ColorSink& sink) {
  auto [tg, tout] = triangulate_internal(g, outer_face);
  std::vector<int> walk = tg.face_vertices(tout);
  std::vector<int> w2 = rotate_to(walk, x);
  if (w2[1] == y) {
    tri_rec(tg, std::move(w2), a, b, std::move(lists), hostof, sink);
    return;
  }
  w2 = rotate_to(walk, y);
  if (w2[1] != x)
    throw HypothesisError("colored edge is not on the outer cycle");
  tri_rec(tg, std::move(w2), b, a, std::move(lists), hostof, sink);
}

struct RootEdge {
  int x, y, a, b;
};

// Connected planar driver: splits into blocks, colors the root block from
// its forced edge (or a least boundary edge), then walks the block tree
// outward, rooting each further block at its already-colored cut vertex.
inline void color_planar_connected(const Embedding& g, int outer_face,
                                   std::vector<ColorSet> lists,
                                   std::optional<RootEdge> root,
                                   const std::vector<int>& hostof,
                                   ColorSink& sink) {
  if (g.order() == 1) {
    if (!lists[0]) throw InvariantError("isolated vertex with empty list");
    sink.assign(hostof[0], colorset_lowest(lists[0]));
    return;
  }
  BlockDecomposition bd = blocks(g);
  int nb = static_cast<int>(bd.blocks.size());
  std::vector<std::vector<int>> verts_of(nb);
  for (int i = 0; i < nb; ++i) {
    std::vector<int>& vs = verts_of[i];
    for (const Edge& e : bd.blocks[i]) {
      vs.push_back(e.u);
      vs.push_back(e.v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  }
  std::vector<std::vector<int>> blocks_at(g.order());
  for (int i = 0; i < nb; ++i)
    for (int v : verts_of[i]) blocks_at[v].push_back(i);

  int root_block = -1;
  if (root) {
    Edge re{root->x, root->y};
    for (int i = 0; i < nb && root_block < 0; ++i)
      for (const Edge& e : bd.blocks[i])
        if (e == re) {
          root_block = i;
          break;
        }
    if (root_block < 0)
      throw InvariantError("root edge missing from every block");
  } else {
    Edge least = bd.blocks[0][0];
    root_block = 0;
    for (int i = 1; i < nb; ++i)
      if (bd.blocks[i][0] < least) {
        least = bd.blocks[i][0];
        root_block = i;
      }
  }

  auto color_block = [&](int bi, int attach) {
    const std::vector<Edge>& es = bd.blocks[bi];
    if (es.size() == 1) {  // bridge: greedy on the endpoints
      if (root && bi == root_block) {
        sink.assign(hostof[root->x], root->a);
        sink.assign(hostof[root->y], root->b);
        return;
      }
      for (int v : {std::min(es[0].u, es[0].v), std::max(es[0].u, es[0].v)}) {
        if (sink.get(hostof[v]) >= 0) continue;
        ColorSet avail = lists[v];
        int other = es[0].u == v ? es[0].v : es[0].u;
        int oc = sink.get(hostof[other]);
        if (oc >= 0) avail &= ~(ColorSet{1} << oc);
        if (!avail) throw InvariantError("bridge endpoint starved");
        sink.assign(hostof[v], colorset_lowest(avail));
      }
      return;
    }
    SubEmbedding sub = extract_edge_subembedding(g, es);
    int bout = corresponding_face(g, sub, outer_face);
    std::vector<ColorSet> l2(sub.to_host.size());
    std::vector<int> h2(sub.to_host.size());
    for (size_t i = 0; i < sub.to_host.size(); ++i) {
      l2[i] = lists[sub.to_host[i]];
      h2[i] = hostof[sub.to_host[i]];
    }
    if (root && bi == root_block) {
      color_two_connected(sub.emb, bout, sub.from_host[root->x],
                          sub.from_host[root->y], root->a, root->b,
                          std::move(l2), h2, sink);
      return;
    }
    std::vector<int> walk = sub.emb.face_vertices(bout);
    int k = static_cast<int>(walk.size());
    int sx, sy, ca, cb;
    if (attach >= 0) {
      sx = sub.from_host[attach];
      ca = sink.get(hostof[attach]);
      if (ca < 0) throw InvariantError("attachment vertex not yet colored");
      int pos = static_cast<int>(
          std::find(walk.begin(), walk.end(), sx) - walk.begin());
      if (pos == k)
        throw InvariantError("attachment vertex off the block boundary");
      int n1 = walk[(pos + 1) % k], n2 = walk[(pos + k - 1) % k];
      sy = (sub.to_host[n1] < sub.to_host[n2]) ? n1 : n2;
      ColorSet avail = l2[sy] & ~(ColorSet{1} << ca);
      if (!avail) throw InvariantError("block root neighbour starved");
      cb = colorset_lowest(avail);
    } else {
      // free block: lex-least boundary edge, lowest proper pair
      int bi2 = 0;
      Edge least{sub.to_host[walk[0]], sub.to_host[walk[1]]};
      for (int i = 1; i < k; ++i) {
        Edge e{sub.to_host[walk[i]], sub.to_host[walk[(i + 1) % k]]};
        if (e < least) {
          least = e;
          bi2 = i;
        }
      }
      sx = walk[bi2];
      sy = walk[(bi2 + 1) % k];
      if (sub.to_host[sx] > sub.to_host[sy]) std::swap(sx, sy);
      if (!l2[sx]) throw InvariantError("boundary vertex with empty list");
      ca = colorset_lowest(l2[sx]);
      ColorSet avail = l2[sy] & ~(ColorSet{1} << ca);
      if (!avail) throw InvariantError("boundary edge not colorable");
      cb = colorset_lowest(avail);
    }
    color_two_connected(sub.emb, bout, sx, sy, ca, cb, std::move(l2), h2,
                        sink);
  };

  std::vector<char> done(nb, 0);
  std::vector<std::pair<int, int>> queue{{root_block, -1}};
  done[root_block] = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    auto [bi, attach] = queue[qi];
    color_block(bi, attach);
    for (int v : verts_of[bi])
      for (int b2 : blocks_at[v])
        if (!done[b2]) {
          done[b2] = 1;
          queue.emplace_back(b2, v);
        }
  }
  for (int i = 0; i < nb; ++i)
    if (!done[i]) throw InvariantError("unreached block");
}

}  // namespace thdetail

// ---------------------------------------------------------------------------
// Boundary-edge extension: G planar with outer facial cycle C, xy an edge
// of C with a proper color pair available, lists of size >= 3 on C minus
// {x,y} and >= 5 inside. Returns a total proper list coloring. A forced
// color pair for xy may be supplied as (color of min(x,y), color of the
// other endpoint).
inline PartialColoring thomassen_extend(
    const Embedding& g, int outer_face, Edge xy, const ListAssignment& L,
    std::optional<std::pair<int, int>> forced = std::nullopt) {
  if (g.genus() != 0) throw HypothesisError("thomassen_extend: nonzero genus");
  if (outer_face < 0 || outer_face >= g.face_count())
    throw HypothesisError("thomassen_extend: bad outer face index");
  if (!g.face_is_cycle(outer_face))
    throw HypothesisError("thomassen_extend: outer face is not a cycle");
  std::vector<int> C = g.face_vertices(outer_face);
  int k = static_cast<int>(C.size());
  int x = xy.u, y = xy.v;
  bool on_cycle = false;
  for (int i = 0; i < k; ++i) {
    int u = C[i], v = C[(i + 1) % k];
    if (Edge{u, v} == Edge{x, y}) on_cycle = true;
  }
  if (!on_cycle)
    throw HypothesisError("thomassen_extend: edge not on the outer cycle");

  int a = -1, b = -1;
  if (forced) {
    a = forced->first;
    b = forced->second;
    if (a == b || !colorset_has(L.at(x), a) || !colorset_has(L.at(y), b))
      throw HypothesisError("thomassen_extend: forced pair is not proper");
  } else {
    for (int ca : colorset_vector(L.at(x))) {
      ColorSet rest = L.at(y) & ~(ColorSet{1} << ca);
      if (rest) {
        a = ca;
        b = colorset_lowest(rest);
        break;
      }
    }
    if (a < 0)
      throw HypothesisError("thomassen_extend: edge " + std::to_string(g.label(x)) +
                            "-" + std::to_string(g.label(y)) +
                            " is not list-colorable");
  }
  std::vector<char> onC(g.order(), 0);
  for (int v : C) onC[v] = 1;
  for (int v : C)
    if (v != x && v != y && L.list_size(v) < 3)
      throw HypothesisError("thomassen_extend: outer vertex " +
                            std::to_string(g.label(v)) +
                            " has a list smaller than 3");
  for (int v = 0; v < g.order(); ++v)
    if (!onC[v] && L.list_size(v) < 5)
      throw HypothesisError("thomassen_extend: interior vertex " +
                            std::to_string(g.label(v)) +
                            " has a list smaller than 5");

  std::vector<int> color(g.order(), -1);
  thdetail::ColorSink sink{&color};
  std::vector<int> identity(g.order());
  for (int v = 0; v < g.order(); ++v) identity[v] = v;
  thdetail::color_planar_connected(g, outer_face, L.sets,
                                   thdetail::RootEdge{x, y, a, b}, identity,
                                   sink);
  PartialColoring out;
  for (int v = 0; v < g.order(); ++v) {
    if (color[v] < 0) throw InvariantError("thomassen_extend: vertex missed");
    out.set(v, color[v]);
  }
  require_consistent(g, out, L);
  return out;
}

// ---------------------------------------------------------------------------
// Short-cycle extension: outer cycle of length <= 4 fully precolored,
// interior lists >= 5. Deletes the boundary, greedily settles residual
// vertices left with fewer than three usable colors, then runs the
// boundary-edge engine per component and block; if the greedy order dead-
// ends, falls back to the exact solver on the residue.
inline PartialColoring extend_short_cycle(const Embedding& g, int outer_face,
                                          const PartialColoring& phi,
                                          const ListAssignment& L) {
  if (g.genus() != 0)
    throw HypothesisError("extend_short_cycle: nonzero genus");
  if (!g.face_is_cycle(outer_face))
    throw HypothesisError("extend_short_cycle: outer face is not a cycle");
  std::vector<int> C = g.face_vertices(outer_face);
  if (C.size() > 4)
    throw HypothesisError("extend_short_cycle: outer cycle longer than four");
  std::vector<char> onC(g.order(), 0);
  for (int v : C) onC[v] = 1;
  for (int v : C)
    if (!phi.has(v))
      throw HypothesisError("extend_short_cycle: boundary vertex " +
                            std::to_string(g.label(v)) + " is uncolored");
  for (auto& [v, c] : phi.entries())
    if (!onC[v])
      throw HypothesisError("extend_short_cycle: coloring strays off the "
                            "boundary cycle at vertex " +
                            std::to_string(g.label(v)));
  require_consistent(g, phi, L);
  for (int v = 0; v < g.order(); ++v)
    if (!onC[v] && L.list_size(v) < 5)
      throw HypothesisError("extend_short_cycle: interior vertex " +
                            std::to_string(g.label(v)) +
                            " has a list smaller than 5");

  std::vector<int> color(g.order(), -1);
  for (auto& [v, c] : phi.entries()) color[v] = c;

  // lists after deleting the colored boundary
  std::vector<ColorSet> base(g.order(), 0);
  for (int v = 0; v < g.order(); ++v) {
    if (onC[v]) continue;
    ColorSet s = L.at(v);
    for (int u : g.rotation(v))
      if (color[u] >= 0) s &= ~(ColorSet{1} << color[u]);
    base[v] = s;
  }

  auto structured = [&](std::vector<int>& col) -> bool {
    std::vector<ColorSet> li = base;
    auto uncolored = [&](int v) { return !onC[v] && col[v] < 0; };
    for (;;) {  // greedy pass over starved vertices
      int pick = -1;
      for (int v = 0; v < g.order(); ++v)
        if (uncolored(v) && colorset_size(li[v]) < 3) {
          pick = v;
          break;
        }
      if (pick < 0) break;
      if (!li[pick]) return false;
      int c = colorset_lowest(li[pick]);
      col[pick] = c;
      for (int u : g.rotation(pick))
        if (uncolored(u)) li[u] &= ~(ColorSet{1} << c);
    }
    std::vector<int> rest;
    for (int v = 0; v < g.order(); ++v)
      if (uncolored(v)) rest.push_back(v);
    if (rest.empty()) return true;
    thdetail::ColorSink sink{&col};
    for (const std::vector<int>& comp : induced_components(g, rest)) {
      if (comp.size() == 1) {
        sink.assign(comp[0], colorset_lowest(li[comp[0]]));
        continue;
      }
      SubEmbedding sub = extract_induced(g, comp);
      int cout = corresponding_face(g, sub, outer_face);
      std::vector<ColorSet> l2(sub.to_host.size());
      for (size_t i = 0; i < sub.to_host.size(); ++i)
        l2[i] = li[sub.to_host[i]];
      try {
        thdetail::color_planar_connected(sub.emb, cout, std::move(l2),
                                         std::nullopt, sub.to_host, sink);
      } catch (const Error&) {
        return false;
      }
    }
    return true;
  };

  std::vector<int> attempt = color;
  if (!structured(attempt)) {
    // exact fallback on the residue
    Subgraph rest;
    for (int v = 0; v < g.order(); ++v)
      if (!onC[v]) rest.verts.push_back(v);
    for (const Edge& e : g.edges())
      if (!onC[e.u] && !onC[e.v]) rest.edges.push_back(e);
    ListAssignment rl(g.order());
    rl.sets = base;
    std::optional<PartialColoring> sol = solve(g, rest, rl);
    if (!sol)
      throw InvariantError(
          "extend_short_cycle: no extension exists although the hypotheses "
          "were validated");
    attempt = color;
    for (auto& [v, c] : sol->entries()) attempt[v] = c;
  }

  PartialColoring out;
  for (int v = 0; v < g.order(); ++v) {
    if (attempt[v] < 0)
      throw InvariantError("extend_short_cycle: vertex missed");
    out.set(v, attempt[v]);
  }
  require_consistent(g, out, L);
  return out;
}

}  // namespace surfcol
