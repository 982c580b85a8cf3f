#pragma once
// Inward coloring over a ring: the boundary-deficiency set, the tightened
// set of a partial front coloring, link colorings, the two halving
// procedures on front subpaths, the one-step halving of the deficiency,
// iterated inward coloring, lens coloring, and the two-boundary frame
// splitting pipeline.
//
// Conventions shared by everything here:
//   - All work happens on the closed designated side of the ring cycle
//     (the cycle plus the region of `inside_face`); distances and balls
//     are measured inside that side only.
//   - The tightened set Tw of a front coloring is scoped to the strict
//     interior of the front: those are the only vertices whose residual
//     lists the next round inherits, and the per-path accounting below
//     is only additive under that scope.
//   - "Residual list" of an uncolored vertex means its list minus the
//     colors of its colored neighbours.

#include <map>
#include <optional>

#include "surfcol/listcolor.hpp"
#include "surfcol/skeleton.hpp"

namespace surfcol {

// ---------------------------------------------------------------------------
// Ring context: a cycle with nonsplit depth at least two, a partial
// boundary coloring whose uncolored part is inert, and interior lists of
// size at least five within the two-ball. Carries the first tower stage
// and the derived front structure used by the halving procedures.

enum class InertCheck { kOracle, kResidual, kSkip };

struct RingContext {
  const Embedding* g = nullptr;
  Cycle c;
  int inside_face = -1;
  ListAssignment lists;
  PartialColoring psi;

  Subgraph side;                      // closed designated side
  std::vector<char> in_side;          // host vertex lies on the closed side
  std::vector<int> dist;              // side-restricted hops from the cycle
  std::vector<std::vector<int>> adj;  // side-restricted adjacency

  Subgraph w1;       // first-stage tower graph
  Cycle c_star;      // its front
  int inside_star = -1;

  std::vector<char> on_c, on_star;
  std::vector<char> star_interior;  // strictly inside the front
  std::vector<int> u_count;         // cycle-neighbour count of side verts
  std::vector<char> mid_down;       // midpoint of an interior witness
  std::vector<int> mid_witness;     // that witness, -1 if none
  std::vector<int> delta2p_c;       // two-path set of the cycle
  std::vector<int> delta2p_star;    // two-path set of the front
  std::vector<int> delta_l_c;       // deficiency set of (cycle, psi)
  std::vector<char> in_delta_l;
  bool certified = false;  // boundary inertness confirmed by the oracle

  int n() const { return static_cast<int>(c.size()); }
};

// The deficiency set of (cycle, coloring): interior two-path vertices
// whose residual list has fewer than three colors.
inline std::vector<int> delta_l(const Embedding& g, const Cycle& c,
                                int inside_face, const ListAssignment& L,
                                const PartialColoring& psi) {
  DeltaSets ds = delta_sets(g, c, inside_face);
  std::vector<int> out;
  for (int v : ds.two_path) {
    if (psi.has(v)) continue;
    ColorSet s = L.at(v);
    for (int u : g.rotation(v))
      if (psi.has(u)) s &= ~(ColorSet{1} << psi.at(u));
    if (colorset_size(s) < 3) out.push_back(v);
  }
  return out;
}

namespace andetail {

inline ColorSet residual_set(const RingContext& ctx, int v,
                             const PartialColoring& extra) {
  ColorSet s = ctx.lists.at(v);
  for (int u : ctx.g->rotation(v)) {
    if (extra.has(u))
      s &= ~(ColorSet{1} << extra.at(u));
    else if (ctx.psi.has(u))
      s &= ~(ColorSet{1} << ctx.psi.at(u));
  }
  return s;
}

inline ColorSet residual_psi(const RingContext& ctx, int v) {
  return residual_set(ctx, v, PartialColoring{});
}

inline std::vector<int> side_bfs(const std::vector<std::vector<int>>& adj,
                                 int order, const std::vector<int>& sources) {
  std::vector<int> dist(order, -1);
  std::vector<int> queue;
  for (int s : sources) {
    dist[s] = 0;
    queue.push_back(s);
  }
  for (size_t h = 0; h < queue.size(); ++h)
    for (int u : adj[queue[h]])
      if (dist[u] < 0) {
        dist[u] = dist[queue[h]] + 1;
        queue.push_back(u);
      }
  return dist;
}

inline void validate_front_path(const RingContext& ctx,
                                const std::vector<int>& q, const char* who) {
  if (q.empty()) throw HypothesisError(std::string(who) + ": empty path");
  for (int v : q) {
    if (v < 0 || v >= ctx.g->order() || !ctx.on_star[v] || ctx.on_c[v])
      throw HypothesisError(std::string(who) +
                            ": path vertex is not on the front off the ring");
  }
  for (size_t i = 0; i < q.size(); ++i)
    for (size_t j = i + 1; j < q.size(); ++j) {
      if (q[i] == q[j])
        throw HypothesisError(std::string(who) + ": repeated path vertex");
      bool adjacent = ctx.g->adjacent(q[i], q[j]);
      if (j == i + 1 && !adjacent)
        throw HypothesisError(std::string(who) + ": path is not connected");
      if (j > i + 1 && adjacent)
        throw HypothesisError(std::string(who) + ": path is not induced");
    }
}

}  // namespace andetail

// The tightened set of a front coloring: uncolored vertices strictly
// inside the front, within two hops of the ring, whose residual list
// under psi and phi has exactly two colors.
inline std::vector<int> tw(const RingContext& ctx, const PartialColoring& phi) {
  std::vector<int> out;
  for (int v : ctx.side.verts) {
    if (!ctx.star_interior[v] || ctx.dist[v] > 2) continue;
    if (ctx.psi.has(v) || phi.has(v)) continue;
    if (colorset_size(andetail::residual_set(ctx, v, phi)) == 2)
      out.push_back(v);
  }
  return out;
}

inline RingContext make_ring_context(const Embedding& g, const Cycle& c,
                                     int inside_face, const ListAssignment& L,
                                     const PartialColoring& psi,
                                     InertCheck check = InertCheck::kOracle) {
  RingContext ctx;
  ctx.g = &g;
  ctx.c = c;
  ctx.inside_face = inside_face;
  ctx.lists = L;
  ctx.psi = psi;
  if (c.size() <= 3)
    throw HypothesisError("ring context: cycle must be longer than three");
  if (L.order() != g.order())
    throw HypothesisError("ring context: list assignment order mismatch");
  int depth = ndepth(g, c, inside_face);
  if (depth < 2)
    throw HypothesisError("ring context: nonsplit depth below two");

  // the closed side and its metrics
  RegionDecomposition d = decompose_by_edges(g, cycle_edges(c));
  int inr = d.region_of_face[inside_face];
  ctx.side = subgraph_of_cycle(c);
  ctx.side.verts.insert(ctx.side.verts.end(), d.region_verts[inr].begin(),
                        d.region_verts[inr].end());
  ctx.side.edges.insert(ctx.side.edges.end(), d.region_edges[inr].begin(),
                        d.region_edges[inr].end());
  ctx.side.normalize();
  ctx.in_side.assign(g.order(), 0);
  for (int v : ctx.side.verts) ctx.in_side[v] = 1;
  ctx.adj.assign(g.order(), {});
  for (const Edge& e : ctx.side.edges) {
    ctx.adj[e.u].push_back(e.v);
    ctx.adj[e.v].push_back(e.u);
  }
  ctx.dist = andetail::side_bfs(ctx.adj, g.order(), c);

  ctx.on_c.assign(g.order(), 0);
  for (int v : c) ctx.on_c[v] = 1;

  // boundary coloring hypotheses
  for (auto& [v, col] : psi.entries())
    if (!ctx.on_c[v])
      throw HypothesisError("ring context: coloring strays off the cycle at " +
                            std::to_string(g.label(v)));
  require_consistent(g, psi, L);
  for (int v : ctx.side.verts)
    if (!ctx.on_c[v] && ctx.dist[v] <= 2 && L.list_size(v) < 5)
      throw HypothesisError("ring context: vertex " +
                            std::to_string(g.label(v)) +
                            " in the two-ball has a list smaller than five");

  // first tower stage and front structure
  auto [w, f] = wk_tower(g, c, inside_face, 1);
  ctx.w1 = std::move(w);
  ctx.c_star = std::move(f);
  if (ctx.c_star.size() != c.size())
    throw InvariantError("ring context: front length drifted");
  ctx.on_star.assign(g.order(), 0);
  for (int v : ctx.c_star) ctx.on_star[v] = 1;
  bool same_cycle = true;
  for (int v : ctx.c_star) same_cycle &= static_cast<bool>(ctx.on_c[v]);
  if (same_cycle) {
    ctx.inside_star = inside_face;
  } else {
    RegionDecomposition ds = decompose_by_edges(g, cycle_edges(ctx.c_star));
    int band = ds.region_of_face[inside_face];
    ctx.inside_star = -1;
    for (int fc = 0; fc < g.face_count() && ctx.inside_star < 0; ++fc)
      if (ds.region_of_face[fc] != band) ctx.inside_star = fc;
    if (ctx.inside_star < 0)
      throw InvariantError("ring context: front bounds no interior");
  }
  ctx.star_interior.assign(g.order(), 0);
  {
    RegionDecomposition ds = decompose_by_edges(g, cycle_edges(ctx.c_star));
    int inner = ds.region_of_face[ctx.inside_star];
    for (int v : ds.region_verts[inner]) ctx.star_interior[v] = 1;
  }

  // no chords of the front inside the closed side
  int n = ctx.n();
  std::vector<int> star_pos(g.order(), -1);
  for (int i = 0; i < n; ++i) star_pos[ctx.c_star[i]] = i;
  for (int i = 0; i < n; ++i)
    for (int u : ctx.adj[ctx.c_star[i]]) {
      int j = star_pos[u];
      if (j < 0) continue;
      int gap = std::abs(i - j);
      if (gap > 1 && gap < n - 1)
        throw HypothesisError("ring context: the front has a chord");
    }

  ctx.u_count.assign(g.order(), 0);
  for (int v : ctx.side.verts)
    for (int u : ctx.adj[v])
      if (ctx.on_c[u]) ++ctx.u_count[v];

  ctx.delta2p_c = delta_sets(g, c, inside_face).two_path;
  for (size_t i = 0; i < ctx.delta2p_c.size(); ++i)
    for (size_t j = i + 1; j < ctx.delta2p_c.size(); ++j)
      if (g.adjacent(ctx.delta2p_c[i], ctx.delta2p_c[j]))
        throw InvariantError("ring context: adjacent two-path vertices");

  ctx.delta2p_star = same_cycle
                         ? ctx.delta2p_c
                         : delta_sets(g, ctx.c_star, ctx.inside_star).two_path;
  ctx.mid_down.assign(g.order(), 0);
  ctx.mid_witness.assign(g.order(), -1);
  if (!same_cycle) {
    skdetail::SideView sv =
        skdetail::make_side(g, ctx.c_star, ctx.inside_star, "ring context");
    for (int y : ctx.delta2p_star) {
      if (ctx.dist[y] > 2)
        throw InvariantError("ring context: front witness beyond two hops");
      std::vector<int> hits = skdetail::cycle_hits(g, sv, y);
      if (hits.size() != 3 || !skdetail::is_two_path(hits, n))
        throw InvariantError("ring context: malformed front witness");
      int mid = ctx.c_star[skdetail::two_path_mid(hits, n)];
      if (ctx.on_c[mid])
        throw InvariantError("ring context: witness midpoint on the ring");
      if (ctx.mid_down[mid])
        throw InvariantError("ring context: twin witnesses share a midpoint");
      int interior_nbrs = 0;
      for (int u : ctx.adj[mid])
        if (ctx.star_interior[u]) ++interior_nbrs;
      if (interior_nbrs != 1)
        throw InvariantError(
            "ring context: midpoint has several interior neighbours");
      ctx.mid_down[mid] = 1;
      ctx.mid_witness[mid] = y;
    }
    for (int v : ctx.c_star)
      if (ctx.mid_down[v] && ctx.u_count[v] == 1)
        throw InvariantError("ring context: one-anchor midpoint");
  }

  // distinct front runs off the ring must be pairwise far apart, or the
  // per-run halving accounts stop being additive
  {
    std::vector<int> run_id(g.order(), -1);
    int start = -1;
    for (int i = 0; i < n && start < 0; ++i)
      if (ctx.on_c[ctx.c_star[i]]) start = i;
    if (start >= 0) {
      int rid = -1, cur = -1;
      for (int k = 1; k <= n; ++k) {
        int v = ctx.c_star[(start + k) % n];
        if (ctx.on_c[v]) {
          cur = -1;
          continue;
        }
        if (cur < 0) cur = ++rid;
        run_id[v] = cur;
      }
      for (int v : ctx.side.verts) {
        int seen = run_id[v];
        for (int u : ctx.adj[v]) {
          int r2 = run_id[u];
          if (r2 < 0) continue;
          if (seen >= 0 && seen != r2)
            throw HypothesisError(
                "ring context: front runs within two hops of each other");
          seen = r2;
        }
      }
    }
  }

  ctx.delta_l_c = delta_l(g, c, inside_face, L, psi);
  ctx.in_delta_l.assign(g.order(), 0);
  for (int v : ctx.delta_l_c) ctx.in_delta_l[v] = 1;

  // inertness of the uncolored boundary
  std::vector<int> zfree;
  for (int v : c)
    if (!psi.has(v)) zfree.push_back(v);
  if (!zfree.empty()) {
    if (check == InertCheck::kOracle) {
      try {
        InertVerdict iv = is_inert(g, ctx.side, zfree, psi, L);
        if (!iv.inert)
          throw HypothesisError(
              "ring context: uncolored boundary part is not inert");
        ctx.certified = true;
      } catch (const BudgetError&) {
        ctx.certified = false;
      }
    } else if (check == InertCheck::kResidual) {
      for (int v : zfree)
        if (colorset_size(andetail::residual_psi(ctx, v)) < 2)
          throw HypothesisError(
              "ring context: uncolored boundary vertex " +
              std::to_string(g.label(v)) + " has no slack");
    }
  } else {
    ctx.certified = true;
  }
  return ctx;
}

// ---------------------------------------------------------------------------
// Link colorings: color both endpoints of a front subpath and every
// interior vertex that is not a witness midpoint, leaving each uncolored
// midpoint with at least two residual colors.

struct LinkConstraint {
  int pin_vertex = -1;
  int pin_color = -1;
  ColorSet front_set = 0, back_set = 0;

  bool is_pin() const { return pin_vertex >= 0; }
  static LinkConstraint pin(int v, int c) {
    LinkConstraint l;
    l.pin_vertex = v;
    l.pin_color = c;
    return l;
  }
  static LinkConstraint ends(ColorSet front, ColorSet back) {
    LinkConstraint l;
    l.front_set = front;
    l.back_set = back;
    return l;
  }
};

namespace andetail {

// Backtracking search for a link coloring with restricted endpoint
// choices. Colors positions left to right; a skipped midpoint must keep
// two residual colors once both its neighbours are fixed.
inline std::optional<PartialColoring> link_search(const RingContext& ctx,
                                                  const std::vector<int>& q,
                                                  ColorSet front,
                                                  ColorSet back) {
  int t = static_cast<int>(q.size());
  std::vector<char> skip(t, 0);
  for (int i = 1; i + 1 < t; ++i) skip[i] = ctx.mid_down[q[i]];
  std::vector<int> chosen(t, -1);
  std::vector<ColorSet> base(t);
  for (int i = 0; i < t; ++i) base[i] = residual_psi(ctx, q[i]);

  auto rec = [&](auto&& self, int i) -> bool {
    if (i == t) return true;
    if (skip[i]) {
      chosen[i] = -1;
      return self(self, i + 1);
    }
    ColorSet options = base[i];
    if (i == 0) options &= front;
    if (i == t - 1) options &= back;
    if (i > 0 && !skip[i - 1] && chosen[i - 1] >= 0)
      options &= ~(ColorSet{1} << chosen[i - 1]);
    while (options) {
      int col = std::countr_zero(options);
      options &= options - 1;
      chosen[i] = col;
      bool ok = true;
      if (i >= 2 && skip[i - 1]) {
        ColorSet left = base[i - 1];
        left &= ~(ColorSet{1} << chosen[i - 2]);
        left &= ~(ColorSet{1} << col);
        ok = colorset_size(left) >= 2;
      }
      if (ok && self(self, i + 1)) return true;
    }
    chosen[i] = -1;
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  PartialColoring out;
  for (int i = 0; i < t; ++i)
    if (!skip[i]) out.set(q[i], chosen[i]);
  return out;
}

}  // namespace andetail

inline PartialColoring link_coloring(const RingContext& ctx,
                                     const std::vector<int>& q,
                                     const LinkConstraint& want) {
  andetail::validate_front_path(ctx, q, "link");
  for (size_t i = 1; i + 1 < q.size(); ++i)
    if (colorset_size(andetail::residual_psi(ctx, q[i])) < 3)
      throw HypothesisError("link: interior vertex " +
                            std::to_string(ctx.g->label(q[i])) +
                            " has fewer than three usable colors");
  ColorSet front, back;
  if (want.is_pin()) {
    if (want.pin_vertex != q.front() && want.pin_vertex != q.back())
      throw HypothesisError("link: pinned vertex is not an endpoint");
    ColorSet pin = ColorSet{1} << want.pin_color;
    bool at_front = want.pin_vertex == q.front();
    if (!(andetail::residual_psi(ctx, want.pin_vertex) & pin))
      throw HypothesisError("link: pinned color is not usable");
    front = at_front ? pin : ~ColorSet{0};
    back = at_front ? ~ColorSet{0} : pin;
  } else {
    if (q.size() < 2)
      throw HypothesisError("link: endpoint sets need a path of length one");
    if (!want.front_set || !want.back_set ||
        colorset_size(want.front_set) + colorset_size(want.back_set) < 4)
      throw HypothesisError("link: endpoint sets too small");
    front = want.front_set;
    back = want.back_set;
  }
  auto got = andetail::link_search(ctx, q, front, back);
  if (!got) throw InvariantError("link: search exhausted its guarantee");
  return *got;
}

// ---------------------------------------------------------------------------
// Halving-procedure output checker. `ceil_mode` selects the rounded-up
// bound used by the pinned procedure; the other one rounds down. The
// inertness clause is certified structurally (each uncolored vertex is a
// witness midpoint keeping two residual colors); pass `oracle` to replay
// it against the exponential definition instead.

struct HalveReport {
  bool ok = true;
  std::string detail;
  explicit operator bool() const { return ok; }
};

inline HalveReport check_halve(const RingContext& ctx,
                               const std::vector<int>& q,
                               const PartialColoring& phi, bool ceil_mode,
                               std::optional<std::pair<int, int>> pin = {},
                               bool oracle = false) {
  HalveReport rep;
  auto fail = [&](std::string why) {
    rep.ok = false;
    rep.detail = std::move(why);
    return rep;
  };
  std::vector<char> on_q(ctx.g->order(), 0);
  for (int v : q) on_q[v] = 1;
  for (auto& [v, col] : phi.entries())
    if (!on_q[v]) return fail("coloring strays off the path");
  try {
    union_colorings(*ctx.g, ctx.psi, phi);
  } catch (const HypothesisError& e) {
    return fail(e.what());
  }
  for (auto& [v, col] : phi.entries())
    if (!colorset_has(ctx.lists.at(v), col))
      return fail("color outside a list");
  std::vector<int> leftovers;
  for (int v : q)
    if (!phi.has(v)) {
      if (!ctx.mid_down[v]) return fail("uncolored non-midpoint vertex");
      leftovers.push_back(v);
      if (colorset_size(andetail::residual_set(ctx, v, phi)) < 2)
        return fail("uncolored midpoint lost its slack");
    }
  if (oracle && !leftovers.empty()) {
    PartialColoring joint = union_colorings(*ctx.g, ctx.psi, phi);
    if (!is_inert(*ctx.g, ctx.side, leftovers, joint, ctx.lists))
      return fail("uncolored set is not inert");
  }
  int dl = 0;
  for (int v : q) dl += ctx.in_delta_l[v];
  int bound = ceil_mode ? (dl + 1) / 2 : dl / 2;
  int twn = static_cast<int>(tw(ctx, phi).size());
  if (twn > bound)
    return fail("tightened set of size " + std::to_string(twn) +
                " exceeds the bound " + std::to_string(bound));
  if (pin) {
    if (!phi.has(pin->first) || phi.at(pin->first) != pin->second)
      return fail("endpoint pin not honored");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// The halving procedures. Both follow the constructive reading of the
// minimal-counterexample analysis: the cases are tried in the order the
// analysis eliminates them, every recursive call strictly shrinks the
// path, and branches the analysis proves empty become hard failures.

namespace andetail {

struct HalveSolver {
  const RingContext& ctx;
  std::map<std::tuple<int, int, int>, PartialColoring> memo_plus;
  int depth = 0;

  explicit HalveSolver(const RingContext& c) : ctx(c) {}

  bool dl(int v) const { return ctx.in_delta_l[v]; }
  bool mid(int v) const { return ctx.mid_down[v]; }
  ColorSet res(int v) const { return residual_psi(ctx, v); }
  ColorSet res(int v, const PartialColoring& phi) const {
    return residual_set(ctx, v, phi);
  }

  static PartialColoring merge(const RingContext& ctx, const PartialColoring& a,
                               const PartialColoring& b) {
    return union_colorings(*ctx.g, a, b);
  }

  PartialColoring validated(const std::vector<int>& q, PartialColoring phi,
                            bool ceil_mode,
                            std::optional<std::pair<int, int>> pin,
                            const char* branch) {
    HalveReport rep = check_halve(ctx, q, phi, ceil_mode, pin);
    if (!rep)
      throw InvariantError(std::string("halve ") + branch +
                           " produced a bad coloring: " + rep.detail);
    return phi;
  }

  // a full proper coloring of a short path with the first vertex pinned
  std::optional<PartialColoring> direct(const std::vector<int>& q,
                                        std::optional<int> pin_front) {
    int t = static_cast<int>(q.size());
    std::vector<int> chosen(t, -1);
    auto rec = [&](auto&& self, int i) -> bool {
      if (i == t) return true;
      ColorSet options = res(q[i]);
      if (i == 0 && pin_front) options &= ColorSet{1} << *pin_front;
      if (i > 0) options &= ~(ColorSet{1} << chosen[i - 1]);
      while (options) {
        int col = std::countr_zero(options);
        options &= options - 1;
        chosen[i] = col;
        if (self(self, i + 1)) return true;
      }
      return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    PartialColoring out;
    for (int i = 0; i < t; ++i) out.set(q[i], chosen[i]);
    return out;
  }

  PartialColoring link_or_die(const std::vector<int>& q, ColorSet front,
                              ColorSet back, const char* branch) {
    auto got = link_search(ctx, q, front, back);
    if (!got)
      throw InvariantError(std::string("halve ") + branch +
                           ": link search exhausted its guarantee");
    return *got;
  }

  static std::vector<int> slice(const std::vector<int>& q, int lo, int hi) {
    return std::vector<int>(q.begin() + lo, q.begin() + hi + 1);
  }
  static std::vector<int> reversed(std::vector<int> q) {
    std::reverse(q.begin(), q.end());
    return q;
  }

  int pick(ColorSet s, const char* branch) const {
    if (!s)
      throw InvariantError(std::string("halve ") + branch +
                           ": no color available");
    return colorset_lowest(s);
  }

  // pinned procedure: a coloring of q in the rounded-up class using
  // `color` on q.front()
  PartialColoring plus(const std::vector<int>& q, int color) {
    auto key = std::make_tuple(q.front(), q.back(), color);
    if (auto it = memo_plus.find(key); it != memo_plus.end()) return it->second;
    if (++depth > 4 * ctx.g->order() + 8)
      throw InvariantError("halve plus recursion failed to shrink");
    PartialColoring out = plus_impl(q, color);
    --depth;
    memo_plus.emplace(key, out);
    return out;
  }

  PartialColoring plus_impl(const std::vector<int>& q, int color) {
    int m = static_cast<int>(q.size());
    if (!colorset_has(res(q.front()), color))
      throw HypothesisError("halve plus: pinned color is not usable");
    std::optional<std::pair<int, int>> pin = std::make_pair(q.front(), color);

    bool dl_off_front = false;
    for (int i = 1; i < m; ++i) dl_off_front |= dl(q[i]);

    // clean tail: a link coloring tightens nothing
    if (!dl_off_front)
      return validated(q,
                       link_or_die(q, ColorSet{1} << color, ~ColorSet{0},
                                   "plus/clean"),
                       true, pin, "plus/clean");

    // short path: any proper coloring tightens at most one vertex
    if (m <= 3) {
      auto got = direct(q, color);
      if (!got)
        throw InvariantError("halve plus: short path admits no coloring");
      return validated(q, *got, true, pin, "plus/short");
    }

    int xm = q[m - 1], xm1 = q[m - 2], xm2 = q[m - 3];

    // free tail vertex: color it after handling the rest
    if (!mid(xm1)) {
      PartialColoring sigma = plus(slice(q, 0, m - 2), color);
      sigma.set(xm, pick(res(xm, sigma), "plus/tail"));
      return validated(q, sigma, true, pin, "plus/tail");
    }

    // tail pair outside the deficiency set: leave the midpoint inert
    if (!dl(xm1) && !dl(xm)) {
      PartialColoring tau = plus(slice(q, 0, m - 3), color);
      ColorSet mid_left = res(xm1, tau);
      ColorSet choices = 0;
      for (int d : colorset_vector(res(xm))) {
        ColorSet kept = mid_left & ~(ColorSet{1} << d);
        if (colorset_size(kept) >= 2) choices |= ColorSet{1} << d;
      }
      tau.set(xm, pick(choices, "plus/pair"));
      return validated(q, tau, true, pin, "plus/pair");
    }

    if (dl(xm2))
      throw InvariantError("halve plus: deficiency next to the tail pair");

    // a one-anchor vertex with a clean tail splits the work off a link
    if (!dl(xm1)) {
      for (int l = 1; l + 1 < m; ++l) {
        if (ctx.u_count[q[l]] != 1) continue;
        bool clean = true;
        for (int j = l + 1; j + 1 < m; ++j) clean &= !dl(q[j]);
        if (!clean) continue;
        std::vector<int> suffix = slice(q, l, m - 1);
        if (!mid(q[l - 1])) {
          PartialColoring phi = plus(slice(q, 0, l - 1), color);
          PartialColoring sigma =
              link_or_die(suffix, res(q[l], phi), ~ColorSet{0}, "plus/anchor");
          return validated(q, merge(ctx, phi, sigma), true, pin,
                           "plus/anchor");
        }
        if (l == 1) continue;  // the pinned front cannot sit under a midpoint
        PartialColoring phi = plus(slice(q, 0, l - 2), color);
        if (dl(q[l - 1])) {
          int d = pick(res(q[l - 1], phi), "plus/anchor-mid");
          PartialColoring sigma =
              link_or_die(suffix, res(q[l]) & ~(ColorSet{1} << d),
                          ~ColorSet{0}, "plus/anchor-mid");
          sigma.set(q[l - 1], d);
          return validated(q, merge(ctx, phi, sigma), true, pin,
                           "plus/anchor-mid");
        }
        ColorSet mid_left = res(q[l - 1], phi);
        ColorSet pair = 0;
        for (int a : colorset_vector(res(q[l])))
          if (colorset_size(mid_left & ~(ColorSet{1} << a)) >= 2)
            pair |= ColorSet{1} << a;
        if (colorset_size(pair) < 2)
          throw InvariantError("halve plus: anchor lost its color pair");
        PartialColoring sigma =
            link_or_die(suffix, pair, ~ColorSet{0}, "plus/anchor-free");
        return validated(q, merge(ctx, phi, sigma), true, pin,
                         "plus/anchor-free");
      }
    }

    // a balanced split point lets both halves recurse
    {
      std::vector<int> prefix_dl(m + 1, 0);
      for (int i = 0; i < m; ++i) prefix_dl[i + 1] = prefix_dl[i] + dl(q[i]);
      for (int l = 1; l + 1 < m; ++l) {
        if (dl(q[l])) continue;
        if (mid(q[l]) && dl(q[l + 1])) continue;
        int left = prefix_dl[l + 1], right = prefix_dl[m] - prefix_dl[l];
        if (left % 2 == 1 && right % 2 == 1) continue;
        if (!mid(q[l])) {
          PartialColoring phi = plus(slice(q, 0, l), color);
          PartialColoring sigma = plus(slice(q, l, m - 1), phi.at(q[l]));
          return validated(q, merge(ctx, phi, sigma), true, pin,
                           "plus/split");
        }
        PartialColoring phi = plus(slice(q, 0, l - 1), color);
        ColorSet mid_left = res(q[l], phi);
        ColorSet choices = 0;
        for (int d : colorset_vector(res(q[l + 1])))
          if (colorset_size(mid_left & ~(ColorSet{1} << d)) >= 2)
            choices |= ColorSet{1} << d;
        PartialColoring sigma =
            plus(slice(q, l + 1, m - 1), pick(choices, "plus/split-mid"));
        return validated(q, merge(ctx, phi, sigma), true, pin,
                         "plus/split-mid");
      }
    }

    int x2 = q[1], x3 = q[2];

    // free second vertex: pin the subpath away from the front color
    if (!mid(x2)) {
      int d = pick(res(x2) & ~(ColorSet{1} << color), "plus/second");
      PartialColoring phi = plus(slice(q, 1, m - 1), d);
      phi.set(q.front(), color);
      return validated(q, phi, true, pin, "plus/second");
    }

    // second pair outside the deficiency set
    if (!dl(x2) && !dl(x3)) {
      ColorSet choices = 0;
      for (int d : colorset_vector(res(x3))) {
        ColorSet kept = res(x2) & ~(ColorSet{1} << color) &
                        ~(ColorSet{1} << d);
        if (colorset_size(kept) >= 2) choices |= ColorSet{1} << d;
      }
      PartialColoring sigma =
          plus(slice(q, 2, m - 1), pick(choices, "plus/second-pair"));
      sigma.set(q.front(), color);
      return validated(q, sigma, true, pin, "plus/second-pair");
    }
    if (dl(x2) && dl(x3))
      throw InvariantError("halve plus: adjacent deficiency pair");

    // five-vertex endgame
    if (m <= 5) {
      if (m != 5 || ctx.u_count[x3] != 1 || !dl(x2))
        throw InvariantError("halve plus: malformed five-vertex endgame");
      int x4 = q[3], x5 = q[4];
      int d = pick(res(x2) & ~(ColorSet{1} << color), "plus/five");
      PartialColoring out;
      out.set(q.front(), color);
      out.set(x2, d);
      if (dl(x4)) {
        out.set(x3, pick(res(x3) & ~(ColorSet{1} << d) & ~res(x4),
                         "plus/five-in"));
        out.set(x5, pick(res(x5) & ~res(x4), "plus/five-in"));
        return validated(q, out, true, pin, "plus/five-in");
      }
      for (int e3 : colorset_vector(res(x3) & ~(ColorSet{1} << d)))
        for (int e5 : colorset_vector(res(x5))) {
          ColorSet kept =
              res(x4) & ~(ColorSet{1} << e3) & ~(ColorSet{1} << e5);
          if (colorset_size(kept) < 2) continue;
          out.set(x3, e3);
          out.set(x5, e5);
          return validated(q, out, true, pin, "plus/five-out");
        }
      throw InvariantError("halve plus: five-vertex endgame found no pair");
    }

    // deficiency exactly at both flanks: one long link through the middle
    {
      std::vector<int> dl_off;
      for (int i = 1; i < m; ++i)
        if (dl(q[i])) dl_off.push_back(q[i]);
      if (dl_off.size() == 2 && dl_off[0] == x2 && dl_off[1] == xm1) {
        int d = pick(res(x2) & ~(ColorSet{1} << color), "plus/flanks");
        ColorSet a = res(x3) & ~(ColorSet{1} << d);
        int f = pick(res(xm) & ~res(xm1), "plus/flanks");
        ColorSet ap = res(xm2) & ~res(xm1);
        PartialColoring sigma =
            link_or_die(slice(q, 2, m - 3), a, ap, "plus/flanks");
        sigma.set(q.front(), color);
        sigma.set(x2, d);
        sigma.set(xm, f);
        return validated(q, sigma, true, pin, "plus/flanks");
      }
    }

    // tail outside the deficiency set with no interior deficiency
    if (!dl(xm1)) {
      for (int i = 1; i + 1 < m; ++i)
        if (dl(q[i]))
          throw InvariantError(
              "halve plus: interior deficiency survived the scans");
      PartialColoring phi = link_or_die(slice(q, 0, m - 2),
                                        ColorSet{1} << color, ~ColorSet{0},
                                        "plus/last");
      phi.set(xm, pick(res(xm, phi), "plus/last"));
      return validated(q, phi, true, pin, "plus/last");
    }

    // tail deficiency: anchor scans near the tail
    {
      bool has_anchor = false;
      for (int i = 1; i + 1 < m; ++i) has_anchor |= ctx.u_count[q[i]] == 1;
      if (!has_anchor) {
        for (int i = 1; i + 2 < m; ++i)
          if (dl(q[i]))
            throw InvariantError("halve plus: anchorless path keeps "
                                 "interior deficiency");
        PartialColoring phi =
            link_or_die(slice(q, 0, m - 3), ColorSet{1} << color,
                        ~ColorSet{0}, "plus/anchorless");
        for (int em1 : colorset_vector(res(xm1, phi)))
          for (int em : colorset_vector(res(xm) & ~(ColorSet{1} << em1))) {
            PartialColoring out = phi;
            out.set(xm1, em1);
            out.set(xm, em);
            return validated(q, out, true, pin, "plus/anchorless");
          }
        throw InvariantError("halve plus: anchorless tail pair failed");
      }
      int xm3 = q[m - 4];
      if (!mid(xm3)) {
        int fprime = pick(res(xm) & ~res(xm1), "plus/deep");
        if (ctx.u_count[xm2] == 1) {
          PartialColoring sigma = plus(slice(q, 0, m - 4), color);
          ColorSet fs = res(xm2, sigma) & ~res(xm1);
          sigma.set(xm2, pick(fs, "plus/deep-anchor"));
          sigma.set(xm, fprime);
          return validated(q, sigma, true, pin, "plus/deep-anchor");
        }
        int r = -1;
        for (int i = m - 3; i >= 1; --i)
          if (ctx.u_count[q[i]] == 1) {
            r = i;
            break;
          }
        if (r < 0)
          throw InvariantError("halve plus: deep case lost its anchor");
        if (dl(q[r]))
          throw InvariantError("halve plus: anchor in the deficiency set");
        int f = pick(res(xm2) & ~res(xm1), "plus/deep");
        if (!mid(q[r - 1])) {
          PartialColoring zeta = plus(slice(q, 0, r - 1), color);
          PartialColoring phi =
              link_or_die(slice(q, r, m - 3), res(q[r], zeta),
                          ColorSet{1} << f, "plus/deep-link");
          PartialColoring out = merge(ctx, zeta, phi);
          out.set(xm, fprime);
          return validated(q, out, true, pin, "plus/deep-link");
        }
        if (r == 1)
          throw InvariantError("halve plus: deep midpoint at the pinned "
                               "front");
        PartialColoring tau = plus(slice(q, 0, r - 2), color);
        if (dl(q[r - 1]))
          throw InvariantError("halve plus: deep midpoint in the "
                               "deficiency set");
        ColorSet mid_left = res(q[r - 1], tau);
        ColorSet pair = 0;
        for (int a : colorset_vector(res(q[r])))
          if (colorset_size(mid_left & ~(ColorSet{1} << a)) >= 2)
            pair |= ColorSet{1} << a;
        if (colorset_size(pair) < 2)
          throw InvariantError("halve plus: deep anchor lost its pair");
        PartialColoring phi =
            link_or_die(slice(q, r, m - 4), pair,
                        res(xm3) & ~(ColorSet{1} << f), "plus/deep-mid");
        PartialColoring out = merge(ctx, tau, phi);
        out.set(xm2, f);
        out.set(xm, fprime);
        return validated(q, out, true, pin, "plus/deep-mid");
      }
    }
    throw InvariantError("halve plus: reached the terminal contradiction");
  }

  // unpinned procedure in the rounded-down class
  PartialColoring minus(const std::vector<int>& q) {
    int m = static_cast<int>(q.size());
    if (m <= 2) {
      auto got = direct(q, std::nullopt);
      if (!got)
        throw InvariantError("halve minus: short path admits no coloring");
      return validated(q, *got, false, {}, "minus/short");
    }
    int xm = q[m - 1], xm1 = q[m - 2], xm2 = q[m - 3];
    if (!mid(xm1)) {
      PartialColoring phi = minus(slice(q, 0, m - 2));
      phi.set(xm, pick(res(xm, phi), "minus/tail"));
      return validated(q, phi, false, {}, "minus/tail");
    }
    if (dl(xm1)) {
      if (dl(xm2) || dl(xm))
        throw InvariantError("halve minus: adjacent deficiency pair");
      int cc = pick(res(xm2) & ~res(xm1), "minus/mid-deficient");
      int d = pick(res(xm) & ~res(xm1), "minus/mid-deficient");
      PartialColoring phi = plus(reversed(slice(q, 0, m - 3)), cc);
      phi.set(xm, d);
      return validated(q, phi, false, {}, "minus/mid-deficient");
    }
    if (!dl(xm)) {
      PartialColoring sigma = minus(slice(q, 0, m - 3));
      ColorSet mid_left = res(xm1, sigma);
      ColorSet choices = 0;
      for (int d : colorset_vector(res(xm)))
        if (colorset_size(mid_left & ~(ColorSet{1} << d)) >= 2)
          choices |= ColorSet{1} << d;
      sigma.set(xm, pick(choices, "minus/pair"));
      return validated(q, sigma, false, {}, "minus/pair");
    }
    // deficient endpoint behind an inert midpoint
    ColorSet last = res(xm);
    for (int cc : colorset_vector(res(xm2))) {
      ColorSet kept = res(xm1) & ~(ColorSet{1} << cc);
      if (kept == last && colorset_size(last) == 2) continue;
      PartialColoring sigma = plus(reversed(slice(q, 0, m - 3)), cc);
      ColorSet mid_left = res(xm1, sigma);
      ColorSet choices = 0;
      for (int d : colorset_vector(res(xm)))
        if (colorset_size(mid_left & ~(ColorSet{1} << d)) >= 2)
          choices |= ColorSet{1} << d;
      if (!choices) continue;
      sigma.set(xm, colorset_lowest(choices));
      return validated(q, sigma, false, {}, "minus/deficient-end");
    }
    throw InvariantError("halve minus: reached the terminal contradiction");
  }
};

}  // namespace andetail

inline PartialColoring halve_plus(const RingContext& ctx,
                                  const std::vector<int>& q, int x, int c) {
  andetail::validate_front_path(ctx, q, "halve plus");
  std::vector<int> path = q;
  if (x == path.back() && path.size() > 1)
    std::reverse(path.begin(), path.end());
  if (x != path.front())
    throw HypothesisError("halve plus: pinned vertex is not an endpoint");
  andetail::HalveSolver solver(ctx);
  return solver.plus(path, c);
}

inline PartialColoring halve_minus(const RingContext& ctx,
                                   const std::vector<int>& q) {
  andetail::validate_front_path(ctx, q, "halve minus");
  andetail::HalveSolver solver(ctx);
  return solver.minus(q);
}

// ---------------------------------------------------------------------------
// One inward step: extend the boundary coloring over the first tower
// stage so the front's deficiency at most halves (rounded up) and the
// uncolored part stays inert.

struct OneStepResult {
  PartialColoring psi_star;
  Cycle front;
  Subgraph w;
  int delta_before = 0;
  int delta_after = 0;
  bool certified = false;
};

namespace andetail {

// components of the front off the ring, as consecutive front subpaths
inline std::vector<std::vector<int>> front_components(const RingContext& ctx) {
  int n = ctx.n();
  int start = -1;
  for (int i = 0; i < n && start < 0; ++i)
    if (ctx.on_c[ctx.c_star[i]]) start = i;
  std::vector<std::vector<int>> out;
  if (start < 0) return out;  // disjoint front: one full cycle, no paths
  std::vector<int> cur;
  for (int k = 1; k <= n; ++k) {
    int v = ctx.c_star[(start + k) % n];
    if (ctx.on_c[v]) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(v);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

inline PartialColoring good_coloring_disjoint(const RingContext& ctx) {
  // the front is the full induced ring of first-hop vertices
  int n = ctx.n();
  if (n <= 4)
    throw HypothesisError("one step: detached front of length at most four");
  HalveSolver solver(ctx);
  auto cyc_path = [&](int skip_lo, int skip_len) {
    std::vector<int> path;
    for (int k = 0; k < n - skip_len; ++k)
      path.push_back(ctx.c_star[(skip_lo + skip_len + k) % n]);
    return path;
  };
  std::vector<int> pos(ctx.g->order(), -1);
  for (int i = 0; i < n; ++i) pos[ctx.c_star[i]] = i;

  // a one-anchor vertex with a free midpoint neighbour
  for (int i = 0; i < n; ++i) {
    int x = ctx.c_star[i];
    if (ctx.u_count[x] != 1) continue;
    for (int step : {1, n - 1}) {
      int xp = ctx.c_star[(i + step) % n];
      if (!ctx.mid_down[xp] || ctx.in_delta_l[xp]) continue;
      ColorSet cand = 0;
      for (int cc : colorset_vector(residual_psi(ctx, x)))
        if (colorset_size(residual_psi(ctx, xp) & ~(ColorSet{1} << cc)) >= 3)
          cand |= ColorSet{1} << cc;
      if (!cand) continue;
      std::vector<int> path = cyc_path(pos[xp], 1);
      int at = path.front() == x ? path.front() : path.back();
      if (path.front() != x && path.back() != x)
        throw InvariantError("one step: anchor drifted off the cut path");
      return solver.plus(at == path.front() ? path
                                            : HalveSolver::reversed(path),
                         colorset_lowest(cand));
    }
  }
  // a one-anchor vertex with some free-side neighbour
  for (int i = 0; i < n; ++i) {
    int x2 = ctx.c_star[i];
    if (ctx.u_count[x2] != 1) continue;
    for (int step : {1, n - 1}) {
      int x1 = ctx.c_star[(i + step) % n];
      int x3 = ctx.c_star[(i + (n - step)) % n];
      if (ctx.mid_down[x1] && ctx.in_delta_l[x1]) continue;
      if (ctx.mid_down[x1]) continue;  // handled by the loop above
      if (!ctx.mid_down[x3]) {
        std::vector<int> path = cyc_path(i, 1);
        PartialColoring sigma = solver.minus(path);
        PartialColoring out = sigma;
        out.set(x2, solver.pick(residual_set(ctx, x2, sigma),
                                "one-step/detached"));
        return out;
      }
      if (!ctx.in_delta_l[x3])
        throw InvariantError("one step: free midpoint escaped the scans");
      int z = ctx.c_star[(i + 2 * (n - step)) % n];
      if (ctx.in_delta_l[z])
        throw InvariantError("one step: adjacent deficiency pair at the cut");
      int cc = solver.pick(residual_psi(ctx, z) & ~residual_psi(ctx, x3),
                           "one-step/detached-mid");
      int skip_lo = (step == 1) ? (i + n - 1) % n : i;
      std::vector<int> path = cyc_path(skip_lo, 2);
      if (path.front() == z)
        ;
      else if (path.back() == z)
        path = HalveSolver::reversed(path);
      else
        throw InvariantError("one step: cut path misses its anchor");
      PartialColoring tau = solver.plus(path, cc);
      ColorSet free2 =
          residual_set(ctx, x2, tau) & ~residual_psi(ctx, x3);
      PartialColoring out = tau;
      out.set(x2, solver.pick(free2, "one-step/detached-mid"));
      return out;
    }
  }
  // every one-anchor vertex is flanked by deficient midpoints
  for (int i = 0; i < n; ++i) {
    int x2 = ctx.c_star[i];
    if (ctx.u_count[x2] != 1) continue;
    int x1 = ctx.c_star[(i + n - 1) % n];
    int x3 = ctx.c_star[(i + 1) % n];
    if (!(ctx.mid_down[x1] && ctx.in_delta_l[x1] && ctx.mid_down[x3] &&
          ctx.in_delta_l[x3]))
      throw InvariantError("one step: detached endgame hypotheses failed");
    int y = ctx.c_star[(i + n - 2) % n];
    int yp = ctx.c_star[(i + 2) % n];
    int cc = solver.pick(residual_psi(ctx, y) & ~residual_psi(ctx, x1),
                         "one-step/detached-final");
    std::vector<int> path = cyc_path((i + n - 1) % n, 3);
    if (path.front() == yp && path.back() == y)
      path = HalveSolver::reversed(path);
    if (path.front() != y || path.back() != yp)
      throw InvariantError("one step: detached endgame path mismatch");
    PartialColoring phi = solver.plus(path, cc);
    PartialColoring out = phi;
    int e3 = solver.pick(residual_set(ctx, x3, phi),
                         "one-step/detached-final");
    out.set(x3, e3);
    ColorSet d2 = residual_set(ctx, x2, out) & ~residual_psi(ctx, x1);
    out.set(x2, solver.pick(d2, "one-step/detached-final"));
    return out;
  }
  throw InvariantError("one step: detached front without an anchor");
}

}  // namespace andetail

inline OneStepResult one_step(const RingContext& ctx) {
  const Embedding& g = *ctx.g;
  OneStepResult res;
  res.front = ctx.c_star;
  res.w = ctx.w1;
  res.delta_before = static_cast<int>(ctx.delta_l_c.size());

  PartialColoring sigma;
  bool shares = false;
  for (int v : ctx.c_star) shares |= static_cast<bool>(ctx.on_c[v]);
  if (shares) {
    andetail::HalveSolver solver(ctx);
    for (const std::vector<int>& comp : andetail::front_components(ctx)) {
      PartialColoring part = solver.minus(comp);
      sigma = union_colorings(g, sigma, part);
    }
  } else {
    sigma = andetail::good_coloring_disjoint(ctx);
  }
  res.psi_star = union_colorings(g, ctx.psi, sigma);

  res.delta_after = static_cast<int>(
      delta_l(g, ctx.c_star, ctx.inside_star, ctx.lists, res.psi_star).size());
  if (res.delta_after > (res.delta_before + 1) / 2)
    throw InvariantError("one step: deficiency failed to halve");

  // structural inertness of everything left uncolored on the stage
  std::vector<int> leftovers;
  for (int v : ctx.w1.verts)
    if (!res.psi_star.has(v)) {
      leftovers.push_back(v);
      if (ctx.on_c[v]) continue;  // covered by the boundary hypothesis
      if (ctx.on_star[v]) {
        if (!ctx.mid_down[v])
          throw InvariantError("one step: uncolored non-midpoint on front");
        if (colorset_size(andetail::residual_set(ctx, v, sigma)) < 2)
          throw InvariantError("one step: front leftover lost its slack");
      } else {
        int deg = static_cast<int>(ctx.adj[v].size());
        if (ctx.lists.list_size(v) - deg < 1)
          throw InvariantError("one step: buried tower vertex out of colors");
      }
    }
  if (leftovers.empty()) {
    res.certified = true;
  } else {
    try {
      InertVerdict iv =
          is_inert(g, ctx.side, leftovers, res.psi_star, ctx.lists);
      if (!iv.inert)
        throw InvariantError("one step: uncolored stage part is not inert");
      res.certified = true;
    } catch (const BudgetError&) {
      res.certified = false;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Iterated inward coloring: repeat the one-step halving until the
// deficiency of the running front drops to at most one, leaving the
// residual interior behind a full-strength boundary.

struct ResidualCertificate {
  std::vector<int> verts;
  bool single = false;
  bool thomassen = false;
};

struct InwardResult {
  PartialColoring psi_star;
  Cycle front;
  Subgraph w;
  int r = 0;
  std::vector<int> delta_chain;
  std::vector<ResidualCertificate> residuals;
  bool certified = false;
};

namespace andetail {

inline std::vector<ResidualCertificate> residual_certificates(
    const Embedding& g, const std::vector<int>& keep,
    const PartialColoring& psi, const ListAssignment& L, int ref_face) {
  std::vector<ResidualCertificate> out;
  ListAssignment reduced(g.order());
  for (int v : keep) {
    ColorSet s = L.at(v);
    for (int u : g.rotation(v))
      if (psi.has(u)) s &= ~(ColorSet{1} << psi.at(u));
    reduced.sets[v] = s;
  }
  for (const std::vector<int>& comp : induced_components(g, keep)) {
    ResidualCertificate cert;
    cert.verts = comp;
    if (comp.size() == 1) {
      cert.single = true;
      cert.thomassen = colorset_size(reduced.at(comp[0])) >= 1;
      out.push_back(std::move(cert));
      continue;
    }
    std::vector<char> inc(g.order(), 0);
    for (int v : comp) inc[v] = 1;
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
      if (inc[e.u] && inc[e.v]) edges.push_back(e);
    SubEmbedding sub = extract_edge_subembedding(g, edges);
    int outer = corresponding_face(g, sub, ref_face);
    ListAssignment sub_lists(sub.emb.order());
    for (int v = 0; v < sub.emb.order(); ++v)
      sub_lists.sets[v] = reduced.at(sub.to_host[v]);
    cert.thomassen = is_thomassen_face(sub.emb, outer, sub_lists);
    out.push_back(std::move(cert));
  }
  return out;
}

}  // namespace andetail

inline InwardResult iterate_inward(const Embedding& g, const Cycle& c,
                                   int inside_face, const PartialColoring& psi,
                                   const ListAssignment& L,
                                   bool strict_depth = false) {
  for (int v : c)
    if (!psi.has(v))
      throw HypothesisError("iterate inward: boundary vertex " +
                            std::to_string(g.label(v)) + " is uncolored");
  int n = static_cast<int>(c.size());
  if (n <= 3)
    throw HypothesisError("iterate inward: cycle must be longer than three");
  int r = std::bit_width(static_cast<unsigned>(n - 1)) + 2;
  int depth = ndepth(g, c, inside_face);
  if (depth < (strict_depth ? r + 2 : r))
    throw HypothesisError("iterate inward: nonsplit depth below " +
                          std::to_string(strict_depth ? r + 2 : r));

  InwardResult res;
  res.r = r;
  PartialColoring acc = psi;
  Cycle front = c;
  int front_inside = inside_face;
  res.delta_chain.push_back(
      static_cast<int>(delta_l(g, c, inside_face, L, psi).size()));
  res.certified = true;

  RingContext ctx = make_ring_context(g, c, inside_face, L, psi,
                                      InertCheck::kSkip);
  // list hypothesis out to the full iteration radius
  for (int v : ctx.side.verts)
    if (!ctx.on_c[v] && ctx.dist[v] <= r && L.list_size(v) < 5)
      throw HypothesisError("iterate inward: vertex " +
                            std::to_string(g.label(v)) +
                            " inside the iteration ball has a short list");

  for (int k = 1; k <= r - 1; ++k) {
    OneStepResult step = one_step(ctx);
    res.certified = res.certified && step.certified;
    acc = union_colorings(g, acc, step.psi_star);
    res.delta_chain.push_back(step.delta_after);
    front = step.front;
    front_inside = ctx.inside_star;
    if (k < r - 1) {
      PartialColoring on_front;
      for (int v : front)
        if (acc.has(v)) on_front.set(v, acc.at(v));
      ctx = make_ring_context(g, front, front_inside, L, on_front,
                              InertCheck::kResidual);
    }
  }
  if (res.delta_chain.back() > 1)
    throw InvariantError("iterate inward: final deficiency above one");

  auto [w, f] = wk_tower(g, c, inside_face, r - 1);
  if (canonical_cycle(f) != canonical_cycle(front))
    throw InvariantError("iterate inward: front drifted from the stage tower");
  res.w = std::move(w);
  res.front = front;
  res.psi_star = acc;

  // residual interior behind the final front
  RegionDecomposition d = decompose_by_edges(g, cycle_edges(front));
  int inner = d.region_of_face[front_inside];
  res.residuals = andetail::residual_certificates(
      g, d.region_verts[inner], acc, L, inside_face);
  for (const ResidualCertificate& cert : res.residuals)
    if (!cert.thomassen)
      throw InvariantError("iterate inward: residual component failed the "
                           "boundary-face test");
  return res;
}

// ---------------------------------------------------------------------------
// Lens coloring: skeletonize the side, color the skeleton from an
// extension over the working ball, then iterate inward on every deep
// skeleton face. The residual components end behind full-strength
// boundaries.

struct Lens {
  const Embedding* g = nullptr;
  Cycle c;
  int inside_face = -1;
  ListAssignment lists;
  PartialColoring psi;
  int level = 0;
};

inline Lens make_lens(const Embedding& g, const Cycle& c, int inside_face,
                      const ListAssignment& L, const PartialColoring& psi,
                      int level) {
  if (level < 0) throw HypothesisError("lens: negative certificate level");
  validate_cycle(g, c, "lens");
  require_consistent(g, psi, L);
  for (auto& [v, col] : psi.entries()) {
    bool on = false;
    for (int u : c) on |= u == v;
    if (!on)
      throw HypothesisError("lens: coloring strays off the boundary");
  }
  if (!is_k_triangulated(g, c, inside_face, level))
    throw HypothesisError("lens: boundary is not triangulated to its level");
  RegionDecomposition d = decompose_by_edges(g, cycle_edges(c));
  int inr = d.region_of_face[inside_face];
  std::vector<std::vector<int>> adj(g.order());
  for (const Edge& e : d.region_edges[inr]) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (const Edge& e : cycle_edges(c)) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> dist = andetail::side_bfs(adj, g.order(), c);
  std::vector<char> on_c(g.order(), 0);
  for (int v : c) on_c[v] = 1;
  for (int v : d.region_verts[inr])
    if (!on_c[v] && dist[v] >= 0 && dist[v] <= level + 1 &&
        L.list_size(v) < 5)
      throw HypothesisError("lens: vertex " + std::to_string(g.label(v)) +
                            " inside the level ball has a short list");
  Lens lens;
  lens.g = &g;
  lens.c = c;
  lens.inside_face = inside_face;
  lens.lists = L;
  lens.psi = psi;
  lens.level = level;
  return lens;
}

struct LensResult {
  Subgraph k_star;
  PartialColoring psi;
  std::vector<ResidualCertificate> residuals;
  bool certified = false;
};

inline LensResult color_lens(const Lens& lens,
                             std::optional<int> n_param = std::nullopt) {
  const Embedding& g = *lens.g;
  int n = n_param.value_or(static_cast<int>(lens.c.size()));
  if (n < static_cast<int>(lens.c.size()))
    throw HypothesisError("lens coloring: parameter below the cycle length");
  for (int v : lens.c)
    if (!lens.psi.has(v))
      throw HypothesisError("lens coloring: boundary coloring must be total");
  int r = std::bit_width(static_cast<unsigned>(n - 1)) + 2;
  int k = r * (n - 3);
  if (lens.level < r * n)
    throw HypothesisError("lens coloring: certificate level below " +
                          std::to_string(r * n));

  // extend the boundary coloring over the working ball
  RegionDecomposition d = decompose_by_edges(g, cycle_edges(lens.c));
  int inr = d.region_of_face[lens.inside_face];
  Subgraph side = subgraph_of_cycle(lens.c);
  side.verts.insert(side.verts.end(), d.region_verts[inr].begin(),
                    d.region_verts[inr].end());
  side.edges.insert(side.edges.end(), d.region_edges[inr].begin(),
                    d.region_edges[inr].end());
  side.normalize();
  std::vector<std::vector<int>> adj(g.order());
  for (const Edge& e : side.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> dist = andetail::side_bfs(adj, g.order(), lens.c);
  Subgraph ball;
  for (int v : side.verts)
    if (dist[v] >= 0 && dist[v] <= r * (n - 1)) ball.verts.push_back(v);
  {
    std::vector<char> inb(g.order(), 0);
    for (int v : ball.verts) inb[v] = 1;
    for (const Edge& e : side.edges)
      if (inb[e.u] && inb[e.v]) ball.edges.push_back(e);
  }
  ball.normalize();
  ListAssignment pinned = lens.lists;
  for (auto& [v, col] : lens.psi.entries())
    pinned.sets[v] = ColorSet{1} << col;
  auto theta = solve(g, ball, pinned);
  if (!theta)
    throw HypothesisError(
        "lens coloring: boundary coloring does not extend over the ball");

  SkeletonResult sk = build_skeleton(g, lens.c, lens.inside_face, k, r);
  LensResult res;
  res.k_star = sk.k_graph;
  for (int v : sk.k_graph.verts) res.psi.set(v, theta->at(v));
  res.certified = true;

  for (const SkeletonFace& face : sk.faces) {
    if (face.cycle.size() <= 3) continue;
    if (ndepth(g, face.cycle, face.inside_face) < r) continue;
    PartialColoring on_d;
    for (int v : face.cycle) on_d.set(v, theta->at(v));
    InwardResult inward =
        iterate_inward(g, face.cycle, face.inside_face, on_d, lens.lists);
    res.certified = res.certified && inward.certified;
    res.k_star = subgraph_union(res.k_star, inward.w);
    for (auto& [v, col] : inward.psi_star.entries())
      if (!res.psi.has(v)) res.psi.set(v, col);
  }
  require_consistent(g, res.psi, lens.lists);

  // the skeleton stays within its ball; the stage towers stay within
  // theirs, so the whole subgraph stays within the lens ball
  for (int v : res.k_star.verts)
    if (dist[v] < 0 || dist[v] > r * n)
      throw InvariantError("lens coloring: subgraph escaped the ball");

  std::vector<char> ink(g.order(), 0);
  for (int v : res.k_star.verts) ink[v] = 1;
  std::vector<int> rest;
  for (int v : side.verts)
    if (!ink[v]) rest.push_back(v);
  res.residuals = andetail::residual_certificates(g, rest, res.psi,
                                                  lens.lists,
                                                  lens.inside_face);
  for (const ResidualCertificate& cert : res.residuals)
    if (!cert.thomassen)
      throw InvariantError("lens coloring: residual component failed the "
                           "boundary-face test");
  std::vector<int> kfree;
  for (int v : res.k_star.verts)
    if (!res.psi.has(v)) kfree.push_back(v);
  if (!kfree.empty()) {
    try {
      InertVerdict iv = is_inert(g, side, kfree, res.psi, lens.lists);
      if (!iv.inert)
        throw InvariantError("lens coloring: uncolored subgraph part is "
                             "not inert");
    } catch (const BudgetError&) {
      res.certified = false;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Frame splitting: cut the host open along a path joining two short
// facial cycles, yielding a disc instance whose boundary concatenates
// both cycles and both copies of the path.

struct SplitFrame {
  Embedding emb;
  Cycle boundary;
  int outer_face = -1;   // face of the doubled boundary
  int inside_face = -1;  // designated coloring side
  std::vector<int> to_host;  // split vertex -> host vertex
  std::vector<int> twin;     // split vertex -> its other copy, -1 if none
  ListAssignment lists;
  PartialColoring tau;
};

namespace andetail {

struct FaceCorner {
  int before = -1, after = -1;  // walk neighbours of v on the face
};

inline FaceCorner corner_at(const Embedding& g, int face, int v) {
  std::vector<int> walk = g.face_vertices(face);
  int m = static_cast<int>(walk.size());
  for (int i = 0; i < m; ++i)
    if (walk[i] == v)
      return {walk[(i + m - 1) % m], walk[(i + 1) % m]};
  throw HypothesisError("frame split: vertex is not on the face");
}

}  // namespace andetail

inline SplitFrame split_frame(const Embedding& g, int f_face, int fp_face,
                              const std::vector<int>& path,
                              const ListAssignment& L,
                              const PartialColoring& phi) {
  if (f_face < 0 || f_face >= g.face_count() || fp_face < 0 ||
      fp_face >= g.face_count() || f_face == fp_face)
    throw HypothesisError("frame split: bad face tokens");
  for (int f : {f_face, fp_face}) {
    if (!g.face_is_cycle(f))
      throw HypothesisError("frame split: frame face is not a cycle");
    if (g.face_length(f) > 4)
      throw HypothesisError("frame split: frame face longer than four");
  }
  int k = static_cast<int>(path.size());
  if (k == 0) throw HypothesisError("frame split: empty path");
  std::vector<char> on_f(g.order(), 0), on_fp(g.order(), 0);
  for (int v : g.face_vertices(f_face)) on_f[v] = 1;
  for (int v : g.face_vertices(fp_face)) on_fp[v] = 1;
  if (!on_f[path.front()] || !on_fp[path.back()])
    throw HypothesisError("frame split: path endpoints miss the frame");
  for (int i = 0; i < k; ++i) {
    if (i + 1 < k && !g.adjacent(path[i], path[i + 1]))
      throw HypothesisError("frame split: path is not connected");
    bool internal = i > 0 && i + 1 < k;
    if (internal && (on_f[path[i]] || on_fp[path[i]]))
      throw HypothesisError("frame split: path re-enters a frame face");
  }
  if (k > 1 && (on_fp[path.front()] || on_f[path.back()]))
    throw HypothesisError("frame split: path endpoint on both frame faces");
  for (int v : g.face_vertices(f_face))
    if (on_fp[v] && !(k == 1 && v == path[0]))
      throw HypothesisError("frame split: frame faces share a vertex");
  for (auto& [v, col] : phi.entries())
    if (!on_f[v] && !on_fp[v] &&
        std::find(path.begin(), path.end(), v) == path.end())
      throw HypothesisError("frame split: coloring strays off the frame");
  require_consistent(g, phi, L);

  int base = g.order();
  std::vector<int> copy(g.order(), -1);  // path vertex -> starred id
  std::vector<int> path_index(g.order(), -1);
  for (int i = 0; i < k; ++i) {
    copy[path[i]] = base + i;
    path_index[path[i]] = i;
  }

  // Side assignment. Cutting along the path leaves each copy of a path
  // vertex a contiguous run of the original rotation, in the original
  // circular order. The primary run starts at the back anchor (previous
  // path vertex; on the first vertex, the successor along the outer
  // frame walk) and ends at the fore anchor (next path vertex; on the
  // last vertex, the predecessor along the inner frame walk). The
  // starred copy takes the complementary run plus the interior path
  // anchors, which belong to both copies.
  std::vector<std::vector<int>> rot(base + k);
  std::vector<std::vector<char>> side_of(g.order());
  for (int v = 0; v < base; ++v)
    if (path_index[v] < 0) rot[v] = g.rotation(v);

  for (int i = 0; i < k; ++i) {
    int v = path[i];
    const std::vector<int>& r = g.rotation(v);
    int deg = static_cast<int>(r.size());
    side_of[v].assign(deg, 0);
    int back =
        i > 0 ? path[i - 1] : andetail::corner_at(g, f_face, v).after;
    int fore =
        i + 1 < k ? path[i + 1] : andetail::corner_at(g, fp_face, v).before;
    int pb = -1, pf = -1;
    for (int j = 0; j < deg; ++j) {
      if (r[j] == back) pb = j;
      if (r[j] == fore) pf = j;
    }
    if (pb < 0 || pf < 0)
      throw InvariantError("frame split: anchor missing from the rotation");
    std::vector<int>& rp = rot[v];
    rp.clear();
    for (int j = pb;; j = (j + 1) % deg) {
      rp.push_back(r[j]);
      if (j == pf) break;
    }
    auto starred_of = [&](int u) { return path_index[u] >= 0 ? copy[u] : u; };
    std::vector<int>& rs = rot[base + i];
    rs.clear();
    if (i + 1 < k) rs.push_back(starred_of(fore));
    for (int j = (pf + 1) % deg; j != pb; j = (j + 1) % deg) {
      side_of[v][j] = 1;
      rs.push_back(starred_of(r[j]));
    }
    if (i > 0) rs.push_back(starred_of(back));
    if (rs.empty())
      throw HypothesisError(
          "frame split: the split vertex has an empty starred side");
  }
  // neighbours replace their path entries per the recorded side
  for (int v = 0; v < base; ++v) {
    if (path_index[v] >= 0) continue;
    const std::vector<int>& orig = g.rotation(v);
    for (size_t j = 0; j < orig.size(); ++j) {
      int u = orig[j];
      if (path_index[u] < 0) continue;
      const std::vector<int>& r = g.rotation(u);
      int pos = -1;
      for (size_t t = 0; t < r.size(); ++t)
        if (r[t] == v) pos = static_cast<int>(t);
      if (pos < 0) throw InvariantError("frame split: rotation mismatch");
      if (side_of[u][pos]) rot[v][j] = copy[u];
    }
  }

  std::vector<long long> labels;
  long long top = 0;
  for (int v = 0; v < base; ++v) top = std::max(top, g.label(v));
  for (int v = 0; v < base; ++v) labels.push_back(g.label(v));
  for (int i = 0; i < k; ++i) labels.push_back(top + 1 + i);

  SplitFrame sf;
  sf.emb = Embedding::build(rot, labels);
  if (sf.emb.genus() != g.genus())
    throw InvariantError("frame split: genus changed");
  sf.to_host.resize(base + k);
  sf.twin.assign(base + k, -1);
  for (int v = 0; v < base; ++v) sf.to_host[v] = v;
  for (int i = 0; i < k; ++i) {
    sf.to_host[base + i] = path[i];
    sf.twin[path[i]] = base + i;
    sf.twin[base + i] = path[i];
  }

  // the doubled boundary: frame minus the first path vertex, the primary
  // row, the inner frame minus the last path vertex, the starred row back
  auto face_path_without = [&](int face, int v) {
    std::vector<int> walk = g.face_vertices(face);
    int m = static_cast<int>(walk.size());
    int at = -1;
    for (int i = 0; i < m; ++i)
      if (walk[i] == v) at = i;
    std::vector<int> out;
    for (int i = 1; i < m; ++i) out.push_back(walk[(at + i) % m]);
    return out;
  };
  std::vector<int> fwalk = face_path_without(f_face, path.front());
  std::vector<int> fpwalk = face_path_without(fp_face, path.back());
  // orient the two rows so consecutive vertices are adjacent
  auto try_boundary = [&](bool flip_rows) {
    Cycle b;
    for (int v : fwalk) b.push_back(v);
    std::vector<int> row1, row2;
    for (int i = 0; i < k; ++i) row1.push_back(flip_rows ? base + i : path[i]);
    for (int i = k - 1; i >= 0; --i)
      row2.push_back(flip_rows ? path[i] : base + i);
    for (int v : row1) b.push_back(v);
    std::vector<int> fp2 = fpwalk;
    if (k >= 1) {
      // the inner frame path must start at a neighbour of the row end
      if (!fp2.empty() && !sf.emb.adjacent(row1.back(), fp2.front()))
        std::reverse(fp2.begin(), fp2.end());
    }
    for (int v : fp2) b.push_back(v);
    for (int v : row2) b.push_back(v);
    return b;
  };
  int outer = -1;
  for (bool flip : {false, true}) {
    Cycle b = try_boundary(flip);
    bool ok = b.size() >= 3;
    for (size_t i = 0; ok && i < b.size(); ++i)
      ok = sf.emb.adjacent(b[i], b[(i + 1) % b.size()]);
    if (!ok) continue;
    int f = find_face_of_cycle(sf.emb, b);
    if (f >= 0) {
      sf.boundary = b;
      outer = f;
      break;
    }
  }
  if (outer < 0)
    throw InvariantError("frame split: doubled boundary is not a face");
  sf.outer_face = outer;
  int a0 = sf.emb.arc(sf.boundary[0], sf.boundary[1]);
  sf.inside_face = sf.emb.face_of_arc(a0) == outer
                       ? sf.emb.face_of_arc(sf.emb.arc_reverse(a0))
                       : sf.emb.face_of_arc(a0);

  sf.lists = ListAssignment(base + k);
  for (int v = 0; v < base; ++v) sf.lists.sets[v] = L.at(v);
  for (int i = 0; i < k; ++i) sf.lists.sets[base + i] = L.at(path[i]);
  for (auto& [v, col] : phi.entries()) {
    sf.tau.set(v, col);
    if (sf.twin[v] >= 0) sf.tau.set(sf.twin[v], col);
  }
  return sf;
}

// Undo a frame split: merge each starred copy back into its original,
// deleting the duplicated path anchors.
inline Embedding unsplit_frame(const SplitFrame& sf, const Embedding& host) {
  int base = host.order();
  int k = sf.emb.order() - base;
  std::vector<std::vector<int>> rot(base);
  for (int v = 0; v < base; ++v) {
    if (sf.twin[v] < 0) {
      rot[v] = sf.emb.rotation(v);
      for (int& u : rot[v])
        if (u >= base) u = sf.to_host[u];
      continue;
    }
    // primary run followed by the starred run restores the circular
    // order; interior path anchors appear on both copies, so the starred
    // run sheds its first entry (the fore anchor) and its last (the back
    // anchor) when those were shared
    int i = sf.twin[v] - base;
    std::vector<int> merged = sf.emb.rotation(v);
    std::vector<int> star = sf.emb.rotation(sf.twin[v]);
    size_t lo = i + 1 < k ? 1 : 0;
    size_t hi = star.size() - (i > 0 ? 1 : 0);
    for (size_t t = lo; t < hi; ++t) merged.push_back(star[t]);
    for (int& u : merged)
      if (u >= base) u = sf.to_host[u];
    // realign with the host's phase so the round trip is bit-exact
    const std::vector<int>& href = host.rotation(v);
    auto at = href.empty() ? merged.end()
                           : std::find(merged.begin(), merged.end(), href[0]);
    if (at == merged.end() || merged.size() != href.size())
      throw InvariantError("frame unsplit: rotations diverged");
    std::rotate(merged.begin(), at, merged.end());
    rot[v] = merged;
  }
  std::vector<long long> labels;
  for (int v = 0; v < base; ++v) labels.push_back(host.label(v));
  return Embedding::build(rot, labels);
}

// ---------------------------------------------------------------------------
// The two-boundary pipeline: split the frame, color the resulting lens,
// and pull the subgraph and coloring back through the identification.

struct AnnulusResult {
  Subgraph k;
  PartialColoring psi;
  std::vector<ResidualCertificate> residuals;
  bool certified = false;
};

inline bool subgraph_two_edge_connected(const Subgraph& s) {
  if (s.verts.empty()) return false;
  std::map<int, std::vector<std::pair<int, int>>> adj;
  for (size_t i = 0; i < s.edges.size(); ++i) {
    adj[s.edges[i].u].push_back({s.edges[i].v, static_cast<int>(i)});
    adj[s.edges[i].v].push_back({s.edges[i].u, static_cast<int>(i)});
  }
  for (int v : s.verts)
    if (adj.find(v) == adj.end()) return false;
  std::map<int, int> num, low;
  int timer = 0;
  bool bridge = false;
  int seen = 0;
  auto dfs = [&](auto&& self, int v, int pedge) -> void {
    num[v] = low[v] = ++timer;
    ++seen;
    for (auto [u, id] : adj[v]) {
      if (id == pedge) continue;
      if (num.count(u)) {
        low[v] = std::min(low[v], num[u]);
      } else {
        self(self, u, id);
        low[v] = std::min(low[v], low[u]);
        if (low[u] > num[v]) bridge = true;
      }
    }
  };
  dfs(dfs, s.verts[0], -1);
  return !bridge && seen == static_cast<int>(s.verts.size());
}

inline AnnulusResult annulus_color(const Embedding& g, int f_face,
                                   int fp_face, const std::vector<int>& path,
                                   const PartialColoring& phi,
                                   const ListAssignment& L) {
  int pedges = static_cast<int>(path.size()) - 1;
  if (pedges < 0) throw HypothesisError("annulus: empty path");
  int n = 2 * pedges + 8;
  int r = std::bit_width(static_cast<unsigned>(n - 1)) + 2;

  // frame vertices and the working ball
  std::vector<int> frame;
  for (int v : g.face_vertices(f_face)) frame.push_back(v);
  for (int v : g.face_vertices(fp_face)) frame.push_back(v);
  for (int v : path) frame.push_back(v);
  std::sort(frame.begin(), frame.end());
  frame.erase(std::unique(frame.begin(), frame.end()), frame.end());
  for (int v : frame)
    if (!phi.has(v))
      throw HypothesisError("annulus: frame vertex " +
                            std::to_string(g.label(v)) + " is uncolored");
  std::vector<int> dist = bfs_distances(g, frame);
  std::vector<char> on_frame_face(g.order(), 0);
  for (int v : g.face_vertices(f_face)) on_frame_face[v] = 1;
  for (int v : g.face_vertices(fp_face)) on_frame_face[v] = 1;
  for (int v = 0; v < g.order(); ++v) {
    if (dist[v] > r * n + 1) continue;
    if (!on_frame_face[v] && L.list_size(v) < 5)
      throw HypothesisError("annulus: vertex " + std::to_string(g.label(v)) +
                            " near the frame has a short list");
  }
  for (int f = 0; f < g.face_count(); ++f) {
    if (f == f_face || f == fp_face || g.face_length(f) == 3) continue;
    for (int v : g.face_vertices(f))
      if (dist[v] <= r * n + 1)
        throw HypothesisError("annulus: non-triangular face near the frame");
  }

  SplitFrame sf = split_frame(g, f_face, fp_face, path, L, phi);
  Lens lens = make_lens(sf.emb, sf.boundary, sf.inside_face, sf.lists,
                        sf.tau, r * n);
  LensResult lr = color_lens(lens, n);

  AnnulusResult res;
  res.certified = lr.certified;
  for (int v : lr.k_star.verts) res.k.verts.push_back(sf.to_host[v]);
  for (const Edge& e : lr.k_star.edges)
    res.k.edges.push_back(Edge(sf.to_host[e.u], sf.to_host[e.v]));
  res.k.normalize();
  for (auto& [v, col] : lr.psi.entries()) {
    int host = sf.to_host[v];
    if (res.psi.has(host) && res.psi.at(host) != col)
      throw InvariantError("annulus: twin colors disagree");
    res.psi.set(host, col);
  }
  for (const ResidualCertificate& cert : lr.residuals) {
    ResidualCertificate mapped = cert;
    for (int v : mapped.verts)
      if (v >= g.order())
        throw InvariantError("annulus: residual touches the split row");
    res.residuals.push_back(std::move(mapped));
  }
  if (!subgraph_two_edge_connected(res.k))
    throw InvariantError("annulus: subgraph is not two-edge-connected");
  for (int v : res.k.verts)
    if (dist[v] > r * n)
      throw InvariantError("annulus: subgraph escaped the frame ball");
  std::vector<char> ink(g.order(), 0);
  for (int v : res.k.verts) ink[v] = 1;
  for (int v : frame)
    if (!ink[v]) throw InvariantError("annulus: frame left the subgraph");
  return res;
}

}  // namespace surfcol
