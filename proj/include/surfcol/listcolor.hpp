#pragma once
// List assignments, partial colorings, list reduction, the brute-force
// coloring oracle, and inert-set checking.

#include <bit>
#include <cstdint>
#include <map>
#include <optional>

#include "surfcol/embedding.hpp"

namespace surfcol {

// Colors are small nonnegative integers held in 64-bit sets.
using ColorSet = std::uint64_t;

inline ColorSet colorset_from(const std::vector<int>& colors) {
  ColorSet s = 0;
  for (int c : colors) {
    if (c < 0 || c >= 64) throw HypothesisError("color outside [0,63]");
    s |= ColorSet{1} << c;
  }
  return s;
}

inline std::vector<int> colorset_vector(ColorSet s) {
  std::vector<int> out;
  while (s) {
    int c = std::countr_zero(s);
    out.push_back(c);
    s &= s - 1;
  }
  return out;
}

inline int colorset_size(ColorSet s) { return std::popcount(s); }
inline bool colorset_has(ColorSet s, int c) { return (s >> c) & 1; }
inline int colorset_lowest(ColorSet s) {
  if (!s) throw InvariantError("lowest color of an empty set");
  return std::countr_zero(s);
}

struct ListAssignment {
  std::vector<ColorSet> sets;

  ListAssignment() = default;
  explicit ListAssignment(int n) : sets(n, 0) {}
  static ListAssignment uniform(int n, const std::vector<int>& colors) {
    ListAssignment l(n);
    ColorSet s = colorset_from(colors);
    for (auto& x : l.sets) x = s;
    return l;
  }
  static ListAssignment from_lists(const std::vector<std::vector<int>>& ls) {
    ListAssignment l(static_cast<int>(ls.size()));
    for (size_t v = 0; v < ls.size(); ++v) l.sets[v] = colorset_from(ls[v]);
    return l;
  }
  int order() const { return static_cast<int>(sets.size()); }
  ColorSet at(int v) const { return sets[v]; }
  int list_size(int v) const { return colorset_size(sets[v]); }
};

class PartialColoring {
 public:
  PartialColoring() = default;
  explicit PartialColoring(std::map<int, int> m) : m_(std::move(m)) {}

  bool has(int v) const { return m_.count(v) > 0; }
  int at(int v) const {
    auto it = m_.find(v);
    if (it == m_.end())
      throw HypothesisError("vertex " + std::to_string(v) + " not colored");
    return it->second;
  }
  int get_or(int v, int dflt) const {
    auto it = m_.find(v);
    return it == m_.end() ? dflt : it->second;
  }
  void set(int v, int c) { m_[v] = c; }
  void erase(int v) { m_.erase(v); }
  std::size_t size() const { return m_.size(); }
  bool empty() const { return m_.empty(); }
  std::vector<int> domain() const {
    std::vector<int> d;
    d.reserve(m_.size());
    for (auto& [v, c] : m_) d.push_back(v);
    return d;
  }
  const std::map<int, int>& entries() const { return m_; }
  friend bool operator==(const PartialColoring&,
                         const PartialColoring&) = default;

 private:
  std::map<int, int> m_;
};

inline bool is_proper(const Embedding& g, const PartialColoring& phi) {
  for (auto& [v, c] : phi.entries())
    for (int u : g.rotation(v))
      if (phi.has(u) && phi.at(u) == c && u > v) return false;
  return true;
}

// Throws (with a witness) unless phi is proper and respects L.
inline void require_consistent(const Embedding& g, const PartialColoring& phi,
                               const ListAssignment& L) {
  for (auto& [v, c] : phi.entries()) {
    if (!colorset_has(L.at(v), c))
      throw HypothesisError("color " + std::to_string(c) + " not in list of " +
                            std::to_string(g.label(v)));
    for (int u : g.rotation(v))
      if (u > v && phi.has(u) && phi.at(u) == c)
        throw HypothesisError("improper coloring on edge " +
                              std::to_string(g.label(v)) + "-" +
                              std::to_string(g.label(u)));
  }
}

inline PartialColoring union_colorings(const Embedding& g,
                                       const PartialColoring& a,
                                       const PartialColoring& b) {
  std::map<int, int> m = a.entries();
  for (auto& [v, c] : b.entries()) {
    auto [it, inserted] = m.emplace(v, c);
    if (!inserted && it->second != c)
      throw HypothesisError("coloring union disagrees at vertex " +
                            std::to_string(g.label(v)));
  }
  PartialColoring out{std::move(m)};
  for (auto& [v, c] : out.entries())
    for (int u : g.rotation(v))
      if (u > v && out.has(u) && out.at(u) == c)
        throw HypothesisError("coloring union conflicts on edge " +
                              std::to_string(g.label(v)) + "-" +
                              std::to_string(g.label(u)));
  return out;
}

// ---------------------------------------------------------------------------
// List reduction per the L^S_phi formula: delete colored vertices outside
// S; kept colored vertices become singletons; uncolored vertices lose the
// colors of their deleted colored neighbours.

struct ReducedProblem {
  std::vector<char> present;  // host vertex kept?
  ListAssignment lists;       // meaningful where present
};

inline ReducedProblem reduce(const Embedding& g, const ListAssignment& L,
                             const PartialColoring& phi,
                             const std::vector<int>& S = {}) {
  require_consistent(g, phi, L);
  std::vector<char> keep_colored(g.order(), 0);
  for (int v : S) keep_colored[v] = 1;
  ReducedProblem r;
  r.present.assign(g.order(), 1);
  r.lists = ListAssignment(g.order());
  for (auto& [v, c] : phi.entries())
    if (!keep_colored[v]) r.present[v] = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (!r.present[v]) continue;
    if (phi.has(v)) {
      r.lists.sets[v] = ColorSet{1} << phi.at(v);
      continue;
    }
    ColorSet s = L.at(v);
    for (int u : g.rotation(v))
      if (phi.has(u) && !r.present[u]) s &= ~(ColorSet{1} << phi.at(u));
    r.lists.sets[v] = s;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Brute-force oracle: deterministic backtracking over a subgraph scope.
// Minimum-remaining-list ordering, ties to the lowest vertex id, colors
// tried in ascending order.

namespace lcdetail {

struct SolveScope {
  std::vector<int> verts;                 // host ids in scope
  std::vector<std::vector<int>> nbrs;     // scope-local adjacency
  std::vector<ColorSet> lists;            // scope-local lists

  SolveScope(const Embedding& g, const Subgraph& sub, const ListAssignment& L)
      : verts(sub.verts) {
    std::vector<int> local(g.order(), -1);
    for (size_t i = 0; i < verts.size(); ++i) local[verts[i]] = (int)i;
    nbrs.resize(verts.size());
    for (const Edge& e : sub.edges) {
      if (local[e.u] < 0 || local[e.v] < 0)
        throw HypothesisError("solve: subgraph edge endpoint outside scope");
      nbrs[local[e.u]].push_back(local[e.v]);
      nbrs[local[e.v]].push_back(local[e.u]);
    }
    lists.reserve(verts.size());
    for (int v : verts) lists.push_back(L.at(v));
  }
};

inline bool solve_rec(const SolveScope& sc, std::vector<ColorSet>& avail,
                      std::vector<int>& color, int uncolored) {
  if (uncolored == 0) return true;
  int pick = -1, best = 65;
  for (size_t i = 0; i < sc.verts.size(); ++i) {
    if (color[i] >= 0) continue;
    int k = colorset_size(avail[i]);
    if (k < best) {
      best = k;
      pick = static_cast<int>(i);
      if (k == 0) return false;
    }
  }
  ColorSet options = avail[pick];
  while (options) {
    int c = std::countr_zero(options);
    options &= options - 1;
    color[pick] = c;
    std::vector<std::pair<int, ColorSet>> undo;
    bool dead = false;
    for (int nb : sc.nbrs[pick])
      if (color[nb] < 0 && colorset_has(avail[nb], c)) {
        undo.emplace_back(nb, avail[nb]);
        avail[nb] &= ~(ColorSet{1} << c);
        if (!avail[nb]) dead = true;
      }
    if (!dead && solve_rec(sc, avail, color, uncolored - 1)) return true;
    for (auto& [nb, s] : undo) avail[nb] = s;
    color[pick] = -1;
  }
  return false;
}

}  // namespace lcdetail

inline std::optional<PartialColoring> solve(const Embedding& g,
                                            const Subgraph& sub,
                                            const ListAssignment& L) {
  Subgraph scope = sub;
  scope.normalize();
  lcdetail::SolveScope sc(g, scope, L);
  std::vector<ColorSet> avail = sc.lists;
  std::vector<int> color(sc.verts.size(), -1);
  if (!lcdetail::solve_rec(sc, avail, color, (int)sc.verts.size()))
    return std::nullopt;
  PartialColoring out;
  for (size_t i = 0; i < sc.verts.size(); ++i) out.set(sc.verts[i], color[i]);
  return out;
}

inline std::optional<PartialColoring> solve(const Embedding& g,
                                            const ListAssignment& L) {
  return solve(g, g.whole_graph(), L);
}

// extends: can phi be completed to a total proper L-coloring of `sub`?
inline bool extends(const Embedding& g, const Subgraph& sub,
                    const PartialColoring& phi, const ListAssignment& L) {
  require_consistent(g, phi, L);
  ListAssignment fixed = L;
  for (auto& [v, c] : phi.entries())
    if (sub.has_vertex(v)) {
      if (!colorset_has(L.at(v), c))
        throw HypothesisError("extends: precolor outside list");
      fixed.sets[v] = ColorSet{1} << c;
    }
  return solve(g, sub, fixed).has_value();
}

inline bool extends(const Embedding& g, const PartialColoring& phi,
                    const ListAssignment& L) {
  return extends(g, g.whole_graph(), phi, L);
}

// ---------------------------------------------------------------------------
// Inertness: Z is (L, phi)-inert in `sub` when every total L-coloring of
// sub minus the uncolored part of Z, extending phi, extends to all of
// sub. Checked by the exponential definition under a budget.

struct InertVerdict {
  bool inert = false;
  std::optional<PartialColoring> witness;  // a non-extendable coloring
  explicit operator bool() const { return inert; }
};

inline InertVerdict is_inert(const Embedding& g, const Subgraph& sub,
                             const std::vector<int>& Z,
                             const PartialColoring& phi,
                             const ListAssignment& L,
                             long long budget = 1'000'000) {
  require_consistent(g, phi, L);
  std::vector<char> inZ(g.order(), 0);
  for (int z : Z) {
    if (!sub.has_vertex(z))
      throw HypothesisError("is_inert: Z vertex outside scope");
    inZ[z] = 1;
  }
  // residual part of Z (uncolored) and the enumeration part
  std::vector<int> zfree, enumerated;
  for (int v : sub.verts) {
    if (inZ[v] && !phi.has(v))
      zfree.push_back(v);
    else
      enumerated.push_back(v);
  }
  Subgraph outer;  // scope minus uncolored Z
  outer.verts = enumerated;
  for (const Edge& e : sub.edges) {
    bool drop = false;
    for (int z : zfree) drop |= (e.u == z || e.v == z);
    if (!drop) outer.edges.push_back(e);
  }
  outer.normalize();

  // Lexicographic enumeration of total colorings of `outer` extending phi.
  std::vector<int> free_verts;
  for (int v : outer.verts)
    if (!phi.has(v)) free_verts.push_back(v);
  std::vector<int> assigned(g.order(), -1);
  for (auto& [v, c] : phi.entries())
    if (sub.has_vertex(v)) assigned[v] = c;

  std::vector<std::vector<int>> sub_nbrs(g.order());
  for (const Edge& e : sub.edges) {
    sub_nbrs[e.u].push_back(e.v);
    sub_nbrs[e.v].push_back(e.u);
  }

  long long steps = 0;
  InertVerdict verdict;
  verdict.inert = true;

  auto residual_ok = [&]() {
    Subgraph rz;
    rz.verts = zfree;
    for (const Edge& e : sub.edges) {
      bool bu = std::binary_search(zfree.begin(), zfree.end(), e.u);
      bool bv = std::binary_search(zfree.begin(), zfree.end(), e.v);
      if (bu && bv) rz.edges.push_back(e);
    }
    rz.normalize();
    ListAssignment rl(g.order());
    for (int z : zfree) {
      ColorSet s = L.at(z);
      for (int u : sub_nbrs[z])
        if (assigned[u] >= 0) s &= ~(ColorSet{1} << assigned[u]);
      rl.sets[z] = s;
    }
    return solve(g, rz, rl).has_value();
  };

  auto enumerate = [&](auto&& self, size_t idx) -> bool {  // false = stop
    if (idx == free_verts.size()) {
      if (++steps > budget)
        throw BudgetError("is_inert: enumeration budget exhausted");
      if (!residual_ok()) {
        verdict.inert = false;
        PartialColoring w;
        for (int v : outer.verts) w.set(v, assigned[v]);
        verdict.witness = std::move(w);
        return false;
      }
      return true;
    }
    int v = free_verts[idx];
    ColorSet s = L.at(v);
    for (int u : sub_nbrs[v])
      if (assigned[u] >= 0 && outer.has_vertex(u))
        s &= ~(ColorSet{1} << assigned[u]);
    while (s) {
      int c = std::countr_zero(s);
      s &= s - 1;
      if (++steps > budget)
        throw BudgetError("is_inert: enumeration budget exhausted");
      assigned[v] = c;
      if (!self(self, idx + 1)) {
        assigned[v] = -1;
        return false;
      }
      assigned[v] = -1;
    }
    return true;
  };
  std::sort(free_verts.begin(), free_verts.end());
  std::sort(zfree.begin(), zfree.end());
  enumerate(enumerate, 0);
  return verdict;
}

inline InertVerdict is_inert(const Embedding& g, const std::vector<int>& Z,
                             const PartialColoring& phi,
                             const ListAssignment& L,
                             long long budget = 1'000'000) {
  return is_inert(g, g.whole_graph(), Z, phi, L, budget);
}

// Sufficient inertness certificate: some coloring order of the uncolored
// part of Z survives worst-case neighbour choices. Sound, not complete.
inline bool inert_certificate(const Embedding& g, const Subgraph& sub,
                              const std::vector<int>& Z,
                              const PartialColoring& phi,
                              const ListAssignment& L) {
  std::vector<char> inZ(g.order(), 0);
  for (int z : Z) inZ[z] = 1;
  std::vector<int> zfree;
  for (int v : sub.verts)
    if (inZ[v] && !phi.has(v)) zfree.push_back(v);
  int t = static_cast<int>(zfree.size());
  if (t == 0) return true;
  if (t > 20) return false;  // subset table would not be desk-scale

  std::vector<std::vector<int>> sub_nbrs(g.order());
  for (const Edge& e : sub.edges) {
    sub_nbrs[e.u].push_back(e.v);
    sub_nbrs[e.v].push_back(e.u);
  }
  std::vector<int> zindex(g.order(), -1);
  for (int i = 0; i < t; ++i) zindex[zfree[i]] = i;

  // per vertex: fixed list after phi-neighbours, count of free outside
  // neighbours, mask of Z-free neighbours
  std::vector<int> base(t), outside(t);
  std::vector<std::uint32_t> zmask(t, 0);
  for (int i = 0; i < t; ++i) {
    int v = zfree[i];
    ColorSet s = L.at(v);
    int out = 0;
    for (int u : sub_nbrs[v]) {
      if (phi.has(u))
        s &= ~(ColorSet{1} << phi.at(u));
      else if (zindex[u] >= 0)
        zmask[i] |= std::uint32_t{1} << zindex[u];
      else
        ++out;
    }
    base[i] = colorset_size(s);
    outside[i] = out;
  }
  std::vector<char> memo(std::size_t{1} << t, 0);  // 0 unknown 1 yes 2 no
  auto can = [&](auto&& self, std::uint32_t done) -> bool {
    if (done == (std::uint32_t{1} << t) - 1) return true;
    char& m = memo[done];
    if (m) return m == 1;
    bool ok = false;
    for (int i = 0; i < t && !ok; ++i) {
      if ((done >> i) & 1) continue;
      int taken = std::popcount(zmask[i] & done);
      if (base[i] - outside[i] - taken >= 1) ok = self(self, done | (1u << i));
    }
    m = ok ? 1 : 2;
    return ok;
  };
  return can(can, 0);
}

// ---------------------------------------------------------------------------
// Thomassen-face test: the face has an L-colorable edge xy and every
// other face vertex keeps a list of size at least three.

inline bool is_thomassen_face(const Embedding& g, int face,
                              const ListAssignment& L) {
  std::vector<int> vs = g.face_vertices(face);
  int k = static_cast<int>(vs.size());
  for (int i = 0; i < k; ++i) {
    int x = vs[i], y = vs[(i + 1) % k];
    ColorSet lx = L.at(x), ly = L.at(y);
    bool colorable =
        lx && ly && !(lx == ly && colorset_size(lx) == 1);
    if (!colorable) continue;
    bool rest_ok = true;
    for (int j = 0; j < k; ++j) {
      int v = vs[j];
      if (v == x || v == y) continue;
      if (L.list_size(v) < 3) {
        rest_ok = false;
        break;
      }
    }
    if (rest_ok) return true;
  }
  return false;
}

}  // namespace surfcol
