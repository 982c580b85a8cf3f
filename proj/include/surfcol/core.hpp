#pragma once
// Shared basic types: edges, cycles, subgraphs, error categories.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace surfcol {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input that violates a documented precondition of an operation.
struct HypothesisError : Error {
  using Error::Error;
};

// An enumeration or certification budget ran out before a verdict.
struct BudgetError : Error {
  using Error::Error;
};

// A structural guarantee failed at runtime; signals a fixture or logic bug.
struct InvariantError : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line;
  ParseError(int ln, const std::string& msg)
      : Error("line " + std::to_string(ln) + ": " + msg), line(ln) {}
};

// Width values use kUnbounded for "no such cycle exists".
inline constexpr int kUnbounded = std::numeric_limits<int>::max();

inline std::string width_to_string(int w) {
  return w == kUnbounded ? "inf" : std::to_string(w);
}

struct Edge {
  int u = -1, v = -1;
  Edge() = default;
  Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A cycle as a vertex sequence c0 c1 ... c{k-1} (closing edge implicit).
using Cycle = std::vector<int>;

// Rotates/reflects a cycle into a canonical form: least vertex first,
// then the lexicographically smaller direction.
inline Cycle canonical_cycle(const Cycle& c) {
  if (c.empty()) return c;
  int k = static_cast<int>(c.size());
  int best = 0;
  for (int i = 1; i < k; ++i)
    if (c[i] < c[best]) best = i;
  Cycle fwd(k), bwd(k);
  for (int i = 0; i < k; ++i) {
    fwd[i] = c[(best + i) % k];
    bwd[i] = c[(best - i % k + k) % k];
  }
  return std::min(fwd, bwd);
}

inline std::vector<Edge> cycle_edges(const Cycle& c) {
  std::vector<Edge> es;
  int k = static_cast<int>(c.size());
  es.reserve(k);
  for (int i = 0; i < k; ++i) es.emplace_back(c[i], c[(i + 1) % k]);
  return es;
}

// A subgraph of a host embedding: vertex set plus edge set, kept sorted.
struct Subgraph {
  std::vector<int> verts;
  std::vector<Edge> edges;

  void normalize() {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }
  bool has_vertex(int v) const {
    return std::binary_search(verts.begin(), verts.end(), v);
  }
  bool has_edge(const Edge& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
  }
  friend bool operator==(const Subgraph&, const Subgraph&) = default;
};

inline Subgraph subgraph_of_cycle(const Cycle& c) {
  Subgraph s;
  s.verts = c;
  s.edges = cycle_edges(c);
  s.normalize();
  return s;
}

inline Subgraph subgraph_union(const Subgraph& a, const Subgraph& b) {
  Subgraph s = a;
  s.verts.insert(s.verts.end(), b.verts.begin(), b.verts.end());
  s.edges.insert(s.edges.end(), b.edges.begin(), b.edges.end());
  s.normalize();
  return s;
}

inline Subgraph subgraph_intersection(const Subgraph& a, const Subgraph& b) {
  Subgraph s;
  std::set_intersection(a.verts.begin(), a.verts.end(), b.verts.begin(),
                        b.verts.end(), std::back_inserter(s.verts));
  std::set_intersection(a.edges.begin(), a.edges.end(), b.edges.begin(),
                        b.edges.end(), std::back_inserter(s.edges));
  return s;
}

// True when every vertex and edge of `inner` occurs in `outer`.
inline bool subgraph_contains(const Subgraph& outer, const Subgraph& inner) {
  for (int v : inner.verts)
    if (!outer.has_vertex(v)) return false;
  for (const Edge& e : inner.edges)
    if (!outer.has_edge(e)) return false;
  return true;
}

}  // namespace surfcol
