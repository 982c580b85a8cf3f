#pragma once
// Combinatorial embeddings of simple connected graphs on orientable
// surfaces, given as rotation systems. Faces are derived by tracing
// directed edge-ends; the genus comes from the Euler formula.

#include <cassert>
#include <map>
#include <numeric>

#include "surfcol/core.hpp"

namespace surfcol {

class Embedding {
 public:
  // rotations[i] lists the neighbours of vertex i in cyclic order.
  // labels, when given, carry the caller's external vertex names.
  static Embedding build(std::vector<std::vector<int>> rotations,
                         std::vector<long long> labels = {}) {
    Embedding e;
    e.rot_ = std::move(rotations);
    e.n_ = static_cast<int>(e.rot_.size());
    if (e.n_ == 0) throw HypothesisError("embedding: no vertices");
    if (labels.empty()) {
      e.labels_.resize(e.n_);
      std::iota(e.labels_.begin(), e.labels_.end(), 0);
    } else {
      if (static_cast<int>(labels.size()) != e.n_)
        throw HypothesisError("embedding: label count mismatch");
      e.labels_ = std::move(labels);
    }
    e.validate_rotations();
    e.index_arcs();
    e.trace_faces();
    e.check_euler();
    return e;
  }

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int genus() const { return genus_; }

  long long label(int v) const { return labels_[v]; }
  const std::vector<long long>& labels() const { return labels_; }

  const std::vector<int>& rotation(int v) const { return rot_[v]; }
  int degree(int v) const { return static_cast<int>(rot_[v].size()); }
  bool adjacent(int u, int v) const { return arc(u, v) >= 0; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(int u, int v) const { return adjacent(u, v); }

  // --- arcs (directed edge-ends) ---
  int arc_count() const { return 2 * size(); }
  // Arc from u toward its i-th rotation neighbour.
  int arc_at(int u, int i) const { return off_[u] + i; }
  int arc(int u, int v) const {
    const auto& r = rot_[u];
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
      if (r[i] == v) return off_[u] + i;
    return -1;
  }
  int arc_tail(int a) const { return tail_[a]; }
  int arc_head(int a) const { return rot_[tail_[a]][a - off_[tail_[a]]]; }
  int arc_reverse(int a) const { return rev_[a]; }
  // Successor arc along the face containing `a`.
  int arc_next_in_face(int a) const {
    int v = arc_head(a);
    int j = rev_[a] - off_[v];  // position of tail(a) in rot_[v]
    int d = degree(v);
    return off_[v] + (j + 1) % d;
  }
  int face_of_arc(int a) const { return face_of_arc_[a]; }

  // --- faces ---
  const std::vector<int>& face_arcs(int f) const { return faces_[f]; }
  int face_length(int f) const { return static_cast<int>(faces_[f].size()); }
  // Vertices along the face walk (tails of successive arcs).
  std::vector<int> face_vertices(int f) const {
    std::vector<int> vs;
    vs.reserve(faces_[f].size());
    for (int a : faces_[f]) vs.push_back(arc_tail(a));
    return vs;
  }
  // A face is a cycle when its walk has length >= 3 and repeats no vertex.
  bool face_is_cycle(int f) const {
    if (face_length(f) < 3) return false;
    std::vector<int> vs = face_vertices(f);
    std::sort(vs.begin(), vs.end());
    return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
  }
  int face_of_edge_side(int u, int v) const {
    int a = arc(u, v);
    if (a < 0) throw HypothesisError("face_of_edge_side: not an edge");
    return face_of_arc_[a];
  }

  int edge_index(int u, int v) const {
    auto it = edge_index_.find(Edge(u, v));
    return it == edge_index_.end() ? -1 : it->second;
  }

  Subgraph whole_graph() const {
    Subgraph s;
    s.verts.resize(n_);
    std::iota(s.verts.begin(), s.verts.end(), 0);
    s.edges = edges_;
    s.normalize();
    return s;
  }

 private:
  int n_ = 0;
  int genus_ = 0;
  std::vector<long long> labels_;
  std::vector<std::vector<int>> rot_;
  std::vector<int> off_;    // arc offset per vertex
  std::vector<int> tail_;   // arc -> tail vertex
  std::vector<int> rev_;    // arc -> reverse arc
  std::vector<Edge> edges_;
  std::map<Edge, int> edge_index_;
  std::vector<std::vector<int>> faces_;  // face -> arcs in walk order
  std::vector<int> face_of_arc_;

  void validate_rotations() {
    for (int v = 0; v < n_; ++v) {
      std::vector<int> seen;
      for (int u : rot_[v]) {
        if (u < 0 || u >= n_)
          throw HypothesisError("embedding: neighbour out of range");
        if (u == v) throw HypothesisError("embedding: self-loop");
        seen.push_back(u);
      }
      std::sort(seen.begin(), seen.end());
      if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw HypothesisError("embedding: parallel edge in rotation");
    }
    for (int v = 0; v < n_; ++v)
      for (int u : rot_[v]) {
        const auto& r = rot_[u];
        if (std::find(r.begin(), r.end(), v) == r.end())
          throw HypothesisError("embedding: dangling edge-end (" +
                                std::to_string(labels_[v]) + "," +
                                std::to_string(labels_[u]) + ")");
      }
    // connectivity
    if (n_ > 1) {
      std::vector<char> vis(n_, 0);
      std::vector<int> stack{0};
      vis[0] = 1;
      int cnt = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : rot_[v])
          if (!vis[u]) {
            vis[u] = 1;
            ++cnt;
            stack.push_back(u);
          }
      }
      if (cnt != n_) throw HypothesisError("embedding: graph is disconnected");
    }
  }

  void index_arcs() {
    off_.assign(n_ + 1, 0);
    for (int v = 0; v < n_; ++v) off_[v + 1] = off_[v] + degree(v);
    int m2 = off_[n_];
    tail_.resize(m2);
    for (int v = 0; v < n_; ++v)
      for (int i = off_[v]; i < off_[v + 1]; ++i) tail_[i] = v;
    rev_.assign(m2, -1);
    std::map<std::pair<int, int>, int> slot;
    for (int a = 0; a < m2; ++a) slot[{tail_[a], arc_head_raw(a)}] = a;
    for (int a = 0; a < m2; ++a) {
      auto it = slot.find({arc_head_raw(a), tail_[a]});
      assert(it != slot.end());
      rev_[a] = it->second;
    }
    for (int a = 0; a < m2; ++a) {
      int u = tail_[a], v = arc_head_raw(a);
      if (u < v) {
        edge_index_.emplace(Edge(u, v), static_cast<int>(edges_.size()));
        edges_.emplace_back(u, v);
      }
    }
    std::sort(edges_.begin(), edges_.end());
    edge_index_.clear();
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i)
      edge_index_[edges_[i]] = i;
  }

  int arc_head_raw(int a) const { return rot_[tail_[a]][a - off_[tail_[a]]]; }

  void trace_faces() {
    face_of_arc_.assign(arc_count(), -1);
    for (int a0 = 0; a0 < arc_count(); ++a0) {
      if (face_of_arc_[a0] >= 0) continue;
      int f = static_cast<int>(faces_.size());
      faces_.emplace_back();
      int a = a0;
      do {
        face_of_arc_[a] = f;
        faces_[f].push_back(a);
        a = arc_next_in_face(a);
      } while (a != a0);
    }
  }

  void check_euler() {
    int chi = n_ - size() + face_count();
    if (chi > 2 || (2 - chi) % 2 != 0)
      throw InvariantError("embedding: Euler characteristic " +
                           std::to_string(chi) + " is not orientable-valid");
    genus_ = (2 - chi) / 2;
  }
};

// Distance utilities (hop metric on the host graph).

inline std::vector<int> bfs_distances(const Embedding& g,
                                      const std::vector<int>& sources) {
  std::vector<int> dist(g.order(), kUnbounded);
  std::vector<int> queue;
  for (int s : sources)
    if (dist[s] == kUnbounded) {
      dist[s] = 0;
      queue.push_back(s);
    }
  for (size_t h = 0; h < queue.size(); ++h) {
    int v = queue[h];
    for (int u : g.rotation(v))
      if (dist[u] == kUnbounded) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
  }
  return dist;
}

inline int distance(const Embedding& g, int u, int v) {
  return bfs_distances(g, {u})[v];
}

// Distance between two vertex sets (0 when they intersect).
inline int set_distance(const Embedding& g, const std::vector<int>& a,
                        const std::vector<int>& b) {
  if (a.empty() || b.empty()) return kUnbounded;
  std::vector<int> dist = bfs_distances(g, a);
  int best = kUnbounded;
  for (int v : b) best = std::min(best, dist[v]);
  return best;
}

// Closed ball of hop radius r around a vertex set.
inline std::vector<int> ball(const Embedding& g, const std::vector<int>& around,
                             int r) {
  std::vector<int> dist = bfs_distances(g, around);
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    if (dist[v] <= r) out.push_back(v);
  return out;
}

// Vertices at hop distance exactly r.
inline std::vector<int> sphere(const Embedding& g,
                               const std::vector<int>& around, int r) {
  std::vector<int> dist = bfs_distances(g, around);
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    if (dist[v] == r) out.push_back(v);
  return out;
}

}  // namespace surfcol
