#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "icycle/graph.hpp"

namespace icycle {

using Count = std::uint64_t;

inline constexpr int kMinCycleLength = 3;
inline constexpr int kMaxCycleLength = 12;

struct EdgeCount {
  Edge edge;
  Count count = 0;
};

struct CycleCountReport {
  int k = 0;
  Count total = 0;
  std::vector<Count> per_vertex;
  std::vector<EdgeCount> per_edge;  // in Graph::edges() order

  Count edge_count(Vertex a, Vertex b) const {
    const Edge key(a, b);
    auto it = std::lower_bound(per_edge.begin(), per_edge.end(), key,
                               [](const EdgeCount& ec, const Edge& e) { return ec.edge < e; });
    if (it == per_edge.end() || it->edge != key) throw std::invalid_argument("not an edge");
    return it->count;
  }
};

namespace detail {

inline void check_cycle_length(int k) {
  if (k < kMinCycleLength || k > kMaxCycleLength) {
    throw std::invalid_argument("cycle length " + std::to_string(k) + " outside 3..12");
  }
}

// Grows the induced path in `path` (p0..pj, j >= 1) into induced k-cycles.
// `blocked` must hold the path vertices and N(p1) .. N(p_{j-1}); `allowed`
// restricts every new vertex and `closing` additionally restricts the last one.
template <class Visit>
void extend_induced_path(const Graph& g, int k, std::vector<Vertex>& path, const VertexSet& blocked,
                         const VertexSet& allowed, const VertexSet& closing, Visit& visit) {
  const Vertex last = path.back();
  VertexSet candidates = g.neighbours(last) & allowed;
  candidates -= blocked;
  if (static_cast<int>(path.size()) == k - 1) {
    candidates &= g.neighbours(path.front());
    candidates &= closing;
    candidates.for_each([&](Vertex x) {
      path.push_back(x);
      visit(static_cast<const std::vector<Vertex>&>(path));
      path.pop_back();
    });
    return;
  }
  candidates -= g.neighbours(path.front());
  const VertexSet next_blocked = blocked | g.neighbours(last);
  candidates.for_each([&](Vertex x) {
    path.push_back(x);
    extend_induced_path(g, k, path, next_blocked, allowed, closing, visit);
    path.pop_back();
  });
}

}  // namespace detail

/// Calls `visit(cycle)` once per induced k-cycle. The cycle starts at its minimum
/// vertex and runs towards the smaller of that vertex's two cycle neighbours.
template <class Visit>
void for_each_induced_cycle(const Graph& g, int k, Visit&& visit) {
  detail::check_cycle_length(k);
  const int n = g.order();
  std::vector<Vertex> path;
  path.reserve(static_cast<std::size_t>(k));
  for (Vertex p0 = 0; p0 < n; ++p0) {
    const VertexSet allowed = VertexSet::above(n, p0);
    (g.neighbours(p0) & allowed).for_each([&](Vertex p1) {
      path.assign({p0, p1});
      VertexSet blocked(n);
      blocked.insert(p0);
      blocked.insert(p1);
      const VertexSet closing = VertexSet::above(n, p1);
      detail::extend_induced_path(g, k, path, blocked, allowed, closing, visit);
    });
  }
}

inline CycleCountReport count_induced_cycles(const Graph& g, int k) {
  detail::check_cycle_length(k);
  CycleCountReport report;
  report.k = k;
  report.per_vertex.assign(static_cast<std::size_t>(g.order()), 0);
  const std::vector<Edge> edges = g.edges();
  report.per_edge.reserve(edges.size());
  for (const Edge& e : edges) report.per_edge.push_back({e, 0});

  // edge index lookup, row-major over the full matrix
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<std::int32_t> index(n * n, -1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    index[edges[i].u * n + edges[i].v] = static_cast<std::int32_t>(i);
    index[edges[i].v * n + edges[i].u] = static_cast<std::int32_t>(i);
  }

  for_each_induced_cycle(g, k, [&](const std::vector<Vertex>& cycle) {
    ++report.total;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Vertex a = cycle[i];
      const Vertex b = cycle[(i + 1) % cycle.size()];
      ++report.per_vertex[a];
      ++report.per_edge[static_cast<std::size_t>(index[a * n + b])].count;
    }
  });
  return report;
}

namespace detail {

inline void check_path(const Graph& g, Vertex u, Vertex v, Vertex w) {
  if (u == w) throw std::invalid_argument("path endpoints must differ");
  if (!g.adjacent(u, v) || !g.adjacent(v, w)) {
    throw std::invalid_argument("u-v-w is not a path: missing edge");
  }
}

}  // namespace detail

/// Visits every induced k-cycle containing u, v, w with v between u and w, as the
/// sequence u, v, w, x3, ..., x_{k-1}.
template <class Visit>
void for_each_cycle_through_path(const Graph& g, Vertex u, Vertex v, Vertex w, int k, Visit&& visit) {
  detail::check_cycle_length(k);
  detail::check_path(g, u, v, w);
  if (g.adjacent(u, w)) {
    if (k == 3) {
      const std::vector<Vertex> triangle{u, v, w};
      visit(triangle);
    }
    return;
  }
  if (k == 3) return;
  const int n = g.order();
  std::vector<Vertex> path{u, v, w};
  VertexSet blocked = g.neighbours(v);
  blocked.insert(u);
  blocked.insert(v);
  blocked.insert(w);
  const VertexSet everything = VertexSet::full(n);
  detail::extend_induced_path(g, k, path, blocked, everything, everything, visit);
}

/// Number of induced k-cycles in which u-v-w appears as a consecutive path.
inline Count induced_cycles_through_path(const Graph& g, Vertex u, Vertex v, Vertex w, int k) {
  Count total = 0;
  for_each_cycle_through_path(g, u, v, w, k, [&](const std::vector<Vertex>&) { ++total; });
  return total;
}

inline std::vector<std::vector<Vertex>> enumerate_cycles_through_path(const Graph& g, Vertex u, Vertex v, Vertex w,
                                                                      int k) {
  std::vector<std::vector<Vertex>> out;
  for_each_cycle_through_path(g, u, v, w, k, [&](const std::vector<Vertex>& c) { out.push_back(c); });
  return out;
}

/// The vertices on induced 6-cycles through u-v-w, split by position: every such
/// cycle reads u v w x3 x2 x1 with xi in Xi.
struct XDecomposition {
  Vertex u = 0;
  Vertex v = 0;
  Vertex w = 0;
  VertexSet x;
  VertexSet x1;
  VertexSet x2;
  VertexSet x3;
  std::vector<Edge> g1;  // edges between X1 and X2
  std::vector<Edge> g2;  // edges between X2 and X3
  Count cycles = 0;
};

namespace detail {

inline std::vector<Edge> edges_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  std::vector<Edge> out;
  a.for_each([&](Vertex x) { (g.neighbours(x) & b).for_each([&](Vertex y) { out.emplace_back(x, y); }); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

inline XDecomposition x_decomposition(const Graph& g, Vertex u, Vertex v, Vertex w) {
  const int n = g.order();
  XDecomposition d{u, v, w, VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n), {}, {}, 0};
  for_each_cycle_through_path(g, u, v, w, 6, [&](const std::vector<Vertex>& c) {
    ++d.cycles;
    d.x3.insert(c[3]);
    d.x2.insert(c[4]);
    d.x1.insert(c[5]);
  });
  d.x = d.x1 | d.x2 | d.x3;
  d.g1 = detail::edges_between(g, d.x1, d.x2);
  d.g2 = detail::edges_between(g, d.x2, d.x3);
  return d;
}

/// True when the edge list contains no cycle.
inline bool is_forest(int n, const std::vector<Edge>& edges) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : edges) {
    const int a = find(e.u);
    const int b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

struct LemmaBounds {
  Count bound_a = 0;  // |X3| (|X1| + |X2| - 1)
  Count bound_b = 0;  // |X1| (|X2| + |X3| - 1)
  Count min() const { return std::min(bound_a, bound_b); }
};

/// Upper bounds on the number of induced 6-cycles through the path, valid for
/// planar graphs. Requires all three parts to be non-empty.
inline LemmaBounds lemma_bounds(const XDecomposition& d) {
  const Count s1 = static_cast<Count>(d.x1.size());
  const Count s2 = static_cast<Count>(d.x2.size());
  const Count s3 = static_cast<Count>(d.x3.size());
  if (s1 == 0 || s2 == 0 || s3 == 0) {
    throw std::invalid_argument("bounds need X1, X2 and X3 all non-empty");
  }
  return {s3 * (s1 + s2 - 1), s1 * (s2 + s3 - 1)};
}

inline constexpr int kMaxPathLength = 8;

/// table[i][w] = number of simple paths with exactly i edges from `source` to w,
/// for 0 <= i <= max_length.
inline std::vector<std::vector<Count>> path_counts_from(const Graph& g, Vertex source, int max_length) {
  const int n = g.order();
  std::vector<std::vector<Count>> table(static_cast<std::size_t>(max_length) + 1,
                                        std::vector<Count>(static_cast<std::size_t>(n), 0));
  table[0][source] = 1;
  VertexSet visited(n);
  visited.insert(source);
  auto dfs = [&](auto&& self, Vertex at, int depth) -> void {
    if (depth == max_length) return;
    (g.neighbours(at) - visited).for_each([&](Vertex next) {
      ++table[depth + 1][next];
      visited.insert(next);
      self(self, next, depth + 1);
      visited.erase(next);
    });
  };
  dfs(dfs, source, 0);
  return table;
}

/// Simple paths with exactly `length` edges from u to w.
inline Count count_paths(const Graph& g, Vertex u, Vertex w, int length) {
  if (u == w) throw std::invalid_argument("path endpoints must differ");
  if (length < 1 || length > kMaxPathLength) throw std::invalid_argument("path length outside 1..8");
  g.neighbours(w);  // range check
  return path_counts_from(g, u, length)[length][w];
}

/// Upper bound on u-w paths of the given length in a planar graph on n >= 3
/// vertices: n (6n-12)^(i/2-1) for even i, (6n-12)^((i-1)/2) for odd i.
/// Saturates at the Count maximum.
inline Count planar_path_bound(int n, int length) {
  if (n < 3) throw std::invalid_argument("path bound needs n >= 3");
  if (length < 1) throw std::invalid_argument("path length must be positive");
  const Count darts = static_cast<Count>(6 * static_cast<long long>(n) - 12);
  Count bound = 1;
  int factors = 0;
  if (length % 2 == 0) {
    bound = static_cast<Count>(n);
    factors = length / 2 - 1;
  } else {
    factors = (length - 1) / 2;
  }
  for (int i = 0; i < factors; ++i) {
    if (darts != 0 && bound > std::numeric_limits<Count>::max() / darts) return std::numeric_limits<Count>::max();
    bound *= darts;
  }
  return bound;
}

}  // namespace icycle
