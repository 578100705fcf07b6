#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "icycle/vertex_set.hpp"

namespace icycle {

/// Undirected edge, normalised so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphBuilder;

/// Immutable simple undirected graph on vertices 0..n-1 with bit-matrix adjacency.
class Graph {
 public:
  Graph() = default;

  /// Throws std::invalid_argument on loops or vertices outside 0..n-1. Duplicate
  /// pairs collapse into one edge.
  static Graph from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> edges);
  static Graph from_edge_list(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const { return rows_[checked(u)].contains(v); }
  const VertexSet& neighbours(Vertex v) const { return rows_[checked(v)]; }
  int degree(Vertex v) const { return rows_[checked(v)].size(); }

  /// All edges with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u) {
      rows_[u].for_each([&](Vertex v) {
        if (u < v) out.emplace_back(u, v);
      });
    }
    return out;
  }

  VertexSet vertices() const { return VertexSet::full(n_); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

 private:
  friend class GraphBuilder;

  std::size_t checked(Vertex v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    return static_cast<std::size_t>(v);
  }

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<VertexSet> rows_;
};

/// Mutable staging area for building a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : n_(n), rows_(static_cast<std::size_t>(n), VertexSet(n)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
  }

  int order() const { return n_; }

  GraphBuilder& add_edge(Vertex u, Vertex v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) {
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside 0.." +
                                  std::to_string(n_ - 1));
    }
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    rows_[u].insert(v);
    rows_[v].insert(u);
    return *this;
  }

  bool has_edge(Vertex u, Vertex v) const { return rows_.at(u).contains(v); }

  Graph build() const {
    Graph g;
    g.n_ = n_;
    g.rows_ = rows_;
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += static_cast<std::size_t>(r.size());
    g.m_ = twice / 2;
    return g;
  }

 private:
  int n_;
  std::vector<VertexSet> rows_;
};

inline Graph Graph::from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

inline Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const Edge& e : edges) b.add_edge(e.u, e.v);
  return b.build();
}

inline Graph from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  return Graph::from_edge_list(n, edges);
}

inline Graph from_edge_list(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return Graph::from_edge_list(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

/// N(u) ∩ N(w).
inline VertexSet common_neighbourhood(const Graph& g, Vertex u, Vertex w) {
  if (u == w) throw std::invalid_argument("common neighbourhood needs two distinct vertices");
  return g.neighbours(u) & g.neighbours(w);
}

/// G - S, with the surviving vertices relabelled in increasing order.
inline Graph delete_vertices(const Graph& g, const VertexSet& removed) {
  std::vector<Vertex> relabel(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!removed.contains(v)) relabel[v] = next++;
  }
  GraphBuilder b(next);
  for (const Edge& e : g.edges()) {
    if (relabel[e.u] >= 0 && relabel[e.v] >= 0) b.add_edge(relabel[e.u], relabel[e.v]);
  }
  return b.build();
}

/// Subgraph induced by `keep`, relabelled in increasing order.
inline Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  return delete_vertices(g, g.vertices() - keep);
}

/// Connected component labels, numbered 0.. in order of smallest vertex.
inline std::vector<int> connected_components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  int label = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = label;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      g.neighbours(x).for_each([&](Vertex y) {
        if (comp[y] < 0) {
          comp[y] = label;
          stack.push_back(y);
        }
      });
    }
    ++label;
  }
  return comp;
}

// Edge-list text: "n m" header, then m lines "u v".

inline void write_edge_list(std::ostream& os, const Graph& g) {
  os << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
}

/// Reads one edge-list graph. Returns false on clean end of input; throws
/// std::runtime_error on malformed or truncated input.
inline bool read_edge_list(std::istream& is, Graph& out) {
  long long n = 0;
  long long m = 0;
  if (!(is >> n)) {
    if (is.eof()) return false;
    throw std::runtime_error("edge list: expected vertex count");
  }
  if (!(is >> m)) throw std::runtime_error("edge list: expected edge count after vertex count");
  if (n < 0 || m < 0) throw std::runtime_error("edge list: negative header value");
  GraphBuilder b(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(is >> u >> v)) throw std::runtime_error("edge list: truncated after " + std::to_string(i) + " edges");
    try {
      b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(std::string("edge list: ") + e.what());
    }
  }
  out = b.build();
  return true;
}

}  // namespace icycle
