#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "icycle/graph.hpp"

namespace icycle {

/// Rotation system: for each vertex, the cyclic order of its neighbours.
class Embedding {
 public:
  Embedding() = default;
  explicit Embedding(std::vector<std::vector<Vertex>> rotation) : rotation_(std::move(rotation)) {}

  int order() const { return static_cast<int>(rotation_.size()); }
  std::span<const Vertex> rotation(Vertex v) const { return rotation_.at(static_cast<std::size_t>(v)); }

  /// Neighbour following `from` in the rotation at `v`.
  Vertex successor(Vertex v, Vertex from) const {
    const auto& r = rotation_.at(static_cast<std::size_t>(v));
    auto it = std::find(r.begin(), r.end(), from);
    if (it == r.end()) throw std::invalid_argument("inconsistent rotation: dart not present");
    ++it;
    return it == r.end() ? r.front() : *it;
  }

  const std::vector<std::vector<Vertex>>& rotations() const { return rotation_; }

 private:
  std::vector<std::vector<Vertex>> rotation_;
};

struct PlanarityResult {
  bool planar = false;
  std::optional<Embedding> embedding;
};

/// Facial walks plus the dart-to-face index. Face `f` is the sequence of darts
/// walk[i] -> walk[i+1] (cyclically).
struct FaceStructure {
  std::vector<std::vector<Vertex>> walks;
  std::unordered_map<long long, int> dart_face;

  int face_of(int n, Vertex from, Vertex to) const {
    auto it = dart_face.find(static_cast<long long>(from) * n + to);
    return it == dart_face.end() ? -1 : it->second;
  }
};

/// Throws std::invalid_argument unless every rotation is exactly the neighbour set.
inline void validate_rotation(const Embedding& e, const Graph& g) {
  if (e.order() != g.order()) throw std::invalid_argument("inconsistent rotation: order mismatch");
  for (Vertex v = 0; v < g.order(); ++v) {
    auto r = e.rotation(v);
    if (static_cast<int>(r.size()) != g.degree(v)) {
      throw std::invalid_argument("inconsistent rotation at vertex " + std::to_string(v));
    }
    VertexSet seen(g.order());
    for (Vertex x : r) {
      if (x < 0 || x >= g.order() || !g.adjacent(v, x) || seen.contains(x)) {
        throw std::invalid_argument("inconsistent rotation at vertex " + std::to_string(v));
      }
      seen.insert(x);
    }
  }
}

/// Traces faces with the rule (u -> v) followed by (v -> successor_v(u)).
inline FaceStructure face_structure(const Embedding& e, const Graph& g) {
  validate_rotation(e, g);
  const int n = g.order();
  FaceStructure fs;
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t : e.rotation(s)) {
      const long long key = static_cast<long long>(s) * n + t;
      if (fs.dart_face.contains(key)) continue;
      const int id = static_cast<int>(fs.walks.size());
      std::vector<Vertex> walk;
      Vertex a = s;
      Vertex b = t;
      while (true) {
        const long long k = static_cast<long long>(a) * n + b;
        if (fs.dart_face.contains(k)) break;
        fs.dart_face.emplace(k, id);
        walk.push_back(a);
        const Vertex c = e.successor(b, a);
        a = b;
        b = c;
      }
      fs.walks.push_back(std::move(walk));
    }
  }
  return fs;
}

inline std::vector<std::vector<Vertex>> faces(const Embedding& e, const Graph& g) {
  return face_structure(e, g).walks;
}

/// V - E + F = 2 on every connected component (an isolated vertex counts one face).
inline bool satisfies_euler(const Graph& g, const Embedding& e) {
  const FaceStructure fs = face_structure(e, g);
  const std::vector<int> comp = connected_components(g);
  const int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<long long> v(count, 0), m(count, 0), f(count, 0);
  for (Vertex x = 0; x < g.order(); ++x) {
    ++v[comp[x]];
    m[comp[x]] += g.degree(x);
  }
  for (const auto& w : fs.walks) ++f[comp[w.front()]];
  for (int c = 0; c < count; ++c) {
    const long long faces_c = std::max<long long>(f[c], 1);
    if (v[c] - m[c] / 2 + faces_c != 2) return false;
  }
  return true;
}

namespace detail {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;

inline BoostGraph to_boost(const Graph& g) {
  BoostGraph bg(static_cast<std::size_t>(g.order()));
  int index = 0;
  for (const Edge& e : g.edges()) {
    auto [edge, inserted] = boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
    boost::put(boost::edge_index, bg, edge, index++);
  }
  return bg;
}

inline bool exceeds_planar_edge_bound(const Graph& g) {
  return g.order() >= 3 && g.size() > static_cast<std::size_t>(3 * g.order() - 6);
}

}  // namespace detail

/// Boolean planarity test without building an embedding.
inline bool is_planar_graph(const Graph& g) {
  if (detail::exceeds_planar_edge_bound(g)) return false;
  if (g.size() <= 8) return true;  // K5 and K3,3 have 10 and 9 edges
  auto bg = detail::to_boost(g);
  return boost::boyer_myrvold_planarity_test(bg);
}

inline PlanarityResult is_planar(const Graph& g) {
  PlanarityResult result;
  if (detail::exceeds_planar_edge_bound(g)) return result;
  auto bg = detail::to_boost(g);
  using EdgeDesc = boost::graph_traits<detail::BoostGraph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> storage(static_cast<std::size_t>(g.order()));
  auto embedding_map = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, bg));
  result.planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                      boost::boyer_myrvold_params::embedding = embedding_map);
  if (!result.planar) return result;
  std::vector<std::vector<Vertex>> rotation(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    for (const EdgeDesc& ed : storage[v]) {
      const auto s = static_cast<Vertex>(boost::source(ed, bg));
      const auto t = static_cast<Vertex>(boost::target(ed, bg));
      rotation[v].push_back(s == v ? t : s);
    }
  }
  result.embedding = Embedding(std::move(rotation));
  return result;
}

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Rotation system of a straight-line drawing: neighbours sorted counter-clockwise
/// by angle. The drawing must be crossing-free for the result to be planar.
inline Embedding embedding_from_drawing(const Graph& g, std::span<const Point2> points) {
  if (static_cast<int>(points.size()) != g.order()) throw std::invalid_argument("one point per vertex required");
  std::vector<std::vector<Vertex>> rotation(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<std::pair<double, Vertex>> by_angle;
    g.neighbours(v).for_each([&](Vertex x) {
      by_angle.emplace_back(std::atan2(points[x].y - points[v].y, points[x].x - points[v].x), x);
    });
    std::sort(by_angle.begin(), by_angle.end());
    for (auto& [angle, x] : by_angle) rotation[v].push_back(x);
  }
  return Embedding(std::move(rotation));
}

}  // namespace icycle
