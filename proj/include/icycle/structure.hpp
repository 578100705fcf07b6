#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "icycle/cycles.hpp"
#include "icycle/graph.hpp"
#include "icycle/planarity.hpp"

namespace icycle {

/// Neighbours of v that share an induced 6-cycle with v. Two adjacent vertices on
/// an induced cycle are consecutive on it, so this is the set of u with a nonzero
/// 6-cycle count on the edge uv.
inline VertexSet principal_neighbours(const Graph& g, const CycleCountReport& six, Vertex v) {
  if (six.k != 6) throw std::invalid_argument("principal neighbours need a 6-cycle report");
  VertexSet out(g.order());
  g.neighbours(v).for_each([&](Vertex u) {
    if (six.edge_count(u, v) > 0) out.insert(u);
  });
  return out;
}

inline VertexSet principal_neighbours(const Graph& g, Vertex v) {
  return principal_neighbours(g, count_induced_cycles(g, 6), v);
}

inline std::vector<VertexSet> all_principal_neighbours(const Graph& g, const CycleCountReport& six) {
  std::vector<VertexSet> out;
  out.reserve(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) out.push_back(principal_neighbours(g, six, v));
  return out;
}

// ---------------------------------------------------------------------------
// Empty K_{2,7}

struct EmptyK27Witness {
  Vertex u = 0;
  Vertex w = 0;
  std::array<Vertex, 7> fan{};
  Vertex central = 0;

  friend bool operator==(const EmptyK27Witness&, const EmptyK27Witness&) = default;
};

/// Vertices strictly inside the region bounded by u-a-w-b-u that contains the
/// wedge at u running from a towards b in rotation order. Faces are flood-filled
/// without crossing the four boundary edges.
inline VertexSet region_interior(const Graph& g, const Embedding& e, const FaceStructure& fs, Vertex u, Vertex w,
                                 Vertex a, Vertex b) {
  const int n = g.order();
  const std::array<Edge, 4> boundary{Edge(u, a), Edge(a, w), Edge(w, b), Edge(b, u)};
  auto on_boundary = [&](Vertex x, Vertex y) {
    return std::find(boundary.begin(), boundary.end(), Edge(x, y)) != boundary.end();
  };
  const int start = fs.face_of(n, u, e.successor(u, a));
  std::vector<bool> reached(fs.walks.size(), false);
  std::queue<int> queue;
  reached[static_cast<std::size_t>(start)] = true;
  queue.push(start);
  VertexSet inside(n);
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop();
    const auto& walk = fs.walks[static_cast<std::size_t>(f)];
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const Vertex x = walk[i];
      const Vertex y = walk[(i + 1) % walk.size()];
      inside.insert(x);
      if (on_boundary(x, y)) continue;
      const int twin = fs.face_of(n, y, x);
      if (!reached[static_cast<std::size_t>(twin)]) {
        reached[static_cast<std::size_t>(twin)] = true;
        queue.push(twin);
      }
    }
  }
  for (Vertex x : {u, w, a, b}) inside.erase(x);
  return inside;
}

/// Common neighbours of u and w in the cyclic order they appear around u.
inline std::vector<Vertex> fan_order(const Graph& g, const Embedding& e, Vertex u, Vertex w) {
  const VertexSet common = common_neighbourhood(g, u, w);
  std::vector<Vertex> out;
  for (Vertex x : e.rotation(u)) {
    if (common.contains(x)) out.push_back(x);
  }
  return out;
}

inline std::vector<EmptyK27Witness> find_empty_k27(const Graph& g, const Embedding& e, const FaceStructure& fs,
                                                   Vertex u, Vertex w) {
  std::vector<EmptyK27Witness> out;
  const std::vector<Vertex> fan = fan_order(g, e, u, w);
  const std::size_t t = fan.size();
  if (t < 7) return out;
  std::vector<bool> empty_region(t);
  for (std::size_t i = 0; i < t; ++i) {
    empty_region[i] = region_interior(g, e, fs, u, w, fan[i], fan[(i + 1) % t]).empty();
  }
  for (std::size_t s = 0; s < t; ++s) {
    bool all_empty = true;
    for (std::size_t r = 0; r < 6; ++r) all_empty = all_empty && empty_region[(s + r) % t];
    if (!all_empty) continue;
    EmptyK27Witness wit;
    wit.u = u;
    wit.w = w;
    for (std::size_t i = 0; i < 7; ++i) wit.fan[i] = fan[(s + i) % t];
    wit.central = wit.fan[3];
    out.push_back(wit);
  }
  return out;
}

/// Every window of seven consecutive common neighbours of u and w whose six
/// bounded regions contain no vertex, in the supplied embedding.
inline std::vector<EmptyK27Witness> find_empty_k27(const Graph& g, const Embedding& e, Vertex u, Vertex w) {
  if (u == w) throw std::invalid_argument("empty K_{2,7} needs two distinct vertices");
  if (common_neighbourhood(g, u, w).size() < 7) return {};
  return find_empty_k27(g, e, face_structure(e, g), u, w);
}

namespace detail {

inline VertexSet checked_witness_part(const Graph& g, const EmptyK27Witness& wit) {
  const VertexSet common = common_neighbourhood(g, wit.u, wit.w);
  VertexSet seen(g.order());
  for (Vertex x : wit.fan) {
    if (!common.contains(x) || seen.contains(x)) throw std::invalid_argument("invalid empty K_{2,7} witness");
    seen.insert(x);
  }
  if (wit.central != wit.fan[3]) throw std::invalid_argument("invalid empty K_{2,7} witness: central vertex");
  VertexSet part(g.order());
  part.insert(wit.u);
  part.insert(wit.w);
  return part;
}

}  // namespace detail

/// True iff the central fan vertex has exactly u and w as principal neighbours.
inline bool central_principal_check(const Graph& g, const CycleCountReport& six, const EmptyK27Witness& wit) {
  return principal_neighbours(g, six, wit.central) == detail::checked_witness_part(g, wit);
}

/// Weaker form that holds for every empty witness: no principal neighbour of
/// the central vertex lies outside {u, w}. It may have none at all, e.g. in
/// K_{2,7} itself, which has no induced 6-cycle.
inline bool central_principal_subset(const Graph& g, const CycleCountReport& six, const EmptyK27Witness& wit) {
  return principal_neighbours(g, six, wit.central).is_subset_of(detail::checked_witness_part(g, wit));
}

inline bool central_principal_check(const Graph& g, const EmptyK27Witness& wit) {
  return central_principal_check(g, count_induced_cycles(g, 6), wit);
}

// ---------------------------------------------------------------------------
// Good 6-cycles

/// Induced cycle hubs[0] spokes[0] hubs[1] spokes[1] hubs[2] spokes[2] in which
/// each spoke's only principal neighbours are its two hubs. Stored with hubs[0]
/// the smallest hub and hubs[1] < hubs[2].
struct GoodSixCycle {
  std::array<Vertex, 3> hubs{};
  std::array<Vertex, 3> spokes{};

  std::array<Vertex, 6> cycle() const { return {hubs[0], spokes[0], hubs[1], spokes[1], hubs[2], spokes[2]}; }

  friend auto operator<=>(const GoodSixCycle&, const GoodSixCycle&) = default;
};

namespace detail {

inline GoodSixCycle canonical_good_cycle(std::array<Vertex, 3> hubs, std::array<Vertex, 3> spokes) {
  const auto lowest = std::min_element(hubs.begin(), hubs.end()) - hubs.begin();
  std::rotate(hubs.begin(), hubs.begin() + lowest, hubs.end());
  std::rotate(spokes.begin(), spokes.begin() + lowest, spokes.end());
  if (hubs[2] < hubs[1]) {
    // reverse traversal: h0 s2 h2 s1 h1 s0
    hubs = {hubs[0], hubs[2], hubs[1]};
    spokes = {spokes[2], spokes[1], spokes[0]};
  }
  return {hubs, spokes};
}

inline bool spokes_qualify(const std::array<Vertex, 3>& hubs, const std::array<Vertex, 3>& spokes,
                           const std::vector<VertexSet>& principal, int n) {
  for (int i = 0; i < 3; ++i) {
    VertexSet expected(n);
    expected.insert(hubs[i]);
    expected.insert(hubs[(i + 1) % 3]);
    if (principal[static_cast<std::size_t>(spokes[i])] != expected) return false;
  }
  return true;
}

}  // namespace detail

/// True iff `c` is an induced 6-cycle of g meeting the good-cycle condition.
inline bool is_good_six_cycle(const Graph& g, const CycleCountReport& six, const GoodSixCycle& c) {
  const auto cyc = c.cycle();
  VertexSet members(g.order());
  for (Vertex x : cyc) {
    if (x < 0 || x >= g.order() || members.contains(x)) return false;
    members.insert(x);
  }
  for (std::size_t i = 0; i < 6; ++i) {
    const Vertex x = cyc[i];
    VertexSet expected(g.order());
    expected.insert(cyc[(i + 1) % 6]);
    expected.insert(cyc[(i + 5) % 6]);
    if ((g.neighbours(x) & members) != expected) return false;
  }
  for (int i = 0; i < 3; ++i) {
    VertexSet expected(g.order());
    expected.insert(c.hubs[i]);
    expected.insert(c.hubs[(i + 1) % 3]);
    if (principal_neighbours(g, six, c.spokes[i]) != expected) return false;
  }
  return true;
}

inline std::vector<GoodSixCycle> find_good_6cycle(const Graph& g, const CycleCountReport& six) {
  const std::vector<VertexSet> principal = all_principal_neighbours(g, six);
  std::vector<GoodSixCycle> out;
  for_each_induced_cycle(g, 6, [&](const std::vector<Vertex>& c) {
    for (int offset = 0; offset < 2; ++offset) {
      const std::array<Vertex, 3> hubs{c[offset], c[offset + 2], c[offset + 4]};
      const std::array<Vertex, 3> spokes{c[offset + 1], c[offset + 3], c[(offset + 5) % 6]};
      if (detail::spokes_qualify(hubs, spokes, principal, g.order())) {
        out.push_back(detail::canonical_good_cycle(hubs, spokes));
        break;
      }
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// All induced 6-cycles in which every spoke has only its two hubs as principal
/// neighbours; one entry per cycle, sorted.
inline std::vector<GoodSixCycle> find_good_6cycle(const Graph& g) {
  return find_good_6cycle(g, count_induced_cycles(g, 6));
}

/// X^{u1 v1 u2} ∩ X^{u2 v2 u3} ∩ X^{u3 v3 u1}. At most 8 vertices in a planar graph.
inline VertexSet xyz_intersection(const Graph& g, const CycleCountReport& six, const GoodSixCycle& c) {
  if (!is_good_six_cycle(g, six, c)) throw std::invalid_argument("not a good 6-cycle of this graph");
  const auto& h = c.hubs;
  const auto& s = c.spokes;
  VertexSet out = x_decomposition(g, h[0], s[0], h[1]).x;
  out &= x_decomposition(g, h[1], s[1], h[2]).x;
  out &= x_decomposition(g, h[2], s[2], h[0]).x;
  return out;
}

inline VertexSet xyz_intersection(const Graph& g, const GoodSixCycle& c) {
  return xyz_intersection(g, count_induced_cycles(g, 6), c);
}

// ---------------------------------------------------------------------------
// Probes

struct VertexMinimum {
  Vertex vertex = 0;
  Count count = 0;
};

/// Vertex on the fewest induced 6-cycles (smallest index on ties).
inline std::optional<VertexMinimum> vertex_minimum_probe(const CycleCountReport& six) {
  if (six.per_vertex.empty()) return std::nullopt;
  const auto it = std::min_element(six.per_vertex.begin(), six.per_vertex.end());
  return VertexMinimum{static_cast<Vertex>(it - six.per_vertex.begin()), *it};
}

inline std::optional<VertexMinimum> vertex_minimum_probe(const Graph& g) {
  return vertex_minimum_probe(count_induced_cycles(g, 6));
}

struct HubCycleWitness {
  int k = 0;
  std::vector<Vertex> hubs;
  int min_common = 0;

  friend bool operator==(const HubCycleWitness&, const HubCycleWitness&) = default;
};

/// Cyclic sequences x0..x_{k-1} of distinct vertices in which every cyclically
/// consecutive pair has at least `tau` common neighbours. Each cyclic sequence is
/// reported once: starting at its smallest vertex, x1 < x_{k-1}. `limit` caps the
/// number of witnesses (0 = no cap).
inline std::vector<HubCycleWitness> hub_cycle_probe(const Graph& g, int k, int tau, std::size_t limit = 0) {
  if (k < 3) throw std::invalid_argument("hub cycle probe needs k >= 3");
  if (tau < 1) throw std::invalid_argument("hub cycle probe needs tau >= 1");
  const int n = g.order();
  std::vector<VertexSet> strong(static_cast<std::size_t>(n), VertexSet(n));
  std::vector<std::vector<int>> common(static_cast<std::size_t>(n));
  for (Vertex a = 0; a < n; ++a) {
    if (g.degree(a) < tau) continue;
    for (Vertex b = a + 1; b < n; ++b) {
      if (g.degree(b) < tau) continue;
      if (common_neighbourhood(g, a, b).size() >= tau) {
        strong[a].insert(b);
        strong[b].insert(a);
      }
    }
  }
  std::vector<HubCycleWitness> out;
  std::vector<Vertex> seq;
  auto finish = [&]() {
    HubCycleWitness wit{k, seq, 0};
    int best = n;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      best = std::min(best, common_neighbourhood(g, seq[i], seq[(i + 1) % seq.size()]).size());
    }
    wit.min_common = best;
    out.push_back(std::move(wit));
  };
  auto full = [&]() { return limit != 0 && out.size() >= limit; };
  auto extend = [&](auto&& self, const VertexSet& allowed) -> void {
    if (full()) return;
    VertexSet next = strong[seq.back()] & allowed;
    if (static_cast<int>(seq.size()) == k - 1) {
      next &= strong[seq.front()];
      next.for_each([&](Vertex x) {
        if (full() || x < seq[1]) return;
        seq.push_back(x);
        finish();
        seq.pop_back();
      });
      return;
    }
    next.for_each([&](Vertex x) {
      if (full()) return;
      VertexSet rest = allowed;
      rest.erase(x);
      seq.push_back(x);
      self(self, rest);
      seq.pop_back();
    });
  };
  for (Vertex x0 = 0; x0 < n && !full(); ++x0) {
    if (strong[x0].size() < 2) continue;
    seq.assign({x0});
    extend(extend, VertexSet::above(n, x0));
  }
  return out;
}

}  // namespace icycle
