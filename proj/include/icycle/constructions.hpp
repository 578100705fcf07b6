#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "icycle/graph.hpp"
#include "icycle/planarity.hpp"

namespace icycle {

/// A generated construction: the graph, its canonical plane embedding, and the
/// layout of the base cycle. `hubs` are the cycle vertices that were not blown
/// up; `classes` are the blown-up classes in cycle order, each listed in path order.
struct Construction {
  Graph graph;
  Embedding embedding;
  int base_length = 0;
  std::vector<Vertex> hubs;
  std::vector<std::vector<Vertex>> classes;
};

/// Selects which consecutive pairs (class[i], class[i+1]) of the three classes of
/// an F_n member receive an edge.
struct IntraSelector {
  std::array<std::vector<int>, 3> positions;

  static IntraSelector none() { return {}; }
  static IntraSelector all(int n);
  /// Each allowed position kept independently with probability 1/2.
  static IntraSelector random(int n, std::uint64_t seed);
};

namespace detail {

struct CycleLayout {
  std::vector<int> group_size;  // per cycle position; 1 for hubs
  std::vector<bool> blown;
};

inline CycleLayout cycle_layout(int n, int m) {
  if (m < 3) throw std::invalid_argument("base cycle length must be at least 3");
  if (n < m) throw std::invalid_argument("order " + std::to_string(n) + " below base cycle length " + std::to_string(m));
  CycleLayout layout;
  layout.group_size.assign(static_cast<std::size_t>(m), 1);
  layout.blown.assign(static_cast<std::size_t>(m), false);
  const int classes = m / 2;
  const int blown_vertices = n - (m - classes);
  const int base = blown_vertices / classes;
  const int extra = blown_vertices % classes;
  // blown positions 1, 3, 5, ...; for odd m the unblown m-1 and 0 are adjacent
  for (int c = 0; c < classes; ++c) {
    const int pos = 2 * c + 1;
    layout.blown[pos] = true;
    layout.group_size[pos] = base + (c < extra ? 1 : 0);
  }
  return layout;
}

inline std::vector<int> class_sizes_for_family(int n) {
  const CycleLayout layout = cycle_layout(n, 6);
  return {layout.group_size[1], layout.group_size[3], layout.group_size[5]};
}

// Straight-line drawing: cycle positions on the unit circle, each blown class on
// the ray through its position, moving inwards.
inline Construction build_blowup(int n, int m, bool with_paths, const IntraSelector* selector) {
  const CycleLayout layout = cycle_layout(n, m);
  Construction out;
  out.base_length = m;
  std::vector<std::vector<Vertex>> groups(static_cast<std::size_t>(m));
  std::vector<Point2> points;
  points.reserve(static_cast<std::size_t>(n));
  Vertex next = 0;
  int largest = 1;
  for (int pos = 0; pos < m; ++pos) largest = std::max(largest, layout.group_size[pos]);
  const double step = 0.5 / largest;
  for (int pos = 0; pos < m; ++pos) {
    const double angle = 2.0 * std::numbers::pi * pos / m;
    for (int j = 0; j < layout.group_size[pos]; ++j) {
      const double radius = 1.0 - step * j;
      points.push_back({radius * std::cos(angle), radius * std::sin(angle)});
      groups[pos].push_back(next++);
    }
    if (layout.blown[pos]) {
      out.classes.push_back(groups[pos]);
    } else {
      out.hubs.push_back(groups[pos].front());
    }
  }

  GraphBuilder b(n);
  for (int pos = 0; pos < m; ++pos) {
    for (Vertex a : groups[pos]) {
      for (Vertex c : groups[(pos + 1) % m]) b.add_edge(a, c);
    }
  }
  for (std::size_t c = 0; c < out.classes.size(); ++c) {
    const auto& cls = out.classes[c];
    if (with_paths) {
      for (std::size_t i = 0; i + 1 < cls.size(); ++i) b.add_edge(cls[i], cls[i + 1]);
    } else if (selector != nullptr) {
      for (int i : selector->positions.at(c)) {
        if (i < 0 || static_cast<std::size_t>(i) + 1 >= cls.size()) {
          throw std::out_of_range("selector position " + std::to_string(i) + " outside class " + std::to_string(c) +
                                  " of size " + std::to_string(cls.size()));
        }
        b.add_edge(cls[static_cast<std::size_t>(i)], cls[static_cast<std::size_t>(i) + 1]);
      }
    }
  }
  out.graph = b.build();
  out.embedding = embedding_from_drawing(out.graph, points);
  return out;
}

}  // namespace detail

inline IntraSelector IntraSelector::all(int n) {
  IntraSelector s;
  const auto sizes = detail::class_sizes_for_family(n);
  for (int c = 0; c < 3; ++c) {
    for (int i = 0; i + 1 < sizes[c]; ++i) s.positions[c].push_back(i);
  }
  return s;
}

inline IntraSelector IntraSelector::random(int n, std::uint64_t seed) {
  IntraSelector s;
  const auto sizes = detail::class_sizes_for_family(n);
  std::mt19937_64 rng(seed);
  for (int c = 0; c < 3; ++c) {
    for (int i = 0; i + 1 < sizes[c]; ++i) {
      if (rng() & 1U) s.positions[c].push_back(i);
    }
  }
  return s;
}

/// F_{n,m}: an m-cycle with floor(m/2) pairwise non-adjacent vertices blown up to
/// classes whose sizes differ by at most one, larger classes first.
inline Construction gen_F(int n, int m) { return detail::build_blowup(n, m, false, nullptr); }

/// F'_{n,m}: F_{n,m} plus a path through each blown-up class.
inline Construction gen_Fprime(int n, int m) { return detail::build_blowup(n, m, true, nullptr); }

/// A member of F_n: F_{n,6} plus the selected intra-class path edges.
inline Construction gen_family_member(int n, const IntraSelector& selector) {
  if (n < 6) throw std::invalid_argument("family members need n >= 6");
  return detail::build_blowup(n, 6, false, &selector);
}

// Closed forms. Every quotient below is exact for the stated residue.

inline constexpr int kFormulaMaxOrder = 6'000'000;

namespace detail {
inline void check_formula_order(long long n) {
  if (n < 6) throw std::invalid_argument("formula needs n >= 6");
  if (n > kFormulaMaxOrder) throw std::invalid_argument("formula order too large for 64-bit evaluation");
}
}  // namespace detail

inline std::int64_t h0(long long n) {
  detail::check_formula_order(n);
  switch (n % 3) {
    case 0: {
      const std::int64_t a = n / 3 - 1;
      return a * a * a;
    }
    case 1: {
      const std::int64_t a = (n - 4) / 3;
      return a * a * ((n - 1) / 3);
    }
    default: {
      const std::int64_t a = (n - 2) / 3;
      return a * a * ((n - 5) / 3);
    }
  }
}

inline std::int64_t h1(long long n) {
  detail::check_formula_order(n);
  switch (n % 3) {
    case 0: {
      const std::int64_t a = n / 3 - 1;
      return a * a;
    }
    case 1: {
      const std::int64_t a = (n - 4) / 3;
      return a * a;
    }
    default:
      return ((n - 2) / 3) * ((n - 5) / 3);
  }
}

/// Maximum number of induced 6-cycles in an n-vertex planar graph, for large n.
inline std::int64_t fi_formula(long long n) { return h0(n); }

struct FormulaTable {
  long long n = 0;
  std::int64_t h0 = 0;
  std::int64_t h1 = 0;
  std::int64_t fi = 0;
};

inline FormulaTable formula_table(long long n) { return {n, h0(n), h1(n), fi_formula(n)}; }

/// Verdict of F_n membership. When `member` holds, hubs are (u1,u2,u3), A sits
/// between u1 and u2, B between u2 and u3, C between u3 and u1, and each class
/// is listed in an order along which its internal edges are consecutive pairs.
struct FamilyReport {
  bool member = false;
  std::array<Vertex, 3> hubs{-1, -1, -1};
  std::array<std::vector<Vertex>, 3> classes;
  std::vector<Edge> intra_edges;
  std::string reason;
};

namespace detail {

// Orders a linear forest along its paths; empty result if it is not one.
inline std::optional<std::vector<Vertex>> path_order(const Graph& g, const VertexSet& cls) {
  std::vector<Vertex> order;
  VertexSet seen(g.order());
  const std::vector<Vertex> members = cls.to_vector();
  std::size_t internal_edges = 0;
  for (Vertex v : members) {
    const int d = (g.neighbours(v) & cls).size();
    if (d > 2) return std::nullopt;
    internal_edges += static_cast<std::size_t>(d);
  }
  internal_edges /= 2;
  std::size_t components = 0;
  for (Vertex start : members) {
    if (seen.contains(start) || (g.neighbours(start) & cls).size() == 2) continue;
    ++components;
    Vertex prev = -1;
    Vertex at = start;
    while (at >= 0) {
      seen.insert(at);
      order.push_back(at);
      Vertex next = -1;
      (g.neighbours(at) & cls).for_each([&](Vertex x) {
        if (x != prev && !seen.contains(x)) next = x;
      });
      prev = at;
      at = next;
    }
  }
  // any unvisited vertex lies on a cycle
  if (order.size() != members.size()) return std::nullopt;
  if (internal_edges + components != members.size()) return std::nullopt;
  return order;
}

inline std::optional<FamilyReport> try_hubs(const Graph& g, Vertex u1, Vertex u2, Vertex u3) {
  const int n = g.order();
  if (g.adjacent(u1, u2) || g.adjacent(u2, u3) || g.adjacent(u1, u3)) return std::nullopt;
  VertexSet hubs(n);
  hubs.insert(u1);
  hubs.insert(u2);
  hubs.insert(u3);
  const VertexSet a = common_neighbourhood(g, u1, u2) - hubs;
  const VertexSet b = common_neighbourhood(g, u2, u3) - hubs;
  const VertexSet c = common_neighbourhood(g, u3, u1) - hubs;
  if (a.intersects(b) || b.intersects(c) || a.intersects(c)) return std::nullopt;
  if ((a | b | c | hubs) != g.vertices()) return std::nullopt;
  const int sa = a.size();
  const int sb = b.size();
  const int sc = c.size();
  if (std::max({sa, sb, sc}) - std::min({sa, sb, sc}) > 1) return std::nullopt;
  // hub neighbourhoods must be exactly the two adjacent classes
  if (g.neighbours(u1) != (a | c) || g.neighbours(u2) != (a | b) || g.neighbours(u3) != (b | c)) return std::nullopt;
  const std::array<const VertexSet*, 3> classes{&a, &b, &c};
  FamilyReport report;
  report.member = true;
  report.hubs = {u1, u2, u3};
  for (int i = 0; i < 3; ++i) {
    const VertexSet& cls = *classes[i];
    const VertexSet own_hubs = i == 0 ? (VertexSet::of(n, std::array{u1, u2}))
                                      : i == 1 ? VertexSet::of(n, std::array{u2, u3}) : VertexSet::of(n, std::array{u3, u1});
    bool ok = true;
    cls.for_each([&](Vertex x) {
      if (!(g.neighbours(x) - cls - own_hubs).empty()) ok = false;
    });
    if (!ok) return std::nullopt;
    auto order = path_order(g, cls);
    if (!order) return std::nullopt;
    report.classes[i] = std::move(*order);
    cls.for_each([&](Vertex x) {
      (g.neighbours(x) & cls).for_each([&](Vertex y) {
        if (x < y) report.intra_edges.emplace_back(x, y);
      });
    });
  }
  std::sort(report.intra_edges.begin(), report.intra_edges.end());
  return report;
}

}  // namespace detail

/// Exact F_n membership: tries every hub triple among vertices of large enough
/// degree and checks class sizes, hub adjacency and intra-class paths directly.
inline FamilyReport is_in_family(const Graph& g) {
  const int n = g.order();
  FamilyReport rejected;
  if (n < 6) {
    rejected.reason = "order " + std::to_string(n) + " below 6";
    return rejected;
  }
  const int min_hub_degree = std::max(0, ((n - 3) / 3) * 2 - 2);
  std::vector<Vertex> candidates;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) >= min_hub_degree) candidates.push_back(v);
  }
  if (candidates.size() < 3) {
    rejected.reason = "fewer than three vertices of hub degree";
    return rejected;
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (g.adjacent(candidates[i], candidates[j])) continue;
      for (std::size_t k = j + 1; k < candidates.size(); ++k) {
        if (auto report = detail::try_hubs(g, candidates[i], candidates[j], candidates[k])) return *report;
      }
    }
  }
  rejected.reason = "no hub triple yields balanced classes with the required adjacency";
  return rejected;
}

}  // namespace icycle
