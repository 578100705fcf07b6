#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <istream>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "icycle/constructions.hpp"
#include "icycle/cycles.hpp"
#include "icycle/graph.hpp"
#include "icycle/graph6.hpp"
#include "icycle/planarity.hpp"
#include "icycle/structure.hpp"

namespace icycle {

// ---------------------------------------------------------------------------
// Canonical labelling

/// Orders up to this size get an isomorphism-canonical graph6 form.
inline constexpr int kCanonicalMaxOrder = 10;

namespace detail {

// Colour refinement by degree and neighbour colours. The final colouring is an
// isomorphism invariant, so restricting relabellings to colour order is sound.
inline std::vector<int> refined_colours(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(static_cast<std::size_t>(n), 0);
  int classes = n == 0 ? 0 : 1;
  while (true) {
    std::vector<std::pair<std::vector<int>, Vertex>> sig;
    sig.reserve(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      std::vector<int> s{colour[v]};
      std::vector<int> nb;
      g.neighbours(v).for_each([&](Vertex x) { nb.push_back(colour[x]); });
      std::sort(nb.begin(), nb.end());
      s.push_back(static_cast<int>(nb.size()));
      s.insert(s.end(), nb.begin(), nb.end());
      sig.emplace_back(std::move(s), v);
    }
    std::sort(sig.begin(), sig.end());
    std::vector<int> next(static_cast<std::size_t>(n), 0);
    int c = 0;
    for (std::size_t i = 0; i < sig.size(); ++i) {
      if (i > 0 && sig[i].first != sig[i - 1].first) ++c;
      next[sig[i].second] = c;
    }
    const int count = n == 0 ? 0 : c + 1;
    colour = std::move(next);
    if (count == classes) break;
    classes = count;
  }
  return colour;
}

}  // namespace detail

/// Relabelling of g that minimises the graph6 adjacency bit string among all
/// relabellings consistent with the refined colouring. Isomorphic graphs map to
/// the same result. Orders above kCanonicalMaxOrder are returned unchanged.
inline Graph canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > kCanonicalMaxOrder || n <= 1) return g;
  const std::vector<int> colour = detail::refined_colours(g);
  std::vector<std::vector<Vertex>> cells;
  {
    std::vector<Vertex> byc(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) byc[v] = v;
    std::stable_sort(byc.begin(), byc.end(), [&](Vertex a, Vertex b) { return colour[a] < colour[b]; });
    for (Vertex v : byc) {
      if (cells.empty() || colour[cells.back().front()] != colour[v]) cells.emplace_back();
      cells.back().push_back(v);
    }
  }
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<Vertex> best_order;
  std::uint64_t best = ~std::uint64_t{0};
  auto code_of = [&](const std::vector<Vertex>& ord) {
    std::uint64_t code = 0;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(ord[i], ord[j]) ? 1U : 0U);
    }
    return code;
  };
  auto walk = [&](auto&& self, std::size_t cell) -> void {
    if (cell == cells.size()) {
      const std::uint64_t code = code_of(order);
      if (code < best || best_order.empty()) {
        best = code;
        best_order = order;
      }
      return;
    }
    std::vector<Vertex> perm = cells[cell];
    std::sort(perm.begin(), perm.end());
    do {
      order.insert(order.end(), perm.begin(), perm.end());
      self(self, cell + 1);
      order.resize(order.size() - perm.size());
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  walk(walk, 0);
  std::vector<Vertex> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[best_order[i]] = i;
  GraphBuilder b(n);
  for (const Edge& e : g.edges()) b.add_edge(position[e.u], position[e.v]);
  return b.build();
}

inline std::string canonical_graph6(const Graph& g) { return graph6_encode(canonical_form(g)); }

// ---------------------------------------------------------------------------
// Exhaustive enumeration

inline constexpr int kMaxEnumerationOrder = 7;

namespace detail {

inline void check_enumeration_order(int n) {
  if (n < 0 || n > kMaxEnumerationOrder) {
    throw std::invalid_argument("internal enumeration supports n <= 7; supply an external graph6 stream instead");
  }
}

inline Graph graph_from_mask(int n, std::uint64_t mask) {
  GraphBuilder b(n);
  int bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1U) b.add_edge(i, j);
    }
  }
  return b.build();
}

inline std::uint64_t labelled_graph_count(int n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

}  // namespace detail

/// Visits every labelled planar graph on n <= 7 vertices, or with `dedup` one
/// canonical representative per isomorphism class.
inline void enumerate_planar(int n, const std::function<void(const Graph&)>& visit, bool dedup = false) {
  detail::check_enumeration_order(n);
  const std::uint64_t total = detail::labelled_graph_count(n);
  std::unordered_set<std::string> seen;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const Graph g = detail::graph_from_mask(n, mask);
    if (!is_planar_graph(g)) continue;
    if (!dedup) {
      visit(g);
      continue;
    }
    Graph canon = canonical_form(g);
    if (seen.insert(graph6_encode(canon)).second) visit(canon);
  }
}

// ---------------------------------------------------------------------------
// Maximum induced 6-cycle search

struct SearchReport {
  int n = 0;
  bool complete = false;  // true for internal exhaustive enumeration
  Count graphs_examined = 0;
  Count nonplanar_skipped = 0;
  Count empirical_max = 0;
  std::vector<std::string> argmax;  // canonical graph6, sorted
  std::optional<std::int64_t> formula_value;
  bool equality = false;
  std::vector<bool> argmax_in_family;
};

/// Associative max-merge of per-graph induced 6-cycle counts.
class SearchAccumulator {
 public:
  explicit SearchAccumulator(int n) : n_(n) {}

  int order() const { return n_; }

  /// Throws std::invalid_argument if the graph has a different order.
  void add(const Graph& g) {
    if (g.order() != n_) {
      throw std::invalid_argument("stream graph of order " + std::to_string(g.order()) + " in a search for n = " +
                                  std::to_string(n_));
    }
    if (!is_planar_graph(g)) {
      ++nonplanar_;
      return;
    }
    ++examined_;
    const Count c = n_ >= 6 ? count_induced_cycles(g, 6).total : 0;
    offer(c, graph6_encode(g));
  }

  void merge(const SearchAccumulator& other) {
    if (other.n_ != n_) throw std::invalid_argument("merging searches of different orders");
    examined_ += other.examined_;
    nonplanar_ += other.nonplanar_;
    if (!other.any_) return;
    if (!any_ || other.max_ > max_) {
      max_ = other.max_;
      ties_ = other.ties_;
      any_ = true;
    } else if (other.max_ == max_) {
      ties_.insert(other.ties_.begin(), other.ties_.end());
    }
  }

  SearchReport finish(bool complete) const {
    SearchReport r;
    r.n = n_;
    r.complete = complete;
    r.graphs_examined = examined_;
    r.nonplanar_skipped = nonplanar_;
    r.empirical_max = max_;
    std::set<std::string> canonical;
    for (const auto& s : ties_) canonical.insert(canonical_graph6(graph6_decode(s)));
    r.argmax.assign(canonical.begin(), canonical.end());
    if (n_ >= 6) {
      r.formula_value = h0(n_);
      r.equality = any_ && static_cast<std::int64_t>(max_) == *r.formula_value;
    }
    for (const auto& s : r.argmax) r.argmax_in_family.push_back(is_in_family(graph6_decode(s)).member);
    return r;
  }

 private:
  void offer(Count c, std::string g6) {
    if (!any_ || c > max_) {
      max_ = c;
      ties_.clear();
      any_ = true;
    }
    if (c == max_) ties_.insert(std::move(g6));
  }

  int n_;
  bool any_ = false;
  Count examined_ = 0;
  Count nonplanar_ = 0;
  Count max_ = 0;
  std::set<std::string> ties_;
};

/// Search over a caller-supplied list of graphs (all of order n).
inline SearchReport max_induced_6cycles(const std::vector<Graph>& stream, int n) {
  SearchAccumulator acc(n);
  for (const Graph& g : stream) acc.add(g);
  return acc.finish(false);
}

/// Exhaustive search over all labelled graphs on n <= 7 vertices. Workers take
/// interleaved mask blocks; the merge is order-independent.
inline SearchReport max_induced_6cycles_exhaustive(int n, unsigned threads = 1) {
  detail::check_enumeration_order(n);
  const std::uint64_t total = detail::labelled_graph_count(n);
  threads = std::max(1U, threads);
  constexpr std::uint64_t kBlock = 4096;
  std::vector<SearchAccumulator> partial(threads, SearchAccumulator(n));
  auto work = [&](unsigned id) {
    for (std::uint64_t start = id * kBlock; start < total; start += threads * kBlock) {
      const std::uint64_t end = std::min(total, start + kBlock);
      for (std::uint64_t mask = start; mask < end; ++mask) partial[id].add(detail::graph_from_mask(n, mask));
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(work, id);
  }
  SearchAccumulator merged(n);
  for (const auto& p : partial) merged.merge(p);
  return merged.finish(true);
}

// ---------------------------------------------------------------------------
// Random planar graphs

namespace detail {

// Unbiased draw in [0, bound) from a 64-bit engine, independent of the
// standard library's distribution implementation.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

// Flips the edge shared by two triangles to the opposite diagonal. Insertion
// alone produces chordal graphs with no induced cycle longer than a triangle.
inline void random_flips(int n, std::vector<std::array<Vertex, 3>>& triangles, std::size_t attempts,
                         std::mt19937_64& rng) {
  auto key = [n](Vertex a, Vertex b) { return static_cast<long long>(a) * n + b; };
  std::unordered_map<long long, std::size_t> dart;
  std::unordered_set<long long> present;
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    for (int i = 0; i < 3; ++i) {
      const Vertex a = triangles[t][i];
      const Vertex b = triangles[t][(i + 1) % 3];
      dart[key(a, b)] = t;
      present.insert(key(std::min(a, b), std::max(a, b)));
    }
  }
  for (std::size_t step = 0; step < attempts; ++step) {
    const auto t = static_cast<std::size_t>(draw_below(rng, triangles.size()));
    const auto side = static_cast<int>(draw_below(rng, 3));
    const Vertex x = triangles[t][side];
    const Vertex y = triangles[t][(side + 1) % 3];
    const Vertex p = triangles[t][(side + 2) % 3];
    const std::size_t u = dart.at(key(y, x));
    Vertex q = -1;
    for (int i = 0; i < 3; ++i) {
      if (triangles[u][i] == y) q = triangles[u][(i + 2) % 3];
    }
    if (q == p || present.contains(key(std::min(p, q), std::max(p, q)))) continue;
    present.erase(key(std::min(x, y), std::max(x, y)));
    present.insert(key(std::min(p, q), std::max(p, q)));
    dart.erase(key(x, y));
    dart.erase(key(y, x));
    triangles[t] = {p, x, q};
    triangles[u] = {q, y, p};
    dart[key(p, x)] = t;
    dart[key(x, q)] = t;
    dart[key(q, p)] = t;
    dart[key(q, y)] = u;
    dart[key(y, p)] = u;
    dart[key(p, q)] = u;
  }
}

}  // namespace detail

/// Random maximal planar graph by repeated vertex insertion into a uniformly
/// chosen triangular face and 6n random edge flips, then uniform deletion down
/// to `target_m` edges.
inline Graph random_planar(int n, std::uint64_t seed, std::size_t target_m) {
  if (n < 3) throw std::invalid_argument("random planar graphs need n >= 3");
  const std::size_t max_edges = static_cast<std::size_t>(3 * n - 6);
  if (target_m > max_edges) {
    throw std::invalid_argument("target edge count " + std::to_string(target_m) + " exceeds 3n-6 = " +
                                std::to_string(max_edges));
  }
  std::mt19937_64 rng(seed);
  std::vector<std::array<Vertex, 3>> triangles{{0, 1, 2}, {0, 2, 1}};
  for (Vertex v = 3; v < n; ++v) {
    const auto f = static_cast<std::size_t>(detail::draw_below(rng, triangles.size()));
    const auto [a, b, c] = triangles[f];
    triangles[f] = {a, b, v};
    triangles.push_back({b, c, v});
    triangles.push_back({c, a, v});
  }
  detail::random_flips(n, triangles, 6 * static_cast<std::size_t>(n), rng);
  std::vector<Edge> edges;
  for (const auto& t : triangles) {
    for (int i = 0; i < 3; ++i) {
      if (t[i] < t[(i + 1) % 3]) edges.emplace_back(t[i], t[(i + 1) % 3]);
    }
  }
  for (std::size_t i = edges.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(detail::draw_below(rng, i));
    std::swap(edges[i - 1], edges[j]);
  }
  edges.resize(target_m);
  return Graph::from_edge_list(n, std::span<const Edge>(edges));
}

// ---------------------------------------------------------------------------
// Property suite

struct PropertyViolation {
  std::string property;
  std::string graph6;
  std::string details;
};

namespace detail {

inline std::string set_string(const VertexSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  s.for_each([&](Vertex v) {
    os << (first ? "" : ",") << v;
    first = false;
  });
  os << '}';
  return os.str();
}

}  // namespace detail

inline std::vector<PropertyViolation> check_edge_bound(const Graph& g) {
  if (g.order() >= 3 && g.size() > static_cast<std::size_t>(3 * g.order() - 6)) {
    return {{"edge-bound", graph6_encode(g), "m = " + std::to_string(g.size()) + " > 3n-6"}};
  }
  return {};
}

inline std::vector<PropertyViolation> check_euler(const Graph& g, const Embedding& e) {
  if (satisfies_euler(g, e)) return {};
  return {{"euler", graph6_encode(g), "V - E + F != 2 on some component"}};
}

/// Sums per-vertex and per-edge tallies against the total, and the per-path
/// counts centred at each vertex (`centred`, over ordered neighbour pairs)
/// against twice the per-vertex count.
inline std::vector<PropertyViolation> check_count_consistency(const Graph& g, const CycleCountReport& r,
                                                              const std::vector<Count>& centred) {
  std::vector<PropertyViolation> out;
  const std::string g6 = graph6_encode(g);
  const auto k = static_cast<Count>(r.k);
  Count vsum = 0;
  for (Count c : r.per_vertex) vsum += c;
  Count esum = 0;
  for (const auto& ec : r.per_edge) esum += ec.count;
  if (vsum != k * r.total) {
    out.push_back({"count-consistency", g6,
                   "vertex sum " + std::to_string(vsum) + " != k * total " + std::to_string(k * r.total)});
  }
  if (esum != k * r.total) {
    out.push_back({"count-consistency", g6,
                   "edge sum " + std::to_string(esum) + " != k * total " + std::to_string(k * r.total)});
  }
  for (Vertex v = 0; v < g.order() && static_cast<std::size_t>(v) < centred.size(); ++v) {
    if (centred[v] != 2 * r.per_vertex[v]) {
      out.push_back({"count-consistency", g6,
                     "paths centred at " + std::to_string(v) + " sum to " + std::to_string(centred[v]) +
                         ", expected " + std::to_string(2 * r.per_vertex[v])});
    }
  }
  return out;
}

/// For every path u-v-w (u < w) carrying an induced 6-cycle: the X-parts obey
/// their adjacency structure, G1 and G2 are forests, and the cycle count is at
/// most the smaller bound. Also returns, via `centred`, the per-vertex sums of
/// path counts over ordered neighbour pairs.
inline std::vector<PropertyViolation> check_x_decompositions(const Graph& g, std::vector<Count>* centred = nullptr) {
  std::vector<PropertyViolation> out;
  const std::string g6 = graph6_encode(g);
  if (centred != nullptr) centred->assign(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::vector<Vertex> nb = g.neighbours(v).to_vector();
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const Vertex u = nb[i];
        const Vertex w = nb[j];
        const XDecomposition d = x_decomposition(g, u, v, w);
        if (centred != nullptr) (*centred)[v] += 2 * d.cycles;
        if (d.cycles == 0) continue;
        const std::string where = "path " + std::to_string(u) + "-" + std::to_string(v) + "-" + std::to_string(w);
        const VertexSet path = VertexSet::of(g.order(), std::array{u, v, w});
        bool structure = !d.x.intersects(path) && !d.x1.intersects(d.x2) && !d.x2.intersects(d.x3) &&
                         !d.x1.intersects(d.x3) && d.x1.is_subset_of(g.neighbours(u)) &&
                         d.x3.is_subset_of(g.neighbours(w)) && !d.x2.intersects(g.neighbours(u) | g.neighbours(w));
        d.x1.for_each([&](Vertex x) { structure = structure && g.neighbours(x).intersects(d.x2); });
        d.x2.for_each([&](Vertex x) {
          structure = structure && g.neighbours(x).intersects(d.x1) && g.neighbours(x).intersects(d.x3);
        });
        d.x3.for_each([&](Vertex x) { structure = structure && g.neighbours(x).intersects(d.x2); });
        if (!structure) {
          out.push_back({"xdecomp-structure", g6,
                         where + ": X1=" + detail::set_string(d.x1) + " X2=" + detail::set_string(d.x2) +
                             " X3=" + detail::set_string(d.x3)});
        }
        if (!is_forest(g.order(), d.g1) || !is_forest(g.order(), d.g2)) {
          out.push_back({"xdecomp-forest", g6, where + ": G1 or G2 contains a cycle"});
        }
        const LemmaBounds b = lemma_bounds(d);
        if (d.cycles > b.min()) {
          out.push_back({"xdecomp-bound", g6,
                         where + ": " + std::to_string(d.cycles) + " cycles > bound " + std::to_string(b.min())});
        }
      }
    }
  }
  return out;
}

inline std::vector<PropertyViolation> check_path_bound(const Graph& g, int max_length = 6) {
  std::vector<PropertyViolation> out;
  if (g.order() < 3) return out;
  const std::string g6 = graph6_encode(g);
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto table = path_counts_from(g, u, max_length);
    for (int i = 1; i <= max_length; ++i) {
      const Count bound = planar_path_bound(g.order(), i);
      for (Vertex w = 0; w < g.order(); ++w) {
        if (w != u && table[i][w] > bound) {
          out.push_back({"path-bound", g6,
                         std::to_string(table[i][w]) + " paths of length " + std::to_string(i) + " from " +
                             std::to_string(u) + " to " + std::to_string(w) + " > " + std::to_string(bound)});
        }
      }
    }
  }
  return out;
}

inline constexpr int kMaxTripleIntersection = 8;

inline std::vector<PropertyViolation> check_good_cycles(const Graph& g, const CycleCountReport& six) {
  std::vector<PropertyViolation> out;
  for (const GoodSixCycle& c : find_good_6cycle(g, six)) {
    const VertexSet common = xyz_intersection(g, six, c);
    if (common.size() > kMaxTripleIntersection) {
      out.push_back({"good-cycle-intersection", graph6_encode(g),
                     "hubs " + std::to_string(c.hubs[0]) + "," + std::to_string(c.hubs[1]) + "," +
                         std::to_string(c.hubs[2]) + ": |X∩Y∩Z| = " + std::to_string(common.size())});
    }
  }
  return out;
}

inline std::vector<PropertyViolation> check_empty_fans(const Graph& g, const Embedding& e,
                                                       const CycleCountReport& six) {
  std::vector<PropertyViolation> out;
  std::optional<FaceStructure> fs;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex w = u + 1; w < g.order(); ++w) {
      if (common_neighbourhood(g, u, w).size() < 7) continue;
      if (!fs) fs = face_structure(e, g);
      for (const auto& wit : find_empty_k27(g, e, *fs, u, w)) {
        if (!central_principal_subset(g, six, wit)) {
          out.push_back({"empty-fan-central", graph6_encode(g),
                         "fan over " + std::to_string(u) + "," + std::to_string(w) + " central " +
                             std::to_string(wit.central) + " has extra principal neighbours"});
        }
      }
    }
  }
  return out;
}

/// Runs every registered property on a planar graph. Throws std::invalid_argument
/// on non-planar input.
inline std::vector<PropertyViolation> property_suite(const Graph& g) {
  const PlanarityResult planar = is_planar(g);
  if (!planar.planar) throw std::invalid_argument("property suite needs a planar graph");
  std::vector<PropertyViolation> out;
  auto append = [&](std::vector<PropertyViolation> more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  };
  append(check_edge_bound(g));
  append(check_euler(g, *planar.embedding));
  const CycleCountReport six = count_induced_cycles(g, 6);
  std::vector<Count> centred;
  append(check_x_decompositions(g, &centred));
  append(check_count_consistency(g, six, centred));
  append(check_path_bound(g));
  append(check_good_cycles(g, six));
  append(check_empty_fans(g, *planar.embedding, six));
  return out;
}

// ---------------------------------------------------------------------------
// Streams

enum class InputFormat { kAuto, kGraph6, kEdgeList };

/// Applies `fn` to each input on `threads` workers; results keep input order.
template <class In, class Fn>
auto parallel_map(const std::vector<In>& inputs, unsigned threads, Fn fn) {
  using Out = decltype(fn(inputs.front()));
  std::vector<Out> results(inputs.size());
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(inputs.size(), 1))));
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i = next++; i < inputs.size(); i = next++) results[i] = fn(inputs[i]);
  };
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  return results;
}

struct StreamError {
  int line = 0;
  std::string message;
};

struct GraphStream {
  std::vector<Graph> graphs;
  std::vector<int> lines;  // 1-based source line of each graph
  std::vector<StreamError> errors;
};

namespace detail {

inline bool looks_like_edge_list(const std::string& line) {
  std::istringstream is(line);
  long long a = 0;
  long long b = 0;
  std::string rest;
  return static_cast<bool>(is >> a >> b) && !(is >> rest);
}

}  // namespace detail

/// Reads graph6 lines or edge-list blocks. Malformed graph6 lines are recorded
/// with their line number and skipped; a malformed edge list ends the stream.
inline GraphStream read_graph_stream(std::istream& is, InputFormat format = InputFormat::kAuto) {
  GraphStream out;
  std::vector<std::string> lines;
  for (std::string line; std::getline(is, line);) lines.push_back(line);
  if (format == InputFormat::kAuto) {
    format = InputFormat::kGraph6;
    for (const auto& l : lines) {
      if (l.find_first_not_of(" \t\r") == std::string::npos) continue;
      if (detail::looks_like_edge_list(l)) format = InputFormat::kEdgeList;
      break;
    }
  }
  if (format == InputFormat::kGraph6) {
    for (std::size_t i = 0; i < lines.size(); ++i) {
      std::string_view text = lines[i];
      while (!text.empty() && (text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
      if (text.empty()) continue;
      try {
        out.graphs.push_back(graph6_decode(text));
        out.lines.push_back(static_cast<int>(i) + 1);
      } catch (const std::exception& e) {
        out.errors.push_back({static_cast<int>(i) + 1, e.what()});
      }
    }
    return out;
  }
  std::ostringstream joined;
  for (const auto& l : lines) joined << l << '\n';
  std::istringstream body(joined.str());
  while (true) {
    Graph g;
    try {
      if (!read_edge_list(body, g)) break;
    } catch (const std::exception& e) {
      out.errors.push_back({0, e.what()});
      break;
    }
    out.graphs.push_back(std::move(g));
    out.lines.push_back(0);
  }
  return out;
}

}  // namespace icycle
