#pragma once

// Independent reference implementations used only by the tests.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "icycle/graph.hpp"
#include "icycle/search.hpp"

namespace icycle::testing {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix adjacency_matrix(const Graph& g) {
  Matrix a(g.order(), std::vector<bool>(g.order(), false));
  for (const Edge& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = true;
  return a;
}

// A vertex subset induces a cycle iff every member has exactly two neighbours
// inside it and the induced subgraph is connected.
inline bool induces_cycle(const Matrix& a, const std::vector<int>& s) {
  const std::size_t k = s.size();
  for (std::size_t i = 0; i < k; ++i) {
    int deg = 0;
    for (std::size_t j = 0; j < k; ++j) deg += (i != j && a[s[i]][s[j]]) ? 1 : 0;
    if (deg != 2) return false;
  }
  std::vector<bool> seen(k, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < k; ++j) {
      if (!seen[j] && a[s[i]][s[j]]) {
        seen[j] = true;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  return reached == k;
}

struct NaiveCount {
  std::uint64_t total = 0;
  std::vector<std::uint64_t> per_vertex;
};

inline NaiveCount naive_induced_cycles(const Graph& g, int k) {
  const Matrix a = adjacency_matrix(g);
  const int n = g.order();
  NaiveCount out;
  out.per_vertex.assign(n, 0);
  std::vector<int> subset;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(subset.size()) == k) {
      if (induces_cycle(a, subset)) {
        ++out.total;
        for (int v : subset) ++out.per_vertex[v];
      }
      return;
    }
    for (int v = next; v <= n - (k - static_cast<int>(subset.size())); ++v) {
      subset.push_back(v);
      self(self, v + 1);
      subset.pop_back();
    }
  };
  if (k <= n) rec(rec, 0);
  return out;
}

// Writes the bit string explicitly, then packs it six bits at a time.
inline std::string reference_graph6(const Graph& g) {
  const int n = g.order();
  std::string bits;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? '1' : '0');
  }
  while (bits.size() % 6 != 0) bits.push_back('0');
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  for (std::size_t p = 0; p < bits.size(); p += 6) {
    out.push_back(static_cast<char>(63 + std::stoi(bits.substr(p, 6), nullptr, 2)));
  }
  return out;
}

inline Graph random_graph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution edge(density);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (edge(rng)) b.add_edge(u, v);
    }
  }
  return b.build();
}

// Seeded random planar graphs with n in 6..40 at sparse, medium and maximal
// densities.
inline std::vector<Graph> planar_corpus(std::size_t count, std::uint64_t seed = 7) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const int n = std::uniform_int_distribution<int>(6, 40)(rng);
    const auto max_m = static_cast<std::size_t>(3 * n - 6);
    std::size_t m = 0;
    switch (i % 3) {
      case 0:
        m = std::uniform_int_distribution<std::size_t>(n - 1, 2 * n - 3)(rng);
        break;
      case 1:
        m = std::uniform_int_distribution<std::size_t>(2 * n - 3, max_m)(rng);
        break;
      default:
        m = max_m;
    }
    out.push_back(random_planar(n, rng(), m));
  }
  return out;
}

}  // namespace icycle::testing
