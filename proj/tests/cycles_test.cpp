#include "icycle/cycles.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

#include "icycle/constructions.hpp"
#include "oracles.hpp"

namespace icycle {
namespace {

Graph cycle(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return b.build();
}

Graph k4() { return from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

// Simple u-w paths with `len` edges, by brute force over vertex sequences.
Count brute_paths(const Graph& g, Vertex u, Vertex w, int len) {
  std::vector<bool> used(g.order(), false);
  Count total = 0;
  auto rec = [&](auto&& self, Vertex at, int steps) -> void {
    if (steps == len) {
      total += at == w ? 1 : 0;
      return;
    }
    if (at == w) return;
    g.neighbours(at).for_each([&](Vertex x) {
      if (used[x]) return;
      used[x] = true;
      self(self, x, steps + 1);
      used[x] = false;
    });
  };
  used[u] = true;
  rec(rec, u, 0);
  return total;
}

TEST(CountTest, Examples) {
  EXPECT_EQ(count_induced_cycles(cycle(6), 6).total, 1U);
  EXPECT_EQ(count_induced_cycles(k4(), 6).total, 0U);
  EXPECT_EQ(count_induced_cycles(k4(), 3).total, 4U);
  EXPECT_EQ(count_induced_cycles(k4(), 4).total, 0U);
  EXPECT_EQ(count_induced_cycles(gen_F(10, 6).graph, 6).total, 12U);
  EXPECT_EQ(count_induced_cycles(gen_F(12, 6).graph, 6).total, 27U);
}

TEST(CountTest, RejectsLength) {
  EXPECT_THROW(count_induced_cycles(k4(), 2), std::invalid_argument);
  EXPECT_THROW(count_induced_cycles(k4(), 13), std::invalid_argument);
}

TEST(CountTest, PerVertexAndEdgeTallies) {
  const CycleCountReport r = count_induced_cycles(cycle(6), 6);
  for (Count c : r.per_vertex) EXPECT_EQ(c, 1U);
  ASSERT_EQ(r.per_edge.size(), 6U);
  EXPECT_EQ(r.edge_count(5, 0), 1U);
  EXPECT_THROW(r.edge_count(0, 3), std::invalid_argument);
}

TEST(CountTest, MatchesNaiveOracle) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 150; ++i) {
    const int n = std::uniform_int_distribution<int>(3, 11)(rng);
    const Graph g = testing::random_graph(n, std::uniform_real_distribution<double>(0.15, 0.7)(rng), rng);
    for (int k = 3; k <= std::min(n, 9); ++k) {
      const CycleCountReport r = count_induced_cycles(g, k);
      const testing::NaiveCount naive = testing::naive_induced_cycles(g, k);
      ASSERT_EQ(r.total, naive.total) << graph6_encode(g) << " k=" << k;
      ASSERT_EQ(r.per_vertex, naive.per_vertex) << graph6_encode(g) << " k=" << k;
    }
  }
}

TEST(CountTest, TwelveCycle) {
  EXPECT_EQ(count_induced_cycles(cycle(12), 12).total, 1U);
  EXPECT_EQ(count_induced_cycles(cycle(12), 11).total, 0U);
}

TEST(ThroughPathTest, Examples) {
  const Construction f = gen_F(9, 6);
  const Vertex a = f.classes[0][0];
  EXPECT_EQ(induced_cycles_through_path(f.graph, f.hubs[0], a, f.hubs[1], 6), 4U);
  EXPECT_EQ(induced_cycles_through_path(cycle(6), 2, 3, 4, 6), 1U);
  EXPECT_EQ(induced_cycles_through_path(k4(), 0, 1, 2, 6), 0U);
  EXPECT_EQ(induced_cycles_through_path(k4(), 0, 1, 2, 3), 1U);
  EXPECT_THROW(induced_cycles_through_path(cycle(6), 0, 2, 3, 6), std::invalid_argument);
  EXPECT_THROW(induced_cycles_through_path(cycle(6), 0, 1, 0, 6), std::invalid_argument);
}

TEST(ThroughPathTest, EnumeratedCyclesAreInducedAndOrdered) {
  const Construction f = gen_Fprime(11, 6);
  const auto a = testing::adjacency_matrix(f.graph);
  const Vertex mid = f.classes[0][0];
  const auto cycles = enumerate_cycles_through_path(f.graph, f.hubs[0], mid, f.hubs[1], 6);
  EXPECT_EQ(cycles.size(), induced_cycles_through_path(f.graph, f.hubs[0], mid, f.hubs[1], 6));
  for (const auto& c : cycles) {
    ASSERT_EQ(c.size(), 6U);
    EXPECT_EQ(c[0], f.hubs[0]);
    EXPECT_EQ(c[1], mid);
    EXPECT_EQ(c[2], f.hubs[1]);
    EXPECT_TRUE(testing::induces_cycle(a, c));
  }
}

TEST(ThroughPathTest, CentredSumsToTwicePerVertex) {
  for (const Graph& g : testing::planar_corpus(30, 41)) {
    const CycleCountReport r = count_induced_cycles(g, 6);
    for (Vertex v = 0; v < g.order(); ++v) {
      Count sum = 0;
      const auto nb = g.neighbours(v).to_vector();
      for (Vertex u : nb)
        for (Vertex w : nb)
          if (u != w) sum += induced_cycles_through_path(g, u, v, w, 6);
      EXPECT_EQ(sum, 2 * r.per_vertex[v]);
    }
  }
}

TEST(XDecompositionTest, ConstructionExample) {
  const Construction f = gen_F(9, 6);
  const Vertex u1 = f.hubs[0], u2 = f.hubs[1], u3 = f.hubs[2];
  const XDecomposition d = x_decomposition(f.graph, u1, f.classes[0][0], u2);
  VertexSet b(9), c(9), x(9);
  for (Vertex v : f.classes[1]) b.insert(v);
  for (Vertex v : f.classes[2]) c.insert(v);
  x = b | c;
  x.insert(u3);
  EXPECT_EQ(d.x, x);
  EXPECT_EQ(d.x1, c);
  EXPECT_EQ(d.x2.to_vector(), (std::vector<Vertex>{u3}));
  EXPECT_EQ(d.x3, b);
  EXPECT_EQ(d.cycles, 4U);
  EXPECT_TRUE(is_forest(9, d.g1));
  EXPECT_TRUE(is_forest(9, d.g2));
  const LemmaBounds lb = lemma_bounds(d);
  EXPECT_EQ(lb.bound_a, 4U);
  EXPECT_EQ(lb.bound_b, 4U);
}

TEST(XDecompositionTest, LargerConstruction) {
  const Construction f = gen_F(12, 6);
  const XDecomposition d = x_decomposition(f.graph, f.hubs[0], f.classes[0][0], f.hubs[1]);
  const LemmaBounds lb = lemma_bounds(d);
  EXPECT_EQ(lb.bound_a, 9U);
  EXPECT_EQ(lb.bound_b, 9U);
  EXPECT_EQ(d.cycles, 9U);
}

// X membership agrees with a direct scan over induced 6-sets containing the path.
TEST(XDecompositionTest, MembershipMatchesOracle) {
  for (const Graph& g : testing::planar_corpus(12, 5)) {
    if (g.order() > 14) continue;
    const auto a = testing::adjacency_matrix(g);
    for (const Edge& e : g.edges()) {
      const Vertex v = e.u, u = e.v;
      g.neighbours(v).for_each([&](Vertex w) {
        if (w == u || g.adjacent(u, w)) return;
        const XDecomposition d = x_decomposition(g, u, v, w);
        VertexSet expect(g.order());
        for (Vertex p = 0; p < g.order(); ++p)
          for (Vertex q = p + 1; q < g.order(); ++q)
            for (Vertex r = q + 1; r < g.order(); ++r) {
              std::vector<int> s{u, v, w, p, q, r};
              if (std::set<int>(s.begin(), s.end()).size() != 6) continue;
              if (testing::induces_cycle(a, s)) {
                expect.insert(p);
                expect.insert(q);
                expect.insert(r);
              }
            }
        EXPECT_EQ(d.x, expect);
      });
    }
  }
}

TEST(XDecompositionTest, SmallCases) {
  const XDecomposition c = x_decomposition(cycle(6), 0, 1, 2);
  EXPECT_EQ(c.x.to_vector(), (std::vector<Vertex>{3, 4, 5}));
  EXPECT_EQ(c.x1.size(), 1);
  EXPECT_EQ(c.x2.size(), 1);
  EXPECT_EQ(c.x3.size(), 1);
  const LemmaBounds lb = lemma_bounds(c);
  EXPECT_EQ(lb.min(), 1U);

  const XDecomposition k = x_decomposition(k4(), 0, 1, 2);
  EXPECT_TRUE(k.x.empty());
  EXPECT_THROW(lemma_bounds(k), std::invalid_argument);
  EXPECT_THROW(x_decomposition(k4(), 0, 0, 2), std::invalid_argument);
}

TEST(ForestTest, DetectsCycle) {
  EXPECT_TRUE(is_forest(4, {Edge(0, 1), Edge(1, 2), Edge(2, 3)}));
  EXPECT_FALSE(is_forest(4, {Edge(0, 1), Edge(1, 2), Edge(2, 0)}));
  EXPECT_TRUE(is_forest(4, {}));
}

TEST(PathCountTest, Examples) {
  EXPECT_EQ(count_paths(cycle(6), 0, 3, 3), 2U);
  const Construction f = gen_F(9, 6);
  EXPECT_EQ(count_paths(f.graph, f.hubs[0], f.hubs[1], 2), 2U);
  EXPECT_THROW(count_paths(cycle(6), 1, 1, 2), std::invalid_argument);
  EXPECT_THROW(count_paths(cycle(6), 0, 1, 9), std::invalid_argument);
  EXPECT_THROW(count_paths(cycle(6), 0, 1, 0), std::invalid_argument);
}

TEST(PathCountTest, LengthTwoIsCommonNeighbourhood) {
  for (const Graph& g : testing::planar_corpus(10, 8)) {
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex w = u + 1; w < g.order(); ++w)
        EXPECT_EQ(count_paths(g, u, w, 2), static_cast<Count>(common_neighbourhood(g, u, w).size()));
  }
}

TEST(PathCountTest, MatchesBruteForce) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 20; ++i) {
    const Graph g = testing::random_graph(9, 0.4, rng);
    for (int len = 1; len <= 6; ++len) {
      EXPECT_EQ(count_paths(g, 0, 5, len), brute_paths(g, 0, 5, len)) << len;
      EXPECT_EQ(count_paths(g, 3, 8, len), brute_paths(g, 3, 8, len)) << len;
    }
  }
}

TEST(PathCountTest, PlanarBound) {
  EXPECT_EQ(planar_path_bound(10, 2), 10U);
  EXPECT_EQ(planar_path_bound(10, 4), 10U * 48);
  EXPECT_EQ(planar_path_bound(10, 1), 1U);
  EXPECT_EQ(planar_path_bound(10, 3), 48U);
  EXPECT_EQ(planar_path_bound(10, 5), 48U * 48);
}

}  // namespace
}  // namespace icycle
