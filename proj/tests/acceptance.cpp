// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "icycle/constructions.hpp"
#include "icycle/cycles.hpp"
#include "icycle/graph6.hpp"
#include "icycle/planarity.hpp"
#include "icycle/search.hpp"
#include "icycle/structure.hpp"
#include "oracles.hpp"

namespace {

using namespace icycle;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_s > 0 && secs >= limit_s) o.fail("runtime " + std::to_string(secs) + " s over limit");
  std::printf("%s %2d %-34s %8.2fs  %s\n", o.ok ? "PASS" : "FAIL", id, name, secs, o.detail.c_str());
  std::fflush(stdout);
  if (!o.ok) ++failures;
}

unsigned workers() { return std::max(1U, std::thread::hardware_concurrency()); }

// Property results over the random corpus, shared by three criteria.
struct CorpusScan {
  std::size_t graphs = 0;
  std::size_t paths_checked = 0;
  std::size_t good_cycles = 0;
  std::vector<std::string> xdecomp;
  std::vector<std::string> good;
  std::vector<std::string> path_bound;
};

CorpusScan scan_corpus(const std::vector<Graph>& corpus) {
  struct Local {
    std::size_t paths = 0;
    std::size_t good_cycles = 0;
    std::vector<PropertyViolation> xdecomp, good, path_bound;
  };
  const auto results = parallel_map(corpus, workers(), [](const Graph& g) {
    Local l;
    l.xdecomp = check_x_decompositions(g);
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto nb = g.neighbours(v).to_vector();
      for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
          if (induced_cycles_through_path(g, nb[i], v, nb[j], 6) > 0) ++l.paths;
    }
    const CycleCountReport six = count_induced_cycles(g, 6);
    l.good_cycles = find_good_6cycle(g, six).size();
    l.good = check_good_cycles(g, six);
    l.path_bound = check_path_bound(g, 6);
    return l;
  });
  CorpusScan s;
  s.graphs = corpus.size();
  auto note = [](std::vector<std::string>& into, const std::vector<PropertyViolation>& vs) {
    for (const auto& v : vs) into.push_back(v.property + " " + v.graph6 + " " + v.details);
  };
  for (const auto& l : results) {
    s.paths_checked += l.paths;
    s.good_cycles += l.good_cycles;
    note(s.xdecomp, l.xdecomp);
    note(s.good, l.good);
    note(s.path_bound, l.path_bound);
  }
  return s;
}

}  // namespace

int main() {
  criterion(1, "formula telescoping and spot values", 1.0, [] {
    Outcome o;
    for (long long n = 7; n <= 10000; ++n) {
      if (h0(n) - h0(n - 1) != h1(n)) o.fail("telescoping breaks at n=" + std::to_string(n));
      if (fi_formula(n) != h0(n)) o.fail("fi != h0 at n=" + std::to_string(n));
    }
    if (h0(9) != 8 || h0(10) != 12 || h0(11) != 18) o.fail("h0 spot values");
    if (h1(9) != 4 || h1(11) != 6) o.fail("h1 spot values");
    if (o.ok) o.detail = "n=7..10000";
    return o;
  });

  criterion(2, "family members count exactly h0(n)", 120.0, [] {
    Outcome o;
    int checked = 0;
    for (int n = 6; n <= 60; ++n) {
      const IntraSelector selectors[] = {IntraSelector::none(), IntraSelector::all(n),
                                         IntraSelector::random(n, 1000 + n), IntraSelector::random(n, 2000 + n)};
      for (const auto& s : selectors) {
        const Construction c = gen_family_member(n, s);
        const Count total = count_induced_cycles(c.graph, 6).total;
        if (total != static_cast<Count>(h0(n))) {
          o.fail("n=" + std::to_string(n) + " total " + std::to_string(total));
        }
        ++checked;
      }
    }
    if (o.ok) o.detail = std::to_string(checked) + " graphs, n=6..60";
    return o;
  });

  criterion(3, "minimum per-vertex count equals h1(n)", 120.0, [] {
    Outcome o;
    for (int n = 9; n <= 60; ++n) {
      const auto m = vertex_minimum_probe(gen_F(n, 6).graph);
      if (!m || m->count != static_cast<Count>(h1(n))) o.fail("n=" + std::to_string(n));
    }
    if (o.ok) o.detail = "n=9..60";
    return o;
  });

  criterion(4, "exhaustive planar search n=6,7", 900.0, [] {
    Outcome o;
    const SearchReport six = max_induced_6cycles_exhaustive(6, workers());
    if (!six.complete || six.empirical_max != 1 || !six.equality) o.fail("n=6 maximum is not 1");
    const SearchReport seven = max_induced_6cycles_exhaustive(7, workers());
    if (!seven.complete || seven.empirical_max < static_cast<Count>(h0(7))) o.fail("n=7 maximum below h0(7)");
    bool in_family = true;
    for (bool b : seven.argmax_in_family) in_family = in_family && b;
    o.detail += "n=7: max=" + std::to_string(seven.empirical_max) + " h0=" + std::to_string(h0(7)) +
                " equality=" + (seven.equality ? "true" : "false") + " argmax=" + std::to_string(seven.argmax.size()) +
                " all_in_family=" + (in_family ? "true" : "false");
    return o;
  });

  // The corpus scan runs under criterion 5; criteria 6 and 8 reuse it.
  CorpusScan scan;
  criterion(5, "X-decomposition forests and bounds", 600.0, [&] {
    Outcome o;
    scan = scan_corpus(testing::planar_corpus(1000, 2718));
    if (scan.graphs < 1000) o.fail("corpus too small");
    if (!scan.xdecomp.empty()) o.fail(std::to_string(scan.xdecomp.size()) + " violations, first: " + scan.xdecomp[0]);
    if (o.ok) {
      o.detail = std::to_string(scan.graphs) + " graphs, " + std::to_string(scan.paths_checked) + " paths carrying an induced 6-cycle";
    }
    return o;
  });

  criterion(6, "good 6-cycle triple intersection <= 8", 0, [&] {
    Outcome o;
    if (!scan.good.empty()) o.fail(std::to_string(scan.good.size()) + " violations, first: " + scan.good[0]);
    std::size_t constructed = 0;
    for (int n = 6; n <= 60; ++n) {
      const Graph g = gen_F(n, 6).graph;
      const CycleCountReport six = count_induced_cycles(g, 6);
      const auto vs = check_good_cycles(g, six);
      if (!vs.empty()) o.fail("gen_F(" + std::to_string(n) + ",6): " + vs[0].details);
      constructed += find_good_6cycle(g, six).size();
    }
    if (o.ok) {
      o.detail = std::to_string(scan.good_cycles) + " corpus cycles, " + std::to_string(constructed) +
                 " constructed cycles";
    }
    return o;
  });

  criterion(7, "empty K_{2,7} and central vertex", 10.0, [] {
    Outcome o;
    std::size_t total = 0;
    for (int n : {24, 30}) {
      const Construction c = gen_F(n, 6);
      const auto wits = find_empty_k27(c.graph, c.embedding, c.hubs[0], c.hubs[1]);
      if (wits.empty()) o.fail("no witness for n=" + std::to_string(n));
      const CycleCountReport six = count_induced_cycles(c.graph, 6);
      for (const auto& w : wits) {
        if (!central_principal_check(c.graph, six, w)) o.fail("central check false for n=" + std::to_string(n));
      }
      total += wits.size();
    }
    if (o.ok) o.detail = std::to_string(total) + " witnesses";
    return o;
  });

  criterion(8, "path counts within planar bound", 0, [&] {
    Outcome o;
    if (!scan.path_bound.empty()) {
      o.fail(std::to_string(scan.path_bound.size()) + " violations, first: " + scan.path_bound[0]);
    }
    if (o.ok) o.detail = std::to_string(scan.graphs) + " graphs, lengths 2..6";
    return o;
  });

  criterion(9, "hub-cycle probe on blow-ups", 30.0, [] {
    Outcome o;
    auto expect_hubs = [&](int n, int m, int k, int tau) {
      const Construction c = gen_F(n, m);
      const auto wits = hub_cycle_probe(c.graph, k, tau);
      bool found = false;
      for (const auto& w : wits) found = found || (w.hubs == c.hubs && w.min_common >= tau);
      if (!found) o.fail("gen_F(" + std::to_string(n) + "," + std::to_string(m) + ") k=" + std::to_string(k));
    };
    expect_hubs(20, 8, 4, 4);
    for (int k = 3; k <= 5; ++k) expect_hubs(6 * k, 2 * k, k, 5);
    if (o.ok) o.detail = "F(20,8); F(18,6), F(24,8), F(30,10)";
    return o;
  });

  criterion(10, "graph6 round trip", 30.0, [] {
    Outcome o;
    std::mt19937_64 rng(1618);
    std::vector<int> orders;
    for (int n = 1; n <= 62; ++n) orders.push_back(n);
    orders.push_back(63);
    orders.push_back(100);
    for (int i = 0; i < 10000; ++i) {
      const int n = orders[static_cast<std::size_t>(i) % orders.size()];
      const double density = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      const Graph g = testing::random_graph(n, density, rng);
      const std::string s = graph6_encode(g);
      if (graph6_decode(s) != g || graph6_encode(graph6_decode(s)) != s) o.fail("round trip, n=" + std::to_string(n));
      if (i % 50 == 0 && s != testing::reference_graph6(g)) o.fail("reference mismatch, n=" + std::to_string(n));
    }
    const Graph k2 = from_edge_list(2, {{0, 1}});
    const Graph c6 = from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    if (graph6_encode(k2) != "A_" || testing::reference_graph6(k2) != "A_" || graph6_decode("A_") != k2) {
      o.fail("K2");
    }
    if (graph6_encode(c6) != testing::reference_graph6(c6) || graph6_encode(c6) != "EhEG" ||
        graph6_decode("EhEG") != c6) {
      o.fail("C6");
    }
    if (o.ok) o.detail = "10000 graphs";
    return o;
  });

  criterion(11, "counts agree with naive oracle", 300.0, [] {
    Outcome o;
    std::mt19937_64 rng(314159);
    std::size_t comparisons = 0;
    for (int i = 0; i < 500; ++i) {
      const int n = std::uniform_int_distribution<int>(4, 10)(rng);
      const double density = std::uniform_real_distribution<double>(0.1, 0.8)(rng);
      const Graph g = testing::random_graph(n, density, rng);
      for (int k = 4; k <= 8; ++k) {
        const CycleCountReport r = count_induced_cycles(g, k);
        const testing::NaiveCount naive = testing::naive_induced_cycles(g, k);
        if (r.total != naive.total || r.per_vertex != naive.per_vertex) {
          o.fail(graph6_encode(g) + " k=" + std::to_string(k));
        }
        ++comparisons;
      }
    }
    if (o.ok) o.detail = std::to_string(comparisons) + " comparisons";
    return o;
  });

  std::printf("%d criteria failed\n", failures);
  return failures;
}
