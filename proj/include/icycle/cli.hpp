#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "icycle/constructions.hpp"
#include "icycle/cycles.hpp"
#include "icycle/graph6.hpp"
#include "icycle/planarity.hpp"
#include "icycle/report_json.hpp"
#include "icycle/search.hpp"
#include "icycle/structure.hpp"

namespace icycle::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitInputError = 2;

inline constexpr std::uint64_t kDefaultSeed = 20240601;

enum class OutputFormat { kGraph6, kEdgeList, kJson };

struct RunConfig {
  std::string subcommand;
  std::string input = "-";  // path, "-" for stdin
  bool input_given = false;
  InputFormat input_format = InputFormat::kAuto;
  OutputFormat output_format = OutputFormat::kGraph6;
  int k = 6;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;

  // gen
  int n = 0;
  int m = 0;
  bool prime = false;
  std::string family;
  std::string sidecar;

  // analyze
  int probe_k = 3;
  int tau = 0;                 // 0: max(2, ceil(n/10))
  double probe_threshold = -1;  // <0: n^(probe_k-1)/10
  bool probe_all = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses a selector: "none", "all", "random" (uses the seed) or a list such as
/// "A:0,2;B:;C:1" of edge positions per class.
inline IntraSelector parse_selector(const std::string& text, int n, std::uint64_t seed) {
  if (text == "none") return IntraSelector::none();
  if (text == "all") return IntraSelector::all(n);
  if (text == "random") return IntraSelector::random(n, seed);
  IntraSelector s;
  std::istringstream parts(text);
  for (std::string part; std::getline(parts, part, ';');) {
    if (part.empty()) continue;
    if (part.size() < 2 || part[1] != ':' || part[0] < 'A' || part[0] > 'C') {
      throw UsageError("bad selector segment '" + part + "'");
    }
    const auto cls = static_cast<std::size_t>(part[0] - 'A');
    std::istringstream items(part.substr(2));
    for (std::string item; std::getline(items, item, ',');) {
      if (item.empty()) continue;
      try {
        std::size_t used = 0;
        const int pos = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
        s.positions[cls].push_back(pos);
      } catch (const std::exception&) {
        throw UsageError("bad selector position '" + item + "'");
      }
    }
  }
  return s;
}

namespace detail {

inline void write_graph(std::ostream& out, const Graph& g, OutputFormat format) {
  if (format == OutputFormat::kEdgeList) {
    write_edge_list(out, g);
  } else {
    out << graph6_encode(g) << '\n';
  }
}

// Reads the configured input; malformed entries go to `err`. Returns false if
// any input error occurred.
inline bool load_stream(const RunConfig& cfg, std::istream& in, std::ostream& err, GraphStream& stream) {
  if (cfg.input == "-") {
    stream = read_graph_stream(in, cfg.input_format);
  } else {
    std::ifstream file(cfg.input);
    if (!file) {
      err << "cannot open input '" << cfg.input << "'\n";
      return false;
    }
    stream = read_graph_stream(file, cfg.input_format);
  }
  for (const auto& e : stream.errors) {
    err << "input line " << e.line << ": " << e.message << '\n';
  }
  return stream.errors.empty();
}

inline int auto_tau(const RunConfig& cfg, int n) {
  if (cfg.tau > 0) return cfg.tau;
  return std::max(2, static_cast<int>(std::ceil(n / 10.0)));
}

inline Json analyze_graph(const RunConfig& cfg, const Graph& g) {
  Json out{{"graph6", graph6_encode(g)}, {"n", g.order()}, {"m", g.size()}};
  const PlanarityResult planar = is_planar(g);
  out["planar"] = planar.planar;
  const CycleCountReport six = count_induced_cycles(g, 6);
  out["induced_6cycles"] = six.total;

  Json principal = Json::array();
  for (const VertexSet& s : all_principal_neighbours(g, six)) principal.push_back(to_json(s));
  out["principal_neighbours"] = principal;

  Json good = Json::array();
  for (const GoodSixCycle& c : find_good_6cycle(g, six)) {
    Json entry = to_json(c);
    if (planar.planar) entry["xyz_intersection"] = to_json(xyz_intersection(g, six, c));
    good.push_back(entry);
  }
  out["good_cycles"] = good;

  Json fans = Json::array();
  if (planar.planar) {
    std::optional<FaceStructure> fs;
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex w = u + 1; w < g.order(); ++w) {
        if (common_neighbourhood(g, u, w).size() < 7) continue;
        if (!fs) fs = face_structure(*planar.embedding, g);
        for (const auto& wit : find_empty_k27(g, *planar.embedding, *fs, u, w)) {
          Json entry = to_json(wit);
          entry["central_principal_check"] = central_principal_check(g, six, wit);
          entry["central_principal_subset"] = central_principal_subset(g, six, wit);
          fans.push_back(entry);
        }
      }
    }
  }
  out["empty_k27"] = fans;

  Json minimum(nullptr);
  if (auto vm = vertex_minimum_probe(six)) {
    minimum = Json{{"vertex", vm->vertex}, {"count", vm->count}};
    if (g.order() >= 6) minimum["h1"] = h1(g.order());
  }
  out["vertex_minimum"] = minimum;

  // Hub-cycle probe, gated on every vertex lying on enough induced 2k-cycles.
  const int half = cfg.probe_k;
  const int tau = auto_tau(cfg, g.order());
  const double threshold =
      cfg.probe_threshold >= 0 ? cfg.probe_threshold : std::pow(static_cast<double>(g.order()), half - 1) / 10.0;
  Json probe{{"k", half}, {"tau", tau}, {"threshold", threshold}};
  if (2 * half <= kMaxCycleLength && g.order() > 0) {
    const CycleCountReport long_cycles = half == 3 ? six : count_induced_cycles(g, 2 * half);
    const Count least = *std::min_element(long_cycles.per_vertex.begin(), long_cycles.per_vertex.end());
    probe["min_vertex_cycles"] = least;
    const bool run = cfg.probe_all || static_cast<double>(least) >= threshold;
    probe["ran"] = run;
    Json witnesses = Json::array();
    if (run) {
      for (const auto& h : hub_cycle_probe(g, half, tau, 1000)) witnesses.push_back(to_json(h));
    }
    probe["witnesses"] = witnesses;
  } else {
    probe["ran"] = false;
    probe["witnesses"] = Json::array();
  }
  out["hub_cycle_probe"] = probe;
  return out;
}

}  // namespace detail

/// Executes one parsed command. JSON documents go to `out`, one per line;
/// diagnostics go to `err`.
inline int run(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  if (cfg.k < kMinCycleLength || cfg.k > kMaxCycleLength) {
    err << "k must be in 3..12\n";
    return kExitInputError;
  }
  try {
    if (cfg.subcommand == "formula") {
      out << to_json(formula_table(cfg.n)).dump() << '\n';
      return kExitOk;
    }

    if (cfg.subcommand == "gen") {
      Construction c;
      if (!cfg.family.empty()) {
        if (cfg.m != 6) throw UsageError("--family requires m = 6");
        c = gen_family_member(cfg.n, parse_selector(cfg.family, cfg.n, cfg.seed));
      } else if (cfg.prime) {
        c = gen_Fprime(cfg.n, cfg.m);
      } else {
        c = gen_F(cfg.n, cfg.m);
      }
      if (cfg.output_format == OutputFormat::kJson) {
        out << to_json(c).dump() << '\n';
      } else {
        detail::write_graph(out, c.graph, cfg.output_format);
      }
      if (!cfg.sidecar.empty()) {
        std::ofstream side(cfg.sidecar);
        if (!side) throw UsageError("cannot write sidecar '" + cfg.sidecar + "'");
        side << to_json(c).dump(2) << '\n';
      }
      return kExitOk;
    }

    if (cfg.subcommand == "search" && !cfg.input_given) {
      out << to_json(max_induced_6cycles_exhaustive(cfg.n, cfg.threads)).dump() << '\n';
      return kExitOk;
    }

    GraphStream stream;
    bool clean = detail::load_stream(cfg, in, err, stream);

    if (cfg.subcommand == "search") {
      SearchAccumulator acc(cfg.n);
      for (std::size_t i = 0; i < stream.graphs.size(); ++i) {
        try {
          acc.add(stream.graphs[i]);
        } catch (const std::invalid_argument& e) {
          err << "input line " << stream.lines[i] << ": " << e.what() << '\n';
          clean = false;
        }
      }
      out << to_json(acc.finish(false)).dump() << '\n';
      return clean ? kExitOk : kExitInputError;
    }

    if (cfg.subcommand == "count") {
      for (const Graph& g : stream.graphs) {
        Json doc{{"graph6", graph6_encode(g)}, {"n", g.order()}};
        doc.update(to_json(count_induced_cycles(g, cfg.k)));
        out << doc.dump() << '\n';
      }
    } else if (cfg.subcommand == "check-family") {
      for (const Graph& g : stream.graphs) {
        Json doc{{"graph6", graph6_encode(g)}};
        doc.update(to_json(is_in_family(g)));
        out << doc.dump() << '\n';
      }
    } else if (cfg.subcommand == "analyze") {
      for (const Graph& g : stream.graphs) out << detail::analyze_graph(cfg, g).dump() << '\n';
    } else if (cfg.subcommand == "verify") {
      struct Outcome {
        bool planar = true;
        std::vector<PropertyViolation> violations;
      };
      const auto outcomes = parallel_map(stream.graphs, cfg.threads, [](const Graph& g) {
        Outcome o;
        if (!is_planar_graph(g)) {
          o.planar = false;
          return o;
        }
        o.violations = property_suite(g);
        return o;
      });
      bool violated = false;
      for (std::size_t i = 0; i < outcomes.size(); ++i) {
        Json doc{{"graph6", graph6_encode(stream.graphs[i])}, {"planar", outcomes[i].planar}};
        Json list = Json::array();
        for (const auto& v : outcomes[i].violations) list.push_back(to_json(v));
        doc["violations"] = list;
        out << doc.dump() << '\n';
        if (!outcomes[i].planar) {
          err << "input line " << stream.lines[i] << ": graph is not planar\n";
          clean = false;
        }
        violated = violated || !outcomes[i].violations.empty();
      }
      if (!clean) return kExitInputError;
      return violated ? kExitViolations : kExitOk;
    } else {
      throw UsageError("unknown subcommand '" + cfg.subcommand + "'");
    }
    return clean ? kExitOk : kExitInputError;
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kExitInputError;
  } catch (const std::out_of_range& e) {
    err << e.what() << '\n';
    return kExitInputError;
  }
}

/// Builds the command-line parser bound to `cfg`.
inline void configure(CLI::App& app, RunConfig& cfg) {
  app.require_subcommand(1);
  app.fallthrough();

  static const std::map<std::string, InputFormat> in_formats{
      {"auto", InputFormat::kAuto}, {"graph6", InputFormat::kGraph6}, {"edge-list", InputFormat::kEdgeList}};
  static const std::map<std::string, OutputFormat> out_formats{
      {"graph6", OutputFormat::kGraph6}, {"edge-list", OutputFormat::kEdgeList}, {"json", OutputFormat::kJson}};

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("-i,--input", cfg.input, "Input file, '-' for stdin");
    sub->add_option("--in-format", cfg.input_format, "auto | graph6 | edge-list")
        ->transform(CLI::CheckedTransformer(in_formats, CLI::ignore_case));
  };
  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("-j,--threads", cfg.threads, "Worker threads")->check(CLI::Range(1U, 256U));
  };

  auto* gen = app.add_subcommand("gen", "Generate F_{n,m}, F'_{n,m} or an F_n member");
  gen->add_option("n", cfg.n, "Order")->required();
  gen->add_option("m", cfg.m, "Base cycle length")->required();
  auto* prime = gen->add_flag("--prime", cfg.prime, "Add a path through each blown-up class");
  gen->add_option("--family", cfg.family, "Intra-class edge selector: none | all | random | A:i,..;B:..;C:..")
      ->excludes(prime);
  gen->add_option("--format", cfg.output_format, "graph6 | edge-list | json")
      ->transform(CLI::CheckedTransformer(out_formats, CLI::ignore_case));
  gen->add_option("--sidecar", cfg.sidecar, "Write a JSON layout sidecar to this path");
  gen->add_option("--seed", cfg.seed, "Seed for the random selector");

  auto* count = app.add_subcommand("count", "Count induced k-cycles");
  count->add_option("-k", cfg.k, "Cycle length")->check(CLI::Range(3, 12));
  add_input(count);

  auto* analyze = app.add_subcommand("analyze", "Principal neighbours, good cycles, empty K_{2,7}, probes");
  add_input(analyze);
  analyze->add_option("--probe-k", cfg.probe_k, "Half length of the hub-cycle probe")->check(CLI::Range(3, 6));
  analyze->add_option("--tau", cfg.tau, "Common-neighbourhood threshold (default max(2, ceil(n/10)))")
      ->check(CLI::Range(1, 1 << 30));
  analyze->add_option("--probe-threshold", cfg.probe_threshold,
                      "Minimum per-vertex induced 2k-cycle count to run the probe (default n^(k-1)/10)");
  analyze->add_flag("--probe-all", cfg.probe_all, "Run the hub-cycle probe regardless of the threshold");

  auto* family = app.add_subcommand("check-family", "Decide membership in F_n");
  add_input(family);

  auto* formula = app.add_subcommand("formula", "Closed-form h0, h1 and f_I");
  formula->add_option("n", cfg.n, "Order")->required();

  auto* search = app.add_subcommand("search", "Maximum induced 6-cycles over all planar graphs of order n");
  search->add_option("n", cfg.n, "Order")->required();
  search->add_option("-i,--input", cfg.input, "graph6 stream instead of internal enumeration ('-' for stdin)");
  search->add_option("--in-format", cfg.input_format, "auto | graph6 | edge-list")
      ->transform(CLI::CheckedTransformer(in_formats, CLI::ignore_case));
  add_threads(search);

  auto* verify = app.add_subcommand("verify", "Run the property suite over a stream");
  add_input(verify);
  add_threads(verify);
}

/// Parses argv and runs. Unknown flags and malformed input exit with 2.
inline int main_entry(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Induced cycle analysis for planar graphs", "icycle"};
  RunConfig cfg;
  configure(app, cfg);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitInputError;
  }
  for (const auto* sub : app.get_subcommands()) {
    cfg.subcommand = sub->get_name();
    if (const auto* opt = sub->get_option_no_throw("--input")) cfg.input_given = opt->count() > 0;
  }
  return run(cfg, in, out, err);
}

}  // namespace icycle::cli
