// nrdp: enumerate minimal Roman dominating functions and variants.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "nrdp/bench.hpp"
#include "nrdp/engine.hpp"
#include "nrdp/gadgets.hpp"
#include "nrdp/io.hpp"
#include "nrdp/oracle.hpp"
#include "nrdp/window.hpp"

namespace {

using namespace nrdp;

constexpr int kOk = 0;
constexpr int kIo = 1;
constexpr int kUnsupported = 2;
constexpr int kEmpty = 3;

struct RunConfig {
  std::string variant = "rdf";
  std::string cls = "auto";
  std::string graph_path;
  std::string intervals_path;
  std::string set;
  std::string function;
  std::string format = "text";
  std::size_t limit = 0;
  bool stats = false;
  bool no_prune = false;
  std::size_t cap = kDefaultOracleCap;
  std::string extension;
  // gadget / generate
  std::string type;
  std::string cnf_path;
  std::string hypergraph_path;
  std::string mode = "strict";
  std::string out_prefix;
  // bench / generate
  std::string family = "path";
  std::size_t n = 4;
  std::size_t n_min = 4;
  std::size_t n_max = 10;
  std::size_t samples = 1;
  std::uint64_t seed = 1;
};

std::string pretty_name(Variant v) {
  switch (v) {
    case Variant::kRdf: return "Rdf";
    case Variant::kMrdf: return "mRdf";
    case Variant::kTrdf: return "tRdf";
    case Variant::kCrdf: return "cRdf";
    case Variant::kPrdf: return "pRdf";
  }
  return "?";
}

class Printer {
 public:
  explicit Printer(bool json) : json_(json) {}
  void operator()(const RomanFunction& f) const {
    if (!json_) {
      std::cout << f.to_string() << '\n' << std::flush;
      return;
    }
    nlohmann::ordered_json j;
    j["values"] = f.values();
    j["v2"] = f.level(2).members();
    j["v1"] = f.level(1).members();
    std::cout << j.dump() << '\n' << std::flush;
  }

 private:
  bool json_;
};

bool json_format(const RunConfig& c) {
  if (c.format != "text" && c.format != "json") throw std::invalid_argument("format must be text or json");
  return c.format == "json";
}

struct Loaded {
  Graph graph;
  std::optional<IntervalModel> model;
};

Loaded load(const RunConfig& c) {
  Loaded l{read_graph_file(c.graph_path), std::nullopt};
  if (!c.intervals_path.empty()) l.model = read_intervals_file(c.intervals_path);
  return l;
}

GraphClass pick_class(const RunConfig& c, const Loaded& l, Variant v) {
  const IntervalModel* m = l.model ? &*l.model : nullptr;
  if (c.cls == "auto") return resolve_class(l.graph, v, m);
  if (c.cls == "general") return GraphClass::kGeneral;
  if (c.cls == "cobipartite") return GraphClass::kCobipartite;
  if (c.cls == "interval") {
    if (!m) throw UnsupportedRoute("interval class requires --intervals");
    return GraphClass::kInterval;
  }
  throw std::invalid_argument("class must be auto, general, cobipartite or interval");
}

std::unique_ptr<FixedTwoSolver> route(const RunConfig& c, const Loaded& l, Variant v) {
  const GraphClass cls = pick_class(c, l, v);
  return make_solver(l.graph, v, cls, l.model ? &*l.model : nullptr);
}

void print_stats(const EnumerationStats& s, std::size_t n, const FixedTwoSolver& solver) {
  std::cout << "#route=" << graph_class_name(solver.class_requirement()) << '\n'
            << "#n=" << n << '\n'
            << "#outputs=" << s.outputs << '\n'
            << "#sets_explored=" << s.sets_explored << '\n'
            << "#empty_sets_explored=" << s.empty_sets_explored << '\n'
            << "#max_consecutive_empty=" << s.max_consecutive_empty << '\n'
            << "#max_inter_output_work=" << s.max_inter_output_work << '\n'
            << "#stopped_early=" << (s.stopped_early ? 1 : 0) << '\n';
}

int cmd_enumerate(const RunConfig& c) {
  const Printer print(json_format(c));
  const Variant v = parse_variant(c.variant);
  const Loaded l = load(c);
  const auto solver = route(c, l, v);
  EngineOptions options;
  options.prune = !c.no_prune;
  options.verify = false;
  std::size_t emitted = 0;
  const EnumerationStats s = enumerate_minimal(l.graph, v, *solver, [&](const RomanFunction& f) {
    print(f);
    ++emitted;
    return c.limit == 0 || emitted < c.limit;
  }, options);
  if (c.stats) print_stats(s, l.graph.order(), *solver);
  return kOk;
}

int cmd_fixed_two(const RunConfig& c) {
  const Printer print(json_format(c));
  const Variant v = parse_variant(c.variant);
  const Loaded l = load(c);
  const VertexSet a = parse_vertex_set(c.set, l.graph.order());
  const auto solver = route(c, l, v);
  std::size_t emitted = 0;
  solver->enumerate(a, [&](const RomanFunction& f) {
    print(f);
    ++emitted;
    return c.limit == 0 || emitted < c.limit;
  });
  if (c.stats) std::cout << "#route=" << graph_class_name(solver->class_requirement()) << "\n#outputs=" << emitted << '\n';
  return emitted == 0 ? kEmpty : kOk;
}

int cmd_oracle(const RunConfig& c) {
  const Printer print(json_format(c));
  const Variant v = parse_variant(c.variant);
  const Graph g = read_graph_file(c.graph_path);
  std::vector<RomanFunction> out;
  if (c.set.empty()) {
    out = oracle_all_minimal(g, v, c.cap);
  } else {
    const VertexSet a = parse_vertex_set(c.set == "-" ? "" : c.set, g.order());
    out = oracle_fixed_two(g, v, a, std::max<std::size_t>(c.cap, kDefaultSliceCap));
  }
  for (const auto& f : out) print(f);
  if (c.stats) std::cout << "#outputs=" << out.size() << '\n';
  return kOk;
}

int cmd_check(const RunConfig& c) {
  const Variant v = parse_variant(c.variant);
  const Loaded l = load(c);
  const RomanFunction f = RomanFunction::parse(c.function);
  if (f.size() != l.graph.order()) throw std::invalid_argument("function length does not match graph order");
  const std::string name = pretty_name(v);
  if (v == Variant::kPrdf) {
    std::cout << name << ": " << (is_variant(l.graph, f, v) ? "YES" : "NO") << '\n';
    return kOk;
  }
  const MinimalityReport r = explain_minimality(l.graph, f, v);
  if (!r.has_property) {
    std::string why = r.failures.empty() ? "" : r.failures.front();
    if (const auto colon = why.find(": "); colon != std::string::npos) why = why.substr(colon + 2);
    std::cout << name << ": NO (" << why << ")\n";
  } else {
    std::cout << name << ": YES\n";
    std::cout << "minimal: " << (r.minimal ? "YES" : "NO") << '\n';
    for (const auto& why : r.failures) std::cout << "  " << why << '\n';
  }
  if (!c.extension.empty()) {
    bool ext = false;
    if (c.extension == "oracle") {
      ext = extension_check(l.graph, f, v, ExtensionMode::kOracle, GraphClass::kGeneral, nullptr,
                            std::max<std::size_t>(c.cap, kDefaultExtensionCap));
    } else if (c.extension == "fast") {
      ext = extension_check(l.graph, f, v, ExtensionMode::kFast, pick_class(c, l, v), l.model ? &*l.model : nullptr);
    } else {
      throw std::invalid_argument("extension mode must be oracle or fast");
    }
    std::cout << "extension: " << (ext ? "YES" : "NO") << '\n';
  }
  return kOk;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw IoError("cannot write " + path);
}

int cmd_gadget(const RunConfig& c) {
  const SatMode mode = c.mode == "strict" ? SatMode::kStrict : c.mode == "test" ? SatMode::kTest
                       : throw std::invalid_argument("mode must be strict or test");
  GadgetInstance gi;
  if (c.type == "crdf-sat") {
    gi = gadget_crdf_from_sat(read_dimacs_file(c.cnf_path), mode);
  } else if (c.type == "trdf-sat") {
    gi = gadget_trdf_from_sat(read_dimacs_file(c.cnf_path), mode);
  } else if (c.type == "maxrd-extds") {
    const Graph g = read_graph_file(c.graph_path);
    gi = gadget_maxrd_from_extds(g, parse_vertex_set(c.set, g.order()));
  } else if (c.type == "split-hypergraph") {
    gi = gadget_split_from_hypergraph(read_hypergraph_file(c.hypergraph_path));
  } else {
    throw std::invalid_argument("type must be crdf-sat, trdf-sat, maxrd-extds or split-hypergraph");
  }
  std::ostringstream graph, labels;
  write_graph(graph, gi.graph);
  for (std::size_t v = 0; v < gi.labels.size(); ++v) labels << v << ' ' << gi.labels[v] << '\n';
  const std::string fixed = gi.fixed_two ? "A=" + gi.fixed_two->to_string() : "f=" + gi.prefunction->to_string();
  write_file(c.out_prefix + ".graph", graph.str());
  write_file(c.out_prefix + ".labels", labels.str());
  write_file(c.out_prefix + ".fixed", fixed + '\n');
  std::cout << fixed << '\n';
  for (const auto& [k, v] : gi.metadata)
    if (k != "elimination_order") std::cout << '#' << k << '=' << v << '\n';
  return kOk;
}

int cmd_generate(const RunConfig& c) {
  Rng rng(c.seed);
  const FamilyInstance inst = make_family_instance(c.family, c.n, rng);
  std::ostringstream graph;
  write_graph(graph, inst.graph);
  write_file(c.out_prefix + ".graph", graph.str());
  if (inst.model) {
    std::ostringstream iv;
    write_intervals(iv, *inst.model);
    write_file(c.out_prefix + ".intervals", iv.str());
  }
  if (inst.example_a) std::cout << "A=" << inst.example_a->to_string() << '\n';
  std::cout << "#seed=" << c.seed << '\n';
  return kOk;
}

int cmd_bench(const RunConfig& c) {
  BenchConfig b;
  b.family = c.family;
  b.variant = parse_variant(c.variant);
  b.n_min = c.n_min;
  b.n_max = c.n_max;
  b.seed = c.seed;
  b.samples = c.samples;
  const auto rows = run_bench(b);
  write_bench_csv(std::cout, rows);
  if (c.stats && rows.size() >= 2 && rows.front().n != rows.back().n) {
    const LineFit growth = sets_explored_growth(rows);
    const LineFit delay = delay_degree(rows);
    std::cout << "#log2_sets_explored_slope=" << growth.slope << '\n'
              << "#delay_degree_estimate=" << delay.slope << '\n'
              << "#delay_fit_max_residual=" << delay.max_abs_residual << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate minimal Roman dominating functions (rdf, mrdf, trdf, crdf)"};
  app.require_subcommand(1);
  RunConfig c;

  auto common = [&](CLI::App* sub, bool needs_graph) {
    sub->add_option("--variant", c.variant, "rdf | mrdf | trdf | crdf | prdf")->capture_default_str();
    auto* g = sub->add_option("--graph", c.graph_path, "graph file (\"n m\" then edges)");
    if (needs_graph) g->required();
    sub->add_option("--intervals", c.intervals_path, "interval model file");
    sub->add_option("--class", c.cls, "auto | general | cobipartite | interval")->capture_default_str();
    sub->add_option("--format", c.format, "text | json")->capture_default_str();
    sub->add_flag("--stats", c.stats, "append #key=value statistics");
  };

  auto* en = app.add_subcommand("enumerate", "all minimal functions of the variant");
  common(en, true);
  en->add_option("--limit", c.limit, "stop after this many outputs (0 = all)");
  en->add_flag("--no-prune", c.no_prune, "visit every 2-set (debug)");

  auto* ft = app.add_subcommand("fixed-two", "the minimal functions with V_2 = A; exit 3 when there are none");
  common(ft, true);
  ft->add_option("--set", c.set, "A as comma-separated indices")->required();
  ft->add_option("--limit", c.limit, "stop after this many outputs (0 = all)");

  auto* orc = app.add_subcommand("oracle", "brute force over all 3^n functions");
  common(orc, true);
  orc->add_option("--set", c.set, "restrict to V_2 = A (use - for the empty set)");
  orc->add_option("--cap", c.cap, "largest n accepted")->capture_default_str();

  auto* chk = app.add_subcommand("check", "property and minimality diagnostics for one function");
  common(chk, true);
  chk->add_option("--function", c.function, "digit string, vertex 0 first")->required();
  chk->add_option("--extension", c.extension, "also decide extension: oracle | fast");
  chk->add_option("--cap", c.cap, "largest n for the oracle")->capture_default_str();

  auto* gad = app.add_subcommand("gadget", "build a reduction instance");
  gad->add_option("--type", c.type, "crdf-sat | trdf-sat | maxrd-extds | split-hypergraph")->required();
  gad->add_option("--cnf", c.cnf_path, "DIMACS cnf (sat gadgets)");
  gad->add_option("--hypergraph", c.hypergraph_path, "hypergraph file (split gadget)");
  gad->add_option("--graph", c.graph_path, "base graph (maxrd-extds)");
  gad->add_option("--set", c.set, "U (maxrd-extds)");
  gad->add_option("--mode", c.mode, "strict | test")->capture_default_str();
  gad->add_option("--out", c.out_prefix, "writes PREFIX.graph, PREFIX.labels, PREFIX.fixed")->required();

  auto* gen = app.add_subcommand("generate", "write a family instance");
  gen->add_option("--family", c.family, "path | random | interval-random | cobipartite-random | gn")->capture_default_str();
  gen->add_option("--n", c.n, "order (gn: number of a-vertices)")->capture_default_str();
  gen->add_option("--seed", c.seed)->capture_default_str();
  gen->add_option("--out", c.out_prefix, "writes PREFIX.graph and PREFIX.intervals")->required();

  auto* be = app.add_subcommand("bench", "sweep n over a family, CSV on stdout");
  be->add_option("--family", c.family, "path | random | interval-random | cobipartite-random | gn")->capture_default_str();
  be->add_option("--variant", c.variant)->capture_default_str();
  be->add_option("--n-min", c.n_min)->capture_default_str();
  be->add_option("--n-max", c.n_max)->capture_default_str();
  be->add_option("--samples", c.samples)->capture_default_str();
  be->add_option("--seed", c.seed)->capture_default_str();
  be->add_flag("--stats", c.stats, "append growth fits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kIo;
  }

  try {
    if (*en) return cmd_enumerate(c);
    if (*ft) return cmd_fixed_two(c);
    if (*orc) return cmd_oracle(c);
    if (*chk) return cmd_check(c);
    if (*gad) return cmd_gadget(c);
    if (*gen) return cmd_generate(c);
    if (*be) return cmd_bench(c);
  } catch (const UnsupportedRoute& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const OracleCapExceeded& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
  return kIo;
}
