#include "oriadim/cli.hpp"

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "oriadim/class_check.hpp"
#include "oriadim/errors.hpp"
#include "oriadim/exact_search.hpp"
#include "oriadim/generators.hpp"
#include "oriadim/io.hpp"
#include "oriadim/orient_d3.hpp"

namespace oriadim {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write " + path);
  file << text;
}

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Json optional_int(int v) { return v == kUnreachable ? Json(nullptr) : Json(v); }
std::string int_text(int v) { return v == kUnreachable ? "inf" : std::to_string(v); }

Json edge_list(const UndirectedGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.a, e.b});
  return edges;
}

std::string_view status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Optimal:
      return "optimal";
    case SearchStatus::TargetReached:
      return "target-reached";
    case SearchStatus::BudgetExhausted:
      return "budget-exhausted";
  }
  return "unknown";
}

Json header(const char* command) {
  Json j;
  j["schema_version"] = 1;
  j["command"] = command;
  return j;
}

struct Options {
  std::string report = "text";
  int threads = 0;
  bool timings = false;

  std::string graph_path;
  std::string orientation_path;
  std::string out_path;
  std::string report_path;

  std::uint64_t seed = 1;
  int restarts = 8;
  std::uint64_t budget = 0;
  int edge_cap = kExhaustiveEdgeCeiling;
  std::optional<int> target;
  bool oriented = false;

  int k = 3;
  int lambda = 4;
  int s = 1;

  int n_max = 7;
  int wtarget = 9;
  int graph_diameter = 3;
  int samples = 200;
  bool exact_values = false;

  std::string kind;
  int n = 0;
  int density = 30;
};

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {}

  int orient() {
    auto t0 = Clock::now();
    UndirectedGraph g = parse_graph(read_input(opt_.graph_path));
    double parse_ms = ms_since(t0);

    OrientOptions oo;
    oo.seed = opt_.seed;
    oo.restarts = opt_.restarts;
    if (opt_.budget != 0) oo.search.node_budget = opt_.budget;
    auto t1 = Clock::now();
    OrientResult result = orient_d3(g, oo);
    double orient_ms = ms_since(t1);

    auto t2 = Clock::now();
    DiameterCertificate cert = verify_theorem1(g, result.orientation);
    std::string arcs = emit_orientation(result.orientation);
    Orientation back = parse_orientation(arcs);
    DiameterCertificate again = diameter_serial(back);
    double verify_ms = ms_since(t2);
    if (!(back.base() == g) || again.diameter != cert.diameter ||
        again.strongly_connected != cert.strongly_connected ||
        certificate_digest(again) != certificate_digest(cert)) {
      throw StructuralError("emitted orientation does not reproduce its certificate");
    }
    if (!cert.strongly_connected) throw StructuralError("orientation is not strongly connected");

    RunReport report = make_run_report(g, result, cert);
    if (opt_.timings) report.timings_ms = {{"parse", parse_ms}, {"orient", orient_ms}, {"verify", verify_ms}};
    if (opt_.out_path.empty()) {
      out_ << arcs << "\n";
    } else {
      write_output(opt_.out_path, arcs + "\n");
    }
    std::string text = opt_.report == "json" ? report_json(report) : report_text(report);
    if (opt_.report_path.empty()) {
      err_ << text;
    } else {
      write_output(opt_.report_path, text);
    }
    return kExitOk;
  }

  int diameter_cmd() {
    std::string text = read_input(opt_.graph_path);
    DiameterCertificate cert;
    int n = 0;
    int m = 0;
    if (opt_.oriented) {
      Orientation o = parse_orientation(text);
      n = o.num_vertices();
      m = o.num_arcs();
      cert = diameter(o);
    } else {
      UndirectedGraph g = parse_graph(text);
      n = g.num_vertices();
      m = g.num_edges();
      cert = diameter(g);
    }
    if (opt_.report == "json") {
      Json j = header("diameter");
      j["oriented"] = opt_.oriented;
      j["n"] = n;
      j["m"] = m;
      j["diameter"] = cert.strongly_connected ? Json(cert.diameter) : Json(nullptr);
      j["connected"] = cert.strongly_connected;
      j["certificate_digest"] = certificate_digest(cert);
      out_ << j.dump(2) << "\n";
    } else {
      out_ << "diameter " << (cert.strongly_connected ? std::to_string(cert.diameter) : "inf") << "\n";
      out_ << (opt_.oriented ? "strongly_connected " : "connected ") << (cert.strongly_connected ? "true" : "false")
           << "\n";
      out_ << "certificate " << certificate_digest(cert) << "\n";
    }
    return kExitOk;
  }

  int exact() {
    UndirectedGraph g = parse_graph(read_input(opt_.graph_path));
    SearchConfig cfg;
    cfg.edge_cap = opt_.edge_cap;
    cfg.node_budget = opt_.budget;
    cfg.target = opt_.target;
    auto t0 = Clock::now();
    ExactResult r = oriented_diameter_exact(g, cfg);
    double search_ms = ms_since(t0);
    if (r.witness) {
      DiameterCertificate cert = verify_theorem1(g, *r.witness);
      if (cert.diameter != r.diameter) throw StructuralError("witness does not realize the reported diameter");
      if (!opt_.out_path.empty()) write_output(opt_.out_path, emit_orientation(*r.witness) + "\n");
    }
    if (opt_.report == "json") {
      Json j = header("exact");
      j["n"] = g.num_vertices();
      j["m"] = g.num_edges();
      j["oriented_diameter"] = optional_int(r.diameter);
      j["status"] = std::string(status_name(r.status));
      j["proven_optimal"] = r.proven_optimal();
      j["witness"] = nullptr;
      if (r.witness) {
        Json arcs = Json::array();
        for (const Arc& a : r.witness->arcs()) arcs.push_back({a.from, a.to});
        std::sort(arcs.begin(), arcs.end());
        j["witness"] = arcs;
      }
      if (opt_.timings) j["stats"] = {{"nodes", r.nodes}, {"search_ms", search_ms}};
      out_ << j.dump(2) << "\n";
    } else {
      out_ << "oriented diameter " << int_text(r.diameter) << "\n";
      out_ << "status " << status_name(r.status) << "\n";
      if (opt_.timings) out_ << "nodes " << r.nodes << "\ntime search " << search_ms << " ms\n";
    }
    if (r.status == SearchStatus::BudgetExhausted) {
      err_ << "error: node budget exhausted; best found is not proven optimal\n";
      return kExitCapability;
    }
    return kExitOk;
  }

  int check_class() {
    UndirectedGraph g = parse_graph(read_input(opt_.graph_path));
    ClassParams p{opt_.k, opt_.lambda, opt_.s};
    p.validate();
    ClassReport r = in_class(g, p);
    if (opt_.report == "json") {
      Json j = header("check-class");
      j["params"] = {{"k", p.k}, {"lambda", p.lambda}, {"s", p.s}};
      j["n"] = g.num_vertices();
      j["m"] = g.num_edges();
      j["member"] = r.member;
      j["violating_pair"] = r.violating_pair ? Json{r.violating_pair->first, r.violating_pair->second} : Json(nullptr);
      Json deletion = nullptr;
      if (r.violating_deletion) {
        deletion = Json::array();
        for (const Edge& e : *r.violating_deletion) deletion.push_back({e.a, e.b});
      }
      j["violating_deletion"] = deletion;
      j["witness_distance"] = r.member ? Json(nullptr) : optional_int(r.witness_distance);
      j["observation1"] = check_observation1(g, p);
      out_ << j.dump(2) << "\n";
    } else {
      out_ << "member " << (r.member ? "true" : "false") << "\n";
      if (r.violating_pair) {
        out_ << "violating pair " << r.violating_pair->first << " " << r.violating_pair->second << " distance "
             << int_text(r.witness_distance) << "\n";
      }
      if (r.violating_deletion) {
        out_ << "violating deletion";
        for (const Edge& e : *r.violating_deletion) out_ << " {" << e.a << "," << e.b << "}";
        out_ << " diameter " << int_text(r.witness_distance) << "\n";
      }
    }
    return kExitOk;
  }

  int verify() {
    Orientation o = parse_orientation(read_input(opt_.orientation_path));
    UndirectedGraph g = parse_graph(read_input(opt_.graph_path));
    DiameterCertificate cert = verify_theorem1(g, o);
    if (!cert.self_consistent()) throw StructuralError("distance certificate fails its own invariants");

    std::optional<ObservationReport> obs;
    std::optional<VertexPartition> partition;
    if (auto pair = find_adjacent_degree2_pair(g); pair && g.num_vertices() >= 5 && diameter_value(g) <= 3) {
      try {
        partition = partition_vertices(g, *pair);
        obs = check_observations(g, *partition, o);
      } catch (const StructuralError&) {
        partition.reset();
      }
    }
    if (opt_.report == "json") {
      Json j = header("verify");
      j["n"] = g.num_vertices();
      j["m"] = g.num_edges();
      j["strongly_connected"] = cert.strongly_connected;
      j["diameter"] = cert.strongly_connected ? Json(cert.diameter) : Json(nullptr);
      j["within_bound_9"] = cert.strongly_connected && cert.diameter <= 9;
      j["certificate_digest"] = certificate_digest(cert);
      Json o_json = nullptr;
      if (obs) {
        o_json = {{"ok", obs->ok}};
        Json failures = Json::array();
        for (const ObservationFailure& f : obs->failures) {
          failures.push_back({{"check", f.check}, {"vertex", f.witness}, {"distance", optional_int(f.distance)}, {"bound", f.bound}});
        }
        o_json["failures"] = failures;
      }
      j["observations"] = o_json;
      out_ << j.dump(2) << "\n";
    } else {
      out_ << "diameter " << (cert.strongly_connected ? std::to_string(cert.diameter) : "inf") << "\n";
      out_ << "strongly_connected " << (cert.strongly_connected ? "true" : "false") << "\n";
      out_ << "certificate " << certificate_digest(cert) << "\n";
      if (obs) {
        out_ << "observations " << (obs->ok ? "ok" : "failed") << "\n";
        for (const ObservationFailure& f : obs->failures) {
          out_ << "  " << f.check << " vertex " << f.witness << " distance " << int_text(f.distance) << "\n";
        }
      }
    }
    return kExitOk;
  }

  int witness_search() {
    WitnessSearchOptions wo;
    wo.n_max = opt_.n_max;
    wo.diameter_target = opt_.wtarget;
    wo.graph_diameter = opt_.graph_diameter;
    wo.samples = opt_.samples;
    wo.exact_values = opt_.exact_values;
    wo.seed = opt_.seed;
    wo.search.node_budget = opt_.budget;
    auto t0 = Clock::now();
    WitnessSearchResult r = search_witness(wo);
    double search_ms = ms_since(t0);
    if (opt_.report == "json") {
      Json j = header("witness-search");
      j["n_max"] = wo.n_max;
      j["target"] = wo.diameter_target;
      j["graph_diameter"] = wo.graph_diameter;
      j["exhaustive"] = r.exhaustive;
      j["all_proven"] = r.all_proven;
      j["graphs_examined"] = r.graphs_examined;
      j["candidates"] = r.candidates;
      j["candidates_by_n"] = r.candidates_by_n;
      j["max_oriented_diameter"] = r.max_oriented_diameter;
      j["max_is_exact"] = wo.exact_values;
      Json ws = Json::array();
      for (const WitnessRecord& w : r.witnesses) {
        ws.push_back({{"n", w.graph.num_vertices()},
                      {"edges", edge_list(w.graph)},
                      {"oriented_diameter", w.oriented_diameter},
                      {"proven", w.proven}});
      }
      j["witnesses"] = ws;
      if (opt_.timings) j["timings_ms"] = {{"search", search_ms}};
      out_ << j.dump(2) << "\n";
    } else {
      out_ << "exhaustive " << (r.exhaustive ? "true" : "false") << "\n";
      out_ << "all_proven " << (r.all_proven ? "true" : "false") << "\n";
      out_ << "graphs_examined " << r.graphs_examined << "\n";
      out_ << "candidates " << r.candidates << "\n";
      out_ << "max_oriented_diameter " << r.max_oriented_diameter << (wo.exact_values ? "" : " (upper bound)") << "\n";
      out_ << "witnesses " << r.witnesses.size() << "\n";
      for (const WitnessRecord& w : r.witnesses) {
        out_ << "witness oriented diameter " << w.oriented_diameter << "\n" << emit_graph(w.graph) << "\n";
      }
      if (opt_.timings) out_ << "time search " << search_ms << " ms\n";
    }
    return kExitOk;
  }

  int gen() {
    UndirectedGraph g;
    if (opt_.kind == "c5") {
      g = cycle_graph(5);
    } else if (opt_.kind == "cycle") {
      g = cycle_graph(opt_.n);
    } else if (opt_.kind == "complete") {
      g = complete_graph(opt_.n);
    } else if (opt_.kind == "path") {
      g = path_graph(opt_.n);
    } else if (opt_.kind == "ming") {
      g = min_g_instance(opt_.n, opt_.seed);
    } else {
      Rng rng(opt_.seed);
      g = random_bridgeless(opt_.n, static_cast<std::uint64_t>(opt_.density), 100, rng);
    }
    if (opt_.out_path.empty()) {
      out_ << emit_graph(g) << "\n";
    } else {
      write_output(opt_.out_path, emit_graph(g) + "\n");
    }
    return kExitOk;
  }

  int min_edges() {
    ClassParams p{opt_.k, opt_.lambda, opt_.s};
    p.validate();
    MinEdgesResult r = min_edges_in_class(opt_.n, p, opt_.budget);
    if (opt_.report == "json") {
      Json j = header("min-edges");
      j["n"] = opt_.n;
      j["params"] = {{"k", p.k}, {"lambda", p.lambda}, {"s", p.s}};
      j["found"] = r.found;
      j["edges"] = r.found ? Json(r.edges) : Json(nullptr);
      j["exact"] = r.exact;
      j["witness"] = r.witness ? edge_list(*r.witness) : Json(nullptr);
      j["graphs_examined"] = r.graphs_examined;
      out_ << j.dump(2) << "\n";
    } else if (!r.found) {
      out_ << "no member on " << opt_.n << " vertices\n";
    } else {
      out_ << "min edges " << r.edges << (r.exact ? "" : " (lower bound)") << "\n";
      if (r.witness) out_ << emit_graph(*r.witness) << "\n";
    }
    return r.exact || !r.found ? kExitOk : kExitCapability;
  }

 private:
  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
};

std::optional<int> env_threads() {
  const char* raw = std::getenv("ORIADIM_THREADS");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 1 || v > 4096) throw InputError(std::string("ORIADIM_THREADS must be a positive integer, got '") + raw + "'");
  return static_cast<int>(v);
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Orient bridgeless graphs with small directed diameter.", "oriadim"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  app.add_option("--threads", opt.threads, "Worker threads (overrides ORIADIM_THREADS)")->check(CLI::Range(1, 4096));
  app.fallthrough();

  auto report_flag = [&](CLI::App* sub) {
    sub->add_option("--report", opt.report, "Report format")->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* orient = app.add_subcommand("orient", "Orient a graph; arcs to stdout, report to stderr");
  orient->add_option("graph", opt.graph_path, "Graph file ('-' for stdin)")->required();
  report_flag(orient);
  orient->add_option("--seed", opt.seed, "Seed for the randomized fallback");
  orient->add_option("--restarts", opt.restarts, "Fallback restarts")->check(CLI::Range(1, 100000));
  orient->add_option("--budget", opt.budget, "Node budget for the exact fallback");
  orient->add_option("--out", opt.out_path, "Write arcs here instead of stdout");
  orient->add_option("--report-file", opt.report_path, "Write the report here instead of stderr");
  orient->add_flag("--timings", opt.timings, "Include wall-clock timings in the report");

  CLI::App* diam = app.add_subcommand("diameter", "Diameter of a graph or orientation");
  diam->add_option("file", opt.graph_path, "Graph or orientation file")->required();
  diam->add_flag("--oriented", opt.oriented, "Read the file as arcs");
  report_flag(diam);

  CLI::App* exact = app.add_subcommand("exact", "Exact oriented diameter by branch and bound");
  exact->add_option("graph", opt.graph_path, "Graph file")->required();
  exact->add_option("--budget", opt.budget, "Node budget (0 = unlimited)");
  exact->add_option("--edge-cap", opt.edge_cap, "Largest edge count to accept");
  exact->add_option("--target", opt.target, "Stop at the first orientation with diameter <= target");
  exact->add_option("--out", opt.out_path, "Write the witness orientation here");
  exact->add_flag("--timings", opt.timings, "Include node count and timings");
  report_flag(exact);

  CLI::App* check = app.add_subcommand("check-class", "Membership in G(n, k, lambda, s)");
  check->add_option("graph", opt.graph_path, "Graph file")->required();
  check->add_option("--k", opt.k, "Diameter bound");
  check->add_option("--lambda", opt.lambda, "Diameter bound after deletions");
  check->add_option("--s", opt.s, "Edges deleted");
  report_flag(check);

  CLI::App* verify = app.add_subcommand("verify", "Distance certificate of an orientation of a graph");
  verify->add_option("orientation", opt.orientation_path, "Orientation file")->required();
  verify->add_option("graph", opt.graph_path, "Graph file")->required();
  report_flag(verify);

  CLI::App* witness = app.add_subcommand("witness-search", "Search small graphs for large oriented diameter");
  witness->add_option("--n-max", opt.n_max, "Largest vertex count")->check(CLI::Range(3, 64));
  witness->add_option("--target", opt.wtarget, "Oriented diameter to look for");
  witness->add_option("--graph-diameter", opt.graph_diameter, "Undirected diameter bound");
  witness->add_option("--samples", opt.samples, "Random graphs per vertex count above 9");
  witness->add_option("--seed", opt.seed, "Sampling seed");
  witness->add_option("--budget", opt.budget, "Node budget per exact search");
  witness->add_flag("--exact-values", opt.exact_values, "Compute every candidate's exact value");
  witness->add_flag("--timings", opt.timings, "Include timings");
  report_flag(witness);

  CLI::App* gen = app.add_subcommand("gen", "Generate a graph");
  gen->add_option("kind", opt.kind, "cycle | complete | path | c5 | ming | bridgeless")
      ->required()
      ->check(CLI::IsMember({"cycle", "complete", "path", "c5", "ming", "bridgeless"}));
  gen->add_option("--n", opt.n, "Vertex count");
  gen->add_option("--seed", opt.seed, "Seed");
  gen->add_option("--density", opt.density, "Edge percentage for bridgeless")->check(CLI::Range(0, 100));
  gen->add_option("--out", opt.out_path, "Write here instead of stdout");

  CLI::App* min_edges = app.add_subcommand("min-edges", "Minimum edge count in G(n, k, lambda, s)");
  min_edges->add_option("--n", opt.n, "Vertex count")->required();
  min_edges->add_option("--k", opt.k, "Diameter bound");
  min_edges->add_option("--lambda", opt.lambda, "Diameter bound after deletions");
  min_edges->add_option("--s", opt.s, "Edges deleted");
  min_edges->add_option("--budget", opt.budget, "Canonicalizations per edge cap (0 = unlimited)");
  report_flag(min_edges);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInput;
  }

  try {
    int threads = opt.threads;
    if (threads == 0) threads = env_threads().value_or(0);
    if (threads > 0) omp_set_num_threads(threads);

    Runner run(opt, out, err);
    if (orient->parsed()) return run.orient();
    if (diam->parsed()) return run.diameter_cmd();
    if (exact->parsed()) return run.exact();
    if (check->parsed()) return run.check_class();
    if (verify->parsed()) return run.verify();
    if (witness->parsed()) return run.witness_search();
    if (gen->parsed()) return run.gen();
    if (min_edges->parsed()) return run.min_edges();
    return kExitInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CapabilityError& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapability;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << "\n";
    return kExitStructural;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitStructural;
  }
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  return cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace oriadim
