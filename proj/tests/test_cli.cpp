#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "oriadim/cli.hpp"
#include "oriadim/io.hpp"

using namespace oriadim;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "oriadim");
  std::ostringstream out, err;
  int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("oriadim_cli_" + std::to_string(std::rand()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("orient c5") {
  TempDir dir;
  std::string c5 = dir.write("c5.graph", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
  Run r = run({"orient", c5});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
  CHECK(r.err.find("diameter 4\n") != std::string::npos);
  CHECK(r.err.find("mode partition\n") != std::string::npos);

  Run json = run({"orient", c5, "--report", "json"});
  CHECK(json.err.find("\"oriented_diameter\": 4") != std::string::npos);

  std::string arcs = dir.path("c5.arcs");
  std::string report = dir.path("c5.json");
  Run files = run({"orient", c5, "--out", arcs, "--report", "json", "--report-file", report});
  CHECK(files.code == kExitOk);
  CHECK(files.out.empty());
  CHECK(slurp(arcs) == r.out);
  CHECK(slurp(report) == json.err);

  Run verify = run({"verify", arcs, c5});
  CHECK(verify.code == kExitOk);
  CHECK(verify.out.find("diameter 4\n") != std::string::npos);
  CHECK(verify.out.find("observations ok\n") != std::string::npos);
}

TEST_CASE("exact k4") {
  TempDir dir;
  std::string k4 = dir.write("k4.graph", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  Run r = run({"exact", k4});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("oriented diameter 3\n", 0) == 0);
  std::string petersen = dir.write("p.graph",
                                   "10 15\n0 1\n1 2\n2 3\n3 4\n0 4\n0 5\n1 6\n2 7\n3 8\n4 9\n5 7\n7 9\n6 9\n6 8\n5 8\n");
  Run cut = run({"exact", petersen, "--budget", "2"});
  CHECK(cut.code == kExitCapability);
  Run capped = run({"exact", petersen, "--edge-cap", "10"});
  CHECK(capped.code == kExitCapability);
}

TEST_CASE("check-class p4") {
  TempDir dir;
  std::string p4 = dir.write("p4.graph", "4 3\n0 1\n1 2\n2 3\n");
  Run r = run({"check-class", "--k", "3", "--lambda", "4", "--s", "1", p4});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("member false\n", 0) == 0);
  Run json = run({"check-class", p4, "--report", "json"});
  CHECK(json.out.find("\"member\": false") != std::string::npos);
  Run bad = run({"check-class", "--k", "3", "--lambda", "2", p4});
  CHECK(bad.code == kExitInput);
}

TEST_CASE("exit codes and usage") {
  TempDir dir;
  std::string loop = dir.write("loop.graph", "2 1\n0 0\n");
  Run r = run({"diameter", loop});
  CHECK(r.code == kExitInput);
  CHECK(r.err.find("line 2") != std::string::npos);

  std::string p3 = dir.write("p3.graph", "3 2\n0 1\n1 2\n");
  Run bridge = run({"orient", p3});
  CHECK(bridge.code == kExitInput);
  CHECK(bridge.err.find("bridge {0,1}") != std::string::npos);

  Run unknown = run({"orient", "--frobnicate", p3});
  CHECK(unknown.code == kExitInput);
  CHECK(unknown.err.find("Usage") != std::string::npos);
  CHECK(run({}).code == kExitInput);
  CHECK(run({"nonsense"}).code == kExitInput);
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({"diameter", dir.path("missing.graph")}).code == kExitInput);
  CHECK(run({"orient", p3, "--report", "xml"}).code == kExitInput);
  CHECK(run({"min-edges", "--n", "11"}).code == kExitCapability);
}

TEST_CASE("diameter, gen and witness-search") {
  TempDir dir;
  Run gen = run({"gen", "cycle", "--n", "5"});
  CHECK(gen.code == kExitOk);
  std::string c5 = dir.write("c5.graph", gen.out);
  CHECK(run({"diameter", c5}).out.rfind("diameter 2\n", 0) == 0);
  std::string arcs = dir.write("c5.arcs", run({"orient", c5}).out);
  CHECK(run({"diameter", "--oriented", arcs}).out.rfind("diameter 4\n", 0) == 0);
  CHECK(run({"gen", "c5"}).out == gen.out);

  Run a = run({"gen", "ming", "--n", "20", "--seed", "9"});
  Run b = run({"gen", "ming", "--n", "20", "--seed", "9"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(parse_graph(a.out).num_vertices() == 20);
  CHECK(run({"gen", "bridgeless", "--n", "9", "--seed", "2"}).code == kExitOk);

  Run w = run({"witness-search", "--n-max", "5", "--target", "5"});
  CHECK(w.code == kExitOk);
  CHECK(w.out.find("exhaustive true\n") != std::string::npos);
  CHECK(w.out.find("witnesses 0\n") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs and thread counts") {
  TempDir dir;
  std::string g = dir.write("g.graph", run({"gen", "ming", "--n", "24", "--seed", "5"}).out);
  Run first = run({"orient", g, "--report", "json", "--seed", "3"});
  Run second = run({"orient", g, "--report", "json", "--seed", "3"});
  Run threaded = run({"--threads", "2", "orient", g, "--report", "json", "--seed", "3"});
  CHECK(first.code == kExitOk);
  CHECK(first.err == second.err);
  CHECK(first.out == second.out);
  CHECK(first.err == threaded.err);

  std::string big = dir.write("b.graph", run({"gen", "bridgeless", "--n", "30", "--density", "15", "--seed", "4"}).out);
  Run h1 = run({"orient", big, "--report", "json", "--seed", "8"});
  Run h2 = run({"orient", big, "--report", "json", "--seed", "8"});
  CHECK(h1.err.find("fallback-heuristic") != std::string::npos);
  CHECK(h1.err == h2.err);
}

TEST_CASE("thread count from the environment; the flag wins") {
  TempDir dir;
  std::string c5 = dir.write("c5.graph", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
  setenv("ORIADIM_THREADS", "2", 1);
  Run env = run({"orient", c5});
  setenv("ORIADIM_THREADS", "many", 1);
  Run bad = run({"orient", c5});
  Run flag = run({"--threads", "1", "orient", c5});
  unsetenv("ORIADIM_THREADS");
  CHECK(env.code == kExitOk);
  CHECK(bad.code == kExitInput);
  CHECK(bad.err.find("ORIADIM_THREADS") != std::string::npos);
  CHECK(flag.code == kExitOk);
  CHECK(flag.out == env.out);
  CHECK(run({"--threads", "0", "orient", c5}).code == kExitInput);
}
