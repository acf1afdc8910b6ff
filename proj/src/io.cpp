#include "oriadim/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "json.hpp"
#include "oriadim/errors.hpp"

namespace oriadim {

namespace {

struct Line {
  int number;
  std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  while (!text.empty() || number == 0) {
    std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++number;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') lines.push_back({number, line});
    if (end == std::string_view::npos) break;
  }
  return lines;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

std::pair<long long, long long> two_ints(const Line& line) {
  std::vector<long long> values;
  std::string_view rest = line.text;
  for (;;) {
    std::size_t first = rest.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) break;
    rest.remove_prefix(first);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc() || (ptr != rest.data() + rest.size() && std::string_view(" \t\r").find(*ptr) == std::string_view::npos)) {
      fail(line.number, "expected two integers, got '" + std::string(line.text) + "'");
    }
    values.push_back(value);
    rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
  }
  if (values.size() != 2) fail(line.number, "expected two integers, got '" + std::string(line.text) + "'");
  return {values[0], values[1]};
}

struct PairList {
  int n = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::vector<int> line_of;
};

PairList parse_pairs(std::string_view text) {
  std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw InputError("line 1: missing header \"n m\"");
  auto [n, m] = two_ints(lines[0]);
  if (n < 0 || m < 0 || n > 1'000'000 || m > 10'000'000) {
    fail(lines[0].number, "malformed header: n and m must be non-negative");
  }
  PairList out;
  out.n = static_cast<int>(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (static_cast<long long>(i) > m) fail(lines[i].number, "more edge lines than the header's m = " + std::to_string(m));
    auto [a, b] = two_ints(lines[i]);
    for (long long w : {a, b}) {
      if (w < 0 || w >= n) {
        fail(lines[i].number, "vertex " + std::to_string(w) + " out of range [0, " + std::to_string(n) + ")");
      }
    }
    out.pairs.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    out.line_of.push_back(lines[i].number);
  }
  if (static_cast<long long>(out.pairs.size()) != m) {
    int last = lines.back().number;
    fail(last, "header announces " + std::to_string(m) + " edges, found " + std::to_string(out.pairs.size()));
  }
  return out;
}

std::string pair_text(Vertex a, Vertex b) { return "{" + std::to_string(a) + "," + std::to_string(b) + "}"; }

using Json = nlohmann::ordered_json;

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

UndirectedGraph parse_graph(std::string_view text, bool strict) {
  PairList list = parse_pairs(text);
  std::map<Edge, int> first_line;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < list.pairs.size(); ++i) {
    auto [a, b] = list.pairs[i];
    int line = list.line_of[i];
    if (a == b) {
      if (strict) fail(line, "self-loop at vertex " + std::to_string(a));
      continue;
    }
    Edge e = make_edge(a, b);
    auto [it, fresh] = first_line.emplace(e, line);
    if (!fresh) {
      if (strict) fail(line, "duplicate edge " + pair_text(e.a, e.b) + " (first on line " + std::to_string(it->second) + ")");
      continue;
    }
    edges.push_back(e);
  }
  return UndirectedGraph(list.n, edges);
}

Orientation parse_orientation(std::string_view text) {
  PairList list = parse_pairs(text);
  std::map<Edge, int> first_line;
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < list.pairs.size(); ++i) {
    auto [a, b] = list.pairs[i];
    int line = list.line_of[i];
    if (a == b) fail(line, "self-loop at vertex " + std::to_string(a));
    Edge e = make_edge(a, b);
    auto [it, fresh] = first_line.emplace(e, line);
    if (!fresh) fail(line, "arc " + std::to_string(a) + "->" + std::to_string(b) + " repeats edge " + pair_text(e.a, e.b) + " (first on line " + std::to_string(it->second) + ")");
    arcs.push_back({a, b});
  }
  std::vector<Edge> edges;
  edges.reserve(first_line.size());
  for (const auto& [e, line] : first_line) edges.push_back(e);
  return Orientation::from_arcs(UndirectedGraph(list.n, edges), arcs);
}

std::string emit_graph(const UndirectedGraph& g) {
  std::string out = std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges());
  for (const Edge& e : g.edges()) out += "\n" + std::to_string(e.a) + " " + std::to_string(e.b);
  return out;
}

std::string emit_orientation(const Orientation& o) {
  std::vector<Arc> arcs = o.arcs();
  std::sort(arcs.begin(), arcs.end());
  std::string out = std::to_string(o.num_vertices()) + " " + std::to_string(arcs.size());
  for (const Arc& a : arcs) out += "\n" + std::to_string(a.from) + " " + std::to_string(a.to);
  return out;
}

InputSummary summarize(const UndirectedGraph& g) {
  InputSummary s;
  s.n = g.num_vertices();
  s.m = g.num_edges();
  if (s.n > 0) {
    s.min_degree = min_degree(g);
    int d = diameter_value(g);
    if (d != kUnreachable) s.diameter = d;
  }
  s.bridgeless = bridges(g).empty();
  return s;
}

RunReport make_run_report(const UndirectedGraph& g, const OrientResult& result, const DiameterCertificate& cert) {
  RunReport r;
  r.input = summarize(g);
  r.plan = result.plan;
  r.strongly_connected = cert.strongly_connected;
  if (cert.strongly_connected) r.oriented_diameter = cert.diameter;
  r.certificate_digest = certificate_digest(cert);
  return r;
}

std::string report_json(const RunReport& r) {
  Json j;
  j["schema_version"] = 1;
  j["command"] = "orient";
  j["input"] = {{"n", r.input.n},
                {"m", r.input.m},
                {"min_degree", optional_int(r.input.min_degree)},
                {"diameter", optional_int(r.input.diameter)},
                {"bridgeless", r.input.bridgeless}};
  j["mode"] = std::string(mode_name(r.plan.mode));
  j["fallback_reason"] = r.plan.fallback_reason.empty() ? Json(nullptr) : Json(r.plan.fallback_reason);
  j["search_status"] = nullptr;
  if (r.plan.search_status) {
    switch (*r.plan.search_status) {
      case SearchStatus::Optimal:
        j["search_status"] = "optimal";
        break;
      case SearchStatus::TargetReached:
        j["search_status"] = "target-reached";
        break;
      case SearchStatus::BudgetExhausted:
        j["search_status"] = "budget-exhausted";
        break;
    }
  }
  if (r.plan.partition) {
    const VertexPartition& p = *r.plan.partition;
    j["pair"] = {{"u", p.pair.u}, {"v", p.pair.v}, {"x", p.pair.x}, {"y", p.pair.y}};
    Json cells = Json::object();
    for (std::size_t c = 0; c < kCellCount; ++c) cells[std::string(cell_name(static_cast<Cell>(c)))] = p.members[c].size();
    j["cells"] = cells;
  } else {
    j["pair"] = nullptr;
    j["cells"] = nullptr;
  }
  j["oriented_diameter"] = optional_int(r.oriented_diameter);
  j["strongly_connected"] = r.strongly_connected;
  j["certificate_digest"] = r.certificate_digest;
  Json rules = Json::array();
  for (const RuleApplication& a : r.plan.rules_applied) rules.push_back({{"rule", a.rule}, {"arc", {a.arc.from, a.arc.to}}});
  j["rules"] = rules;
  Json leftover = Json::array();
  for (const Arc& a : r.plan.leftover) leftover.push_back({a.from, a.to});
  j["leftover"] = leftover;
  Json conflicts = Json::array();
  for (const RuleConflict& c : r.plan.conflicts) {
    conflicts.push_back({{"edge", {c.edge.a, c.edge.b}}, {"kept", c.kept_rule}, {"ignored", c.ignored_rule}});
  }
  j["conflicts"] = conflicts;
  if (!r.timings_ms.empty()) {
    Json t = Json::object();
    for (const auto& [phase, ms] : r.timings_ms) t[phase] = ms;
    j["timings_ms"] = t;
  }
  return j.dump(2) + "\n";
}

std::string report_text(const RunReport& r) {
  std::ostringstream out;
  out << "input n " << r.input.n << " m " << r.input.m << "\n";
  out << "mode " << mode_name(r.plan.mode) << "\n";
  if (!r.plan.fallback_reason.empty()) out << "fallback reason " << r.plan.fallback_reason << "\n";
  if (r.plan.partition) {
    const VertexPartition& p = *r.plan.partition;
    out << "pair u " << p.pair.u << " v " << p.pair.v << " x " << p.pair.x << " y " << p.pair.y << "\n";
    out << "cells";
    for (std::size_t c = 0; c < kCellCount; ++c) {
      if (!p.members[c].empty()) out << " " << cell_name(static_cast<Cell>(c)) << "=" << p.members[c].size();
    }
    out << "\n";
    out << "rules " << r.plan.rules_applied.size() << " leftover " << r.plan.leftover.size() << " conflicts "
        << r.plan.conflicts.size() << "\n";
  }
  if (r.oriented_diameter) {
    out << "diameter " << *r.oriented_diameter << "\n";
  } else {
    out << "diameter inf\n";
  }
  out << "certificate " << r.certificate_digest << "\n";
  for (const auto& [phase, ms] : r.timings_ms) out << "time " << phase << " " << ms << " ms\n";
  return out.str();
}

}  // namespace oriadim
