#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "oriadim/graph.hpp"
#include "oriadim/orient_d3.hpp"

namespace oriadim {

/// Edge-list text: header "n m", then m lines "a b". Blank lines and lines
/// starting with '#' are skipped. Errors are InputErrors prefixed with the
/// 1-based line number. Non-strict mode drops self-loops and repeated pairs
/// instead of rejecting them (m still counts every line).
UndirectedGraph parse_graph(std::string_view text, bool strict = true);

/// Same grammar; each line "a b" is the arc a -> b. The underlying edges must
/// be distinct as unordered pairs.
Orientation parse_orientation(std::string_view text);

/// Canonical text, edges sorted by (a, b), no trailing newline.
std::string emit_graph(const UndirectedGraph& g);

/// Canonical text, arcs sorted by (from, to), no trailing newline.
std::string emit_orientation(const Orientation& o);

struct InputSummary {
  int n = 0;
  int m = 0;
  std::optional<int> min_degree;  // empty for n = 0
  std::optional<int> diameter;    // empty when disconnected
  bool bridgeless = true;
};

InputSummary summarize(const UndirectedGraph& g);

/// Everything `orient` reports about one run.
struct RunReport {
  InputSummary input;
  OrientationPlan plan;
  std::optional<int> oriented_diameter;  // empty when not strong
  bool strongly_connected = false;
  std::string certificate_digest;
  /// Phase name -> milliseconds; only reported when non-empty.
  std::map<std::string, double> timings_ms;
};

RunReport make_run_report(const UndirectedGraph& g, const OrientResult& result, const DiameterCertificate& cert);

/// JSON with a fixed key order, "schema_version": 1 first.
std::string report_json(const RunReport& r);
std::string report_text(const RunReport& r);

}  // namespace oriadim
