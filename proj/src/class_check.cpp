#include "oriadim/class_check.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>

#include "bitgraph.hpp"
#include "oriadim/enumerate.hpp"
#include "oriadim/errors.hpp"

namespace oriadim {

namespace {

// Diameter of g minus the given edges, capped at limit.
class DeletionProbe {
 public:
  explicit DeletionProbe(const UndirectedGraph& g) : g_(g), small_(g.num_vertices() <= bits::kMaxVertices) {
    if (small_) masks_ = bits::from_undirected(g);
  }

  int diameter_without(std::span<const int> removed, int limit) const {
    if (small_) {
      bits::MaskGraph h = masks_;
      for (int i : removed) {
        const Edge& e = g_.edge(i);
        h.out[static_cast<std::size_t>(e.a)] &= ~(bits::Mask{1} << e.b);
        h.out[static_cast<std::size_t>(e.b)] &= ~(bits::Mask{1} << e.a);
      }
      return bits::diameter(h, limit);
    }
    int d = diameter_value(g_.without_edges(removed));
    return std::min(d, limit);
  }

 private:
  const UndirectedGraph& g_;
  bool small_;
  bits::MaskGraph masks_;
};

// Advances comb (strictly increasing indices below m) to the next combination
// sharing comb[0]; false when exhausted.
bool next_tail(std::vector<int>& comb, int m) {
  const int t = static_cast<int>(comb.size());
  for (int pos = t - 1; pos >= 1; --pos) {
    if (comb[static_cast<std::size_t>(pos)] < m - (t - pos)) {
      ++comb[static_cast<std::size_t>(pos)];
      for (int q = pos + 1; q < t; ++q) comb[static_cast<std::size_t>(q)] = comb[static_cast<std::size_t>(q - 1)] + 1;
      return true;
    }
  }
  return false;
}

// First violating subset of exactly t edges whose smallest index is first.
std::optional<std::vector<int>> first_violation_from(const DeletionProbe& probe, int m, int t, int first,
                                                     int lambda) {
  if (first + t > m) return std::nullopt;
  std::vector<int> comb(static_cast<std::size_t>(t));
  for (int q = 0; q < t; ++q) comb[static_cast<std::size_t>(q)] = first + q;
  do {
    if (probe.diameter_without(comb, lambda + 1) > lambda) return comb;
  } while (next_tail(comb, m));
  return std::nullopt;
}

ClassReport in_class_impl(const UndirectedGraph& g, const ClassParams& p, bool parallel) {
  p.validate();
  const int n = g.num_vertices();
  if (n == 0) throw InputError("class membership of the empty graph is undefined");
  ClassReport report;

  DiameterCertificate cert = parallel ? diameter(g) : diameter_serial(g);
  for (int i = 0; i < n && !report.violating_pair; ++i) {
    for (int j = 0; j < n; ++j) {
      if (cert.at(i, j) > p.k) {
        report.violating_pair = std::pair{i, j};
        report.witness_distance = cert.at(i, j);
        break;
      }
    }
  }
  if (report.violating_pair) return report;

  const int m = g.num_edges();
  DeletionProbe probe(g);
  for (int t = 1; t <= std::min(p.s, m); ++t) {
    std::optional<std::vector<int>> found;
    if (parallel) {
      std::vector<std::optional<std::vector<int>>> per_first(static_cast<std::size_t>(m));
      std::atomic<int> earliest{std::numeric_limits<int>::max()};
#pragma omp parallel for schedule(dynamic, 1)
      for (int first = 0; first < m; ++first) {
        if (first > earliest.load(std::memory_order_relaxed)) continue;
        per_first[static_cast<std::size_t>(first)] = first_violation_from(probe, m, t, first, p.lambda);
        if (per_first[static_cast<std::size_t>(first)]) {
          int seen = earliest.load(std::memory_order_relaxed);
          while (first < seen && !earliest.compare_exchange_weak(seen, first)) {
          }
        }
      }
      for (auto& candidate : per_first) {
        if (candidate) {
          found = std::move(candidate);
          break;
        }
      }
    } else {
      for (int first = 0; first < m && !found; ++first) {
        found = first_violation_from(probe, m, t, first, p.lambda);
      }
    }
    if (found) {
      std::vector<Edge> deleted;
      for (int i : *found) deleted.push_back(g.edge(i));
      report.witness_distance = diameter_value(g.without_edges(*found));
      report.violating_deletion = std::move(deleted);
      return report;
    }
  }
  report.member = true;
  return report;
}

}  // namespace

void ClassParams::validate() const {
  if (k < 1) throw InputError("k must be positive, got " + std::to_string(k));
  if (lambda <= k) throw InputError("lambda must exceed k, got k=" + std::to_string(k) + " lambda=" + std::to_string(lambda));
  if (s < 0) throw InputError("s must be non-negative, got " + std::to_string(s));
}

ClassReport in_class(const UndirectedGraph& g, const ClassParams& p) { return in_class_impl(g, p, true); }

ClassReport in_class_serial(const UndirectedGraph& g, const ClassParams& p) { return in_class_impl(g, p, false); }

MinEdgesResult min_edges_in_class(int n, const ClassParams& p, std::size_t budget) {
  p.validate();
  if (n < 1) throw InputError("vertex count must be positive");
  if (n > kMinEdgesMaxVertices) {
    throw CapabilityError("min-edges search is capped at n <= " + std::to_string(kMinEdgesMaxVertices));
  }
  MinEdgesResult result;
  const int max_possible = n * (n - 1) / 2;
  // Every member has minimum degree >= s + 1 once n >= 2.
  const int first_cap = n >= 2 ? (n * (p.s + 1) + 1) / 2 : 0;
  for (int cap = first_cap; cap <= max_possible; ++cap) {
    EnumerationResult level = enumerate_graphs(n, cap, budget);
    result.graphs_examined += level.candidates;
    if (!level.complete) {
      result.edges = cap;
      result.exact = false;
      return result;
    }
    for (const UndirectedGraph& g : level.graphs) {
      if (g.num_edges() != cap && cap != first_cap) continue;
      if (n >= 2 && min_degree(g) < p.s + 1) continue;
      if (!is_connected(g)) continue;
      if (!in_class(g, p).member) continue;
      if (!result.witness || g.num_edges() < result.witness->num_edges()) result.witness = g;
    }
    if (result.witness) {
      result.edges = result.witness->num_edges();
      result.exact = true;
      return result;
    }
  }
  result.found = false;
  result.edges = 0;
  result.exact = true;
  return result;
}

std::optional<Degree2Pair> find_adjacent_degree2_pair(const UndirectedGraph& g) {
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (g.degree(u) != 2) continue;
    for (Vertex v : g.neighbors(u)) {
      if (g.degree(v) != 2) continue;
      auto nu = g.neighbors(u);
      auto nv = g.neighbors(v);
      Vertex x = nu[0] == v ? nu[1] : nu[0];
      Vertex y = nv[0] == u ? nv[1] : nv[0];
      if (x == y) continue;
      return Degree2Pair{u, v, x, y};
    }
  }
  return std::nullopt;
}

bool check_observation1(const UndirectedGraph& g, const ClassParams& p) {
  if (g.num_vertices() == 0) return true;
  return min_degree(g) >= p.s + 1;
}

}  // namespace oriadim
