#include "oriadim/exact_search.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>

#include "bitgraph.hpp"
#include "oriadim/enumerate.hpp"
#include "oriadim/errors.hpp"
#include "oriadim/random.hpp"

namespace oriadim {

namespace {

void require_strongly_orientable(const UndirectedGraph& g) {
  if (g.num_vertices() == 0) throw InputError("graph has no vertices");
  if (!is_connected(g)) throw InputError("graph is disconnected");
  auto cut = bridges(g);
  if (!cut.empty()) throw BridgeError(cut.front().a, cut.front().b);
}

Orientation robbins_impl(const UndirectedGraph& g, Rng* rng) {
  require_strongly_orientable(g);
  const int n = g.num_vertices();
  std::vector<std::vector<Vertex>> order(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    auto nbrs = g.neighbors(v);
    order[static_cast<std::size_t>(v)].assign(nbrs.begin(), nbrs.end());
    if (rng) shuffle(std::span<Vertex>(order[static_cast<std::size_t>(v)]), *rng);
  }
  Vertex root = rng ? static_cast<Vertex>(uniform_below(*rng, static_cast<std::uint64_t>(n))) : 0;

  // Every edge is directed away from whichever endpoint scans it first:
  // unvisited neighbor -> tree arc to the child, visited one -> back arc to
  // an ancestor still on the stack.
  std::vector<bool> forward(static_cast<std::size_t>(g.num_edges()), false);
  std::vector<bool> assigned(forward.size(), false);
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
  visited[static_cast<std::size_t>(root)] = true;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto& nbrs = order[static_cast<std::size_t>(v)];
    if (next == nbrs.size()) {
      stack.pop_back();
      continue;
    }
    Vertex w = nbrs[next++];
    auto index = static_cast<std::size_t>(*g.edge_index(v, w));
    if (assigned[index]) continue;
    assigned[index] = true;
    forward[index] = v < w;
    if (!visited[static_cast<std::size_t>(w)]) {
      visited[static_cast<std::size_t>(w)] = true;
      stack.emplace_back(w, 0);
    }
  }
  return Orientation(g, std::move(forward));
}

struct Objective {
  int diameter;
  long total;

  friend bool operator<(const Objective& l, const Objective& r) {
    return l.diameter != r.diameter ? l.diameter < r.diameter : l.total < r.total;
  }
};

Objective evaluate(const Orientation& o) {
  if (o.num_vertices() <= bits::kMaxVertices) {
    bits::MaskGraph m = bits::from_orientation(o);
    int d = bits::diameter(m);
    return {d, d == kUnreachable ? 0 : bits::total_distance(m)};
  }
  DiameterCertificate cert = diameter_serial(o);
  long total = 0;
  if (cert.strongly_connected) {
    for (int d : cert.dist) total += d;
  }
  return {cert.diameter, total};
}

// Branch-and-bound state over a mixed graph. Fixed arcs drop one direction
// of the corresponding symmetric mask pair.
class Brancher {
 public:
  Brancher(const UndirectedGraph& g, std::vector<int> order, std::atomic<int>& best, std::atomic<std::uint64_t>& nodes,
           std::atomic<bool>& stop, const SearchConfig& cfg)
      : g_(g), order_(std::move(order)), best_(best), nodes_(nodes), stop_(stop), cfg_(cfg) {
    mixed_ = bits::from_undirected(g);
    forward_.assign(static_cast<std::size_t>(g.num_edges()), false);
  }

  void fix(int depth, bool forward) {
    const Edge& e = g_.edge(order_[static_cast<std::size_t>(depth)]);
    forward_[static_cast<std::size_t>(order_[static_cast<std::size_t>(depth)])] = forward;
    if (forward) mixed_.out[static_cast<std::size_t>(e.b)] &= ~(bits::Mask{1} << e.a);
    else mixed_.out[static_cast<std::size_t>(e.a)] &= ~(bits::Mask{1} << e.b);
  }

  void unfix(int depth) {
    const Edge& e = g_.edge(order_[static_cast<std::size_t>(depth)]);
    mixed_.out[static_cast<std::size_t>(e.a)] |= bits::Mask{1} << e.b;
    mixed_.out[static_cast<std::size_t>(e.b)] |= bits::Mask{1} << e.a;
  }

  /// Lower bound for every completion, capped at the incumbent.
  int bound() const { return bits::diameter(mixed_, best_.load(std::memory_order_relaxed)); }

  void run(int depth) {
    if (stop_.load(std::memory_order_relaxed)) return;
    std::uint64_t count = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (cfg_.node_budget != 0 && count > cfg_.node_budget) {
      exhausted_ = true;
      stop_.store(true, std::memory_order_relaxed);
      return;
    }
    int incumbent = best_.load(std::memory_order_relaxed);
    int lb = bits::diameter(mixed_, incumbent);
    if (lb >= incumbent) return;
    if (depth == static_cast<int>(order_.size())) {
      // Every edge fixed: lb is the exact diameter.
      int seen = incumbent;
      while (lb < seen && !best_.compare_exchange_weak(seen, lb)) {
      }
      if (lb < local_best_) {
        local_best_ = lb;
        local_witness_ = forward_;
      }
      if (cfg_.target && lb <= *cfg_.target) {
        reached_target_ = true;
        stop_.store(true, std::memory_order_relaxed);
      }
      return;
    }
    bool only_forward = depth == 0;
    fix(depth, true);
    run(depth + 1);
    unfix(depth);
    if (only_forward) return;
    fix(depth, false);
    run(depth + 1);
    unfix(depth);
  }

  bool exhausted() const { return exhausted_; }
  bool reached_target() const { return reached_target_; }
  int local_best() const { return local_best_; }
  const std::vector<bool>& local_witness() const { return local_witness_; }

 private:
  const UndirectedGraph& g_;
  std::vector<int> order_;
  std::atomic<int>& best_;
  std::atomic<std::uint64_t>& nodes_;
  std::atomic<bool>& stop_;
  const SearchConfig& cfg_;
  bits::MaskGraph mixed_;
  std::vector<bool> forward_;
  bool exhausted_ = false;
  bool reached_target_ = false;
  int local_best_ = kUnreachable;
  std::vector<bool> local_witness_;
};

std::vector<int> branch_order(const UndirectedGraph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.num_edges()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int l, int r) {
    const Edge& a = g.edge(l);
    const Edge& b = g.edge(r);
    return g.degree(a.a) + g.degree(a.b) > g.degree(b.a) + g.degree(b.b);
  });
  return order;
}

// Search for an orientation strictly better than `incumbent`. Returns the
// improved (value, directions) or nothing.
struct SearchOutcome {
  int best = kUnreachable;
  std::vector<bool> witness;  // empty if nothing beat the incumbent
  bool exhausted = false;
  bool reached_target = false;
  std::uint64_t nodes = 0;
};

SearchOutcome branch_and_bound(const UndirectedGraph& g, int incumbent, const SearchConfig& cfg, bool parallel) {
  std::vector<int> order = branch_order(g);
  std::atomic<int> best{incumbent};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  SearchOutcome out;
  const int m = g.num_edges();

  if (!parallel || m < 8) {
    Brancher b(g, order, best, nodes, stop, cfg);
    b.run(0);
    out.best = best.load();
    if (b.local_best() < incumbent) out.witness = b.local_witness();
    out.exhausted = b.exhausted();
    out.reached_target = b.reached_target();
    out.nodes = nodes.load();
    return out;
  }

  // Split on the first `split` edges (the first is fixed forward).
  const int split = std::min(m - 1, 7);
  const int tasks = 1 << (split - 1);
  std::vector<int> task_best(static_cast<std::size_t>(tasks), kUnreachable);
  std::vector<std::vector<bool>> task_witness(static_cast<std::size_t>(tasks));
  std::atomic<bool> any_exhausted{false};
  std::atomic<bool> any_target{false};
#pragma omp parallel for schedule(dynamic, 1)
  for (int t = 0; t < tasks; ++t) {
    if (stop.load(std::memory_order_relaxed)) continue;
    Brancher b(g, order, best, nodes, stop, cfg);
    b.fix(0, true);
    for (int d = 1; d < split; ++d) b.fix(d, ((t >> (d - 1)) & 1) == 0);
    if (b.bound() >= best.load(std::memory_order_relaxed)) continue;
    b.run(split);
    task_best[static_cast<std::size_t>(t)] = b.local_best();
    task_witness[static_cast<std::size_t>(t)] = b.local_witness();
    if (b.exhausted()) any_exhausted = true;
    if (b.reached_target()) any_target = true;
  }
  out.best = best.load();
  for (int t = 0; t < tasks; ++t) {
    if (task_best[static_cast<std::size_t>(t)] == out.best && out.best < incumbent) {
      out.witness = task_witness[static_cast<std::size_t>(t)];
      break;
    }
  }
  out.exhausted = any_exhausted;
  out.reached_target = any_target;
  out.nodes = nodes.load();
  return out;
}

ExactResult exact_impl(const UndirectedGraph& g, const SearchConfig& cfg, bool parallel) {
  require_strongly_orientable(g);
  if (g.num_vertices() > bits::kMaxVertices) {
    throw CapabilityError("exact search supports at most " + std::to_string(bits::kMaxVertices) + " vertices");
  }
  ExactResult result;
  if (g.num_vertices() == 1) {
    result.diameter = 0;
    result.witness = Orientation(g, {});
    return result;
  }

  SearchConfig heuristic_cfg;
  Orientation start = improve_orientation(g, robbins_orient(g), heuristic_cfg);
  int start_value = evaluate(start).diameter;
  result.diameter = start_value;
  result.witness = start;
  if (cfg.target && start_value <= *cfg.target) {
    result.status = SearchStatus::TargetReached;
    return result;
  }
  // No orientation beats the undirected diameter.
  if (start_value == diameter_value(g)) return result;

  SearchOutcome found = branch_and_bound(g, start_value, cfg, parallel);
  result.nodes = found.nodes;
  if (found.best < start_value) {
    result.diameter = found.best;
    if (parallel && !found.exhausted) {
      // Deterministic witness: first orientation in serial DFS order reaching the value.
      SearchConfig replay;
      replay.target = found.best;
      SearchOutcome first = branch_and_bound(g, found.best + 1, replay, false);
      result.witness = Orientation(g, first.witness);
    } else {
      result.witness = Orientation(g, found.witness);
    }
  }
  if (found.exhausted) result.status = SearchStatus::BudgetExhausted;
  else if (found.reached_target) result.status = SearchStatus::TargetReached;
  return result;
}

ExactResult checked_exact(const UndirectedGraph& g, const SearchConfig& cfg, bool parallel) {
  if (cfg.edge_cap > kExhaustiveEdgeCeiling) {
    throw InputError("edge cap " + std::to_string(cfg.edge_cap) + " exceeds the ceiling of " +
                     std::to_string(kExhaustiveEdgeCeiling));
  }
  if (g.num_edges() > cfg.edge_cap) {
    throw CapabilityError("graph has " + std::to_string(g.num_edges()) + " edges, above the exact-search cap of " +
                          std::to_string(cfg.edge_cap));
  }
  return exact_impl(g, cfg, parallel);
}

}  // namespace

Orientation robbins_orient(const UndirectedGraph& g) { return robbins_impl(g, nullptr); }

Orientation robbins_orient(const UndirectedGraph& g, std::uint64_t seed) {
  Rng rng(seed);
  return robbins_impl(g, &rng);
}

ExactResult oriented_diameter_exact(const UndirectedGraph& g, const SearchConfig& cfg) {
  return checked_exact(g, cfg, true);
}

ExactResult oriented_diameter_exact_serial(const UndirectedGraph& g, const SearchConfig& cfg) {
  return checked_exact(g, cfg, false);
}

Orientation improve_orientation(const UndirectedGraph& g, const Orientation& o, const SearchConfig& cfg) {
  if (!(o.base() == g)) throw InputError("orientation does not match the graph");
  Objective current = evaluate(o);
  if (current.diameter == kUnreachable) throw InputError("orientation is not strongly connected");
  Orientation best = o;
  std::uint64_t tried = 0;
  bool improved = true;
  while (improved) {
    improved = false;
    for (int i = 0; i < g.num_edges(); ++i) {
      if (cfg.node_budget != 0 && tried >= cfg.node_budget) return best;
      ++tried;
      Orientation candidate = best.with_flipped(i);
      Objective value = evaluate(candidate);
      if (value.diameter != kUnreachable && value < current) {
        best = std::move(candidate);
        current = value;
        improved = true;
      }
    }
  }
  return best;
}

WitnessSearchResult search_witness(const WitnessSearchOptions& opts) {
  if (opts.n_max < 0) throw InputError("n-max must be non-negative");
  if (opts.n_max > bits::kMaxVertices) throw CapabilityError("n-max above 64 is not supported");
  WitnessSearchResult result;
  result.candidates_by_n.assign(static_cast<std::size_t>(std::max(opts.n_max, 0)) + 1, 0);
  Rng rng(opts.seed);

  for (int n = 3; n <= opts.n_max; ++n) {
    std::vector<UndirectedGraph> pool;
    if (n <= kWitnessExhaustiveMaxVertices) {
      EnumerationResult all = enumerate_graphs(n, n * (n - 1) / 2);
      result.graphs_examined += all.graphs.size();
      pool = std::move(all.graphs);
    } else {
      result.exhaustive = false;
      for (int i = 0; i < opts.samples; ++i) {
        // Edge density drawn from [0.15, 0.60].
        std::uint64_t density = 15 + uniform_below(rng, 46);
        std::vector<Edge> edges;
        for (int a = 0; a < n; ++a) {
          for (int b = a + 1; b < n; ++b) {
            if (chance(rng, density, 100)) edges.push_back({a, b});
          }
        }
        pool.emplace_back(n, edges);
      }
      result.graphs_examined += pool.size();
    }

    std::vector<UndirectedGraph> candidates;
    for (auto& g : pool) {
      if (!is_connected(g) || !bridges(g).empty()) continue;
      if (diameter_value(g) > opts.graph_diameter) continue;
      candidates.push_back(std::move(g));
    }
    result.candidates += candidates.size();
    result.candidates_by_n[static_cast<std::size_t>(n)] = candidates.size();

    const auto count = static_cast<long>(candidates.size());
    std::vector<ExactResult> values(candidates.size());
    SearchConfig cfg = opts.search;
    if (!opts.exact_values) cfg.target = opts.diameter_target - 1;
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) {
      values[static_cast<std::size_t>(i)] = exact_impl(candidates[static_cast<std::size_t>(i)], cfg, false);
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const ExactResult& r = values[i];
      bool proven = r.status != SearchStatus::BudgetExhausted;
      if (!proven) result.all_proven = false;
      result.max_oriented_diameter = std::max(result.max_oriented_diameter, r.diameter);
      // Budget-exhausted searches only give an upper bound, which may still
      // sit at or above the target; they are reported as unproven.
      if (r.diameter >= opts.diameter_target) {
        result.witnesses.push_back({candidates[i], r.diameter, proven});
      }
    }
  }
  return result;
}

}  // namespace oriadim
