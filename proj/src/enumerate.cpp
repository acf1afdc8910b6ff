#include "oriadim/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <unordered_set>

#include "oriadim/errors.hpp"

namespace oriadim {

namespace {

using Row = std::uint16_t;
using Key = unsigned __int128;

struct KeyHash {
  std::size_t operator()(Key k) const noexcept {
    auto lo = static_cast<std::uint64_t>(k);
    auto hi = static_cast<std::uint64_t>(k >> 64);
    return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
  }
};

struct SmallGraph {
  int n = 0;
  std::array<Row, kCanonicalMaxVertices> adj{};
};

// Upper-triangle bits, pair (i,j) with i<j in row-major order.
Key encode(const SmallGraph& g) {
  Key key = 0;
  int bit = 0;
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j, ++bit) {
      if ((g.adj[static_cast<std::size_t>(i)] >> j) & 1U) key |= Key{1} << bit;
    }
  }
  return key;
}

SmallGraph decode(int n, Key key) {
  SmallGraph g;
  g.n = n;
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if ((key >> bit) & 1U) {
        g.adj[static_cast<std::size_t>(i)] |= static_cast<Row>(1U << j);
        g.adj[static_cast<std::size_t>(j)] |= static_cast<Row>(1U << i);
      }
    }
  }
  return g;
}

int edge_count(const SmallGraph& g) {
  int twice = 0;
  for (int i = 0; i < g.n; ++i) twice += std::popcount(g.adj[static_cast<std::size_t>(i)]);
  return twice / 2;
}

class Canonizer {
 public:
  explicit Canonizer(const SmallGraph& g) : g_(g) {}

  Key run() {
    std::vector<int> color(static_cast<std::size_t>(g_.n), 0);
    search(color);
    return best_;
  }

 private:
  // Colors stay contiguous 0..k-1 and ordered by (old color, neighbor color
  // counts), which keeps refinement isomorphism-invariant.
  int refine(std::vector<int>& color) const {
    const int n = g_.n;
    std::vector<int> order(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    int k = normalize(color);
    while (true) {
      for (int v = 0; v < n; ++v) {
        auto& s = sig[static_cast<std::size_t>(v)];
        s.assign(static_cast<std::size_t>(k) + 1, 0);
        s[0] = color[static_cast<std::size_t>(v)];
        for (Row r = g_.adj[static_cast<std::size_t>(v)]; r != 0; r &= static_cast<Row>(r - 1)) {
          ++s[static_cast<std::size_t>(color[static_cast<std::size_t>(std::countr_zero(r))]) + 1];
        }
      }
      for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)]; });
      int next = 0;
      for (int i = 0; i < n; ++i) {
        if (i > 0 && sig[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] !=
                         sig[static_cast<std::size_t>(order[static_cast<std::size_t>(i - 1)])]) {
          ++next;
        }
        color[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = next;
      }
      int fresh = n == 0 ? 0 : next + 1;
      if (fresh == k) return k;
      k = fresh;
    }
  }

  static int normalize(std::vector<int>& color) {
    std::vector<int> values = color;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (int& c : color) c = static_cast<int>(std::lower_bound(values.begin(), values.end(), c) - values.begin());
    return static_cast<int>(values.size());
  }

  void search(std::vector<int> color) {
    const int n = g_.n;
    int k = refine(color);
    if (k == n) {
      SmallGraph relabeled;
      relabeled.n = n;
      for (int v = 0; v < n; ++v) {
        Row row = 0;
        for (Row r = g_.adj[static_cast<std::size_t>(v)]; r != 0; r &= static_cast<Row>(r - 1)) {
          row |= static_cast<Row>(1U << color[static_cast<std::size_t>(std::countr_zero(r))]);
        }
        relabeled.adj[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])] = row;
      }
      Key key = encode(relabeled);
      if (!have_best_ || key < best_) {
        best_ = key;
        have_best_ = true;
      }
      return;
    }
    std::vector<int> size(static_cast<std::size_t>(k), 0);
    for (int c : color) ++size[static_cast<std::size_t>(c)];
    int target = 0;
    while (size[static_cast<std::size_t>(target)] == 1) ++target;

    std::vector<int> tried;
    for (int v = 0; v < n; ++v) {
      if (color[static_cast<std::size_t>(v)] != target) continue;
      bool twin = std::any_of(tried.begin(), tried.end(), [&](int w) {
        Row mv = g_.adj[static_cast<std::size_t>(v)] & static_cast<Row>(~(1U << w));
        Row mw = g_.adj[static_cast<std::size_t>(w)] & static_cast<Row>(~(1U << v));
        return mv == mw;
      });
      if (twin) continue;
      tried.push_back(v);
      std::vector<int> child(static_cast<std::size_t>(n));
      for (int w = 0; w < n; ++w) {
        int c = color[static_cast<std::size_t>(w)];
        child[static_cast<std::size_t>(w)] = 2 * c + (c == target && w != v ? 1 : 0);
      }
      search(std::move(child));
    }
  }

  SmallGraph g_;
  Key best_ = 0;
  bool have_best_ = false;
};

SmallGraph to_small(const UndirectedGraph& g) {
  if (g.num_vertices() > kCanonicalMaxVertices) {
    throw CapabilityError("canonical labeling supports at most " + std::to_string(kCanonicalMaxVertices) +
                          " vertices");
  }
  SmallGraph s;
  s.n = g.num_vertices();
  for (const Edge& e : g.edges()) {
    s.adj[static_cast<std::size_t>(e.a)] |= static_cast<Row>(1U << e.b);
    s.adj[static_cast<std::size_t>(e.b)] |= static_cast<Row>(1U << e.a);
  }
  return s;
}

UndirectedGraph to_graph(const SmallGraph& s) {
  std::vector<Edge> edges;
  for (int i = 0; i < s.n; ++i) {
    for (int j = i + 1; j < s.n; ++j) {
      if ((s.adj[static_cast<std::size_t>(i)] >> j) & 1U) edges.push_back({i, j});
    }
  }
  return UndirectedGraph(s.n, edges);
}

Key canonical(const SmallGraph& g) { return Canonizer(g).run(); }

// Extends every graph of the previous level by one vertex; dedupes per thread
// into hash sets, then merges. Returns false when the budget ran out.
bool extend_level(int k, int max_edges, const std::vector<Key>& level, std::vector<Key>& next,
                  std::size_t budget, std::size_t& spent, bool parallel) {
  const auto count = static_cast<long>(level.size());
  const Row subsets = static_cast<Row>(1U << k);
  bool exhausted = false;
  std::unordered_set<Key, KeyHash> merged;

  auto expand = [&](long i, std::unordered_set<Key, KeyHash>& local, std::size_t& work) {
    SmallGraph base = decode(k, level[static_cast<std::size_t>(i)]);
    int room = max_edges - edge_count(base);
    base.n = k + 1;
    for (Row s = 0; s < subsets; ++s) {
      if (std::popcount(s) > room) continue;
      SmallGraph g = base;
      g.adj[static_cast<std::size_t>(k)] = s;
      for (Row r = s; r != 0; r &= static_cast<Row>(r - 1)) {
        g.adj[static_cast<std::size_t>(std::countr_zero(r))] |= static_cast<Row>(1U << k);
      }
      local.insert(canonical(g));
      ++work;
    }
  };

  if (parallel) {
#pragma omp parallel
    {
      std::unordered_set<Key, KeyHash> local;
      std::size_t work = 0;
#pragma omp for schedule(dynamic, 16)
      for (long i = 0; i < count; ++i) {
        bool stop;
#pragma omp atomic read
        stop = exhausted;
        if (stop) continue;
        std::size_t before = work;
        expand(i, local, work);
        std::size_t total;
#pragma omp atomic capture
        total = spent += work - before;
        if (budget != 0 && total > budget) {
#pragma omp atomic write
          exhausted = true;
        }
      }
#pragma omp critical(oriadim_enumerate_merge)
      merged.insert(local.begin(), local.end());
    }
  } else {
    for (long i = 0; i < count && !exhausted; ++i) {
      expand(i, merged, spent);
      if (budget != 0 && spent > budget) exhausted = true;
    }
  }
  next.assign(merged.begin(), merged.end());
  std::sort(next.begin(), next.end());
  return !exhausted;
}

EnumerationResult enumerate_impl(int n, int max_edges, std::size_t budget, bool parallel) {
  if (n < 0) throw InputError("negative vertex count");
  if (n > kCanonicalMaxVertices) {
    throw CapabilityError("enumeration supports at most " + std::to_string(kCanonicalMaxVertices) + " vertices");
  }
  EnumerationResult result;
  if (n == 0) {
    result.graphs.emplace_back(0);
    return result;
  }
  std::vector<Key> level{Key{0}};
  for (int k = 1; k < n; ++k) {
    std::vector<Key> next;
    if (!extend_level(k, max_edges, level, next, budget, result.candidates, parallel)) {
      result.complete = false;
    }
    level = std::move(next);
    if (!result.complete) break;
  }
  if (result.complete) {
    result.graphs.reserve(level.size());
    for (Key key : level) result.graphs.push_back(to_graph(decode(n, key)));
  }
  return result;
}

}  // namespace

std::string canonical_key(const UndirectedGraph& g) {
  Key key = canonical(to_small(g));
  char buf[40];
  std::snprintf(buf, sizeof buf, "%d:%016llx%016llx", g.num_vertices(),
                static_cast<unsigned long long>(key >> 64), static_cast<unsigned long long>(key));
  return buf;
}

UndirectedGraph canonical_form(const UndirectedGraph& g) {
  SmallGraph s = to_small(g);
  return to_graph(decode(s.n, canonical(s)));
}

EnumerationResult enumerate_graphs(int n, int max_edges, std::size_t budget) {
  return enumerate_impl(n, max_edges, budget, true);
}

EnumerationResult enumerate_graphs_serial(int n, int max_edges, std::size_t budget) {
  return enumerate_impl(n, max_edges, budget, false);
}

}  // namespace oriadim
