#include "oriadim/generators.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "oriadim/class_check.hpp"
#include "oriadim/errors.hpp"

namespace oriadim {

namespace {

using EdgeSet = std::set<Edge>;

UndirectedGraph build(int n, const EdgeSet& edges) {
  std::vector<Edge> list(edges.begin(), edges.end());
  return UndirectedGraph(n, list);
}

template <typename T>
const T& pick(const std::vector<T>& items, Rng& rng) {
  return items[static_cast<std::size_t>(uniform_below(rng, items.size()))];
}

// Vertices on a's side after deleting the edge {a, b}.
std::vector<bool> side_of(const UndirectedGraph& g, Vertex a, Vertex b) {
  std::vector<bool> seen(static_cast<std::size_t>(g.num_vertices()), false);
  std::vector<Vertex> stack{a};
  seen[static_cast<std::size_t>(a)] = true;
  while (!stack.empty()) {
    Vertex w = stack.back();
    stack.pop_back();
    for (Vertex t : g.neighbors(w)) {
      if ((w == a && t == b) || (w == b && t == a) || seen[static_cast<std::size_t>(t)]) continue;
      seen[static_cast<std::size_t>(t)] = true;
      stack.push_back(t);
    }
  }
  return seen;
}

constexpr Vertex kU = 0;
constexpr Vertex kV = 1;
constexpr Vertex kX = 2;
constexpr Vertex kY = 3;

bool frozen(Vertex w) { return w == kU || w == kV; }

struct FarPair {
  Vertex p;
  Vertex q;
};

std::optional<FarPair> far_pair(const UndirectedGraph& h, int limit) {
  for (Vertex p = 0; p < h.num_vertices(); ++p) {
    std::vector<int> d = bfs_distances(h, p);
    for (Vertex q = 0; q < h.num_vertices(); ++q) {
      if (d[static_cast<std::size_t>(q)] > limit) return FarPair{p, q};
    }
  }
  return std::nullopt;
}

// Adds an edge {a, b} of g (neither endpoint u or v) with
// d_h(p, a) + 1 + d_h(b, q) <= limit, chosen uniformly.
bool shortcut(const UndirectedGraph& g, const UndirectedGraph& h, FarPair pq, int limit, EdgeSet& edges, Rng& rng) {
  std::vector<int> dp = bfs_distances(h, pq.p);
  std::vector<int> dq = bfs_distances(h, pq.q);
  std::vector<Edge> options;
  for (Vertex a = 0; a < g.num_vertices(); ++a) {
    int da = dp[static_cast<std::size_t>(a)];
    if (frozen(a) || da >= limit) continue;
    for (Vertex b = 0; b < g.num_vertices(); ++b) {
      int db = dq[static_cast<std::size_t>(b)];
      if (frozen(b) || a == b || db == kUnreachable || da + 1 + db > limit || g.adjacent(a, b)) continue;
      options.push_back(make_edge(a, b));
    }
  }
  if (options.empty()) return false;
  edges.insert(pick(options, rng));
  return true;
}

}  // namespace

UndirectedGraph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  EdgeSet edges;
  for (Vertex i = 0; i < n; ++i) edges.insert(make_edge(i, (i + 1) % n));
  return build(n, edges);
}

UndirectedGraph complete_graph(int n) {
  if (n < 1) throw InputError("complete graph needs at least 1 vertex");
  EdgeSet edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) edges.insert({a, b});
  }
  return build(n, edges);
}

UndirectedGraph path_graph(int n) {
  if (n < 1) throw InputError("path needs at least 1 vertex");
  EdgeSet edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.insert({i, i + 1});
  return build(n, edges);
}

UndirectedGraph random_bridgeless(int n, std::uint64_t num, std::uint64_t den, Rng& rng) {
  if (n < 3) throw InputError("bridgeless graph needs at least 3 vertices");
  EdgeSet edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (chance(rng, num, den)) edges.insert({a, b});
    }
  }
  for (;;) {
    UndirectedGraph g = build(n, edges);
    std::vector<int> d = bfs_distances(g, 0);
    auto lost = std::find(d.begin(), d.end(), kUnreachable);
    if (lost != d.end()) {
      std::vector<Vertex> reached;
      for (Vertex w = 0; w < n; ++w) {
        if (d[static_cast<std::size_t>(w)] != kUnreachable) reached.push_back(w);
      }
      edges.insert(make_edge(pick(reached, rng), static_cast<Vertex>(lost - d.begin())));
      continue;
    }
    std::vector<Edge> cut = bridges(g);
    if (cut.empty()) return g;
    const Edge& e = pick(cut, rng);
    std::vector<bool> side = side_of(g, e.a, e.b);
    std::vector<Edge> options;
    for (Vertex p = 0; p < n; ++p) {
      for (Vertex q = p + 1; q < n; ++q) {
        if (side[static_cast<std::size_t>(p)] != side[static_cast<std::size_t>(q)] && !g.adjacent(p, q)) {
          options.push_back({p, q});
        }
      }
    }
    edges.insert(pick(options, rng));
  }
}

std::optional<UndirectedGraph> random_min_g_instance(int n, Rng& rng) {
  if (n < 6 || n > 64) throw InputError("instance size must be in [6, 64], got " + std::to_string(n));
  EdgeSet edges{{kU, kV}, {kU, kX}, {kV, kY}};
  std::vector<Vertex> zs, xs, ys, ws, is, ks, js;
  auto any_or = [&](const std::vector<Vertex>& cell, Vertex fallback) {
    return cell.empty() ? fallback : pick(cell, rng);
  };
  for (Vertex w = 4; w < n; ++w) {
    // Weights Z:X:Y:W:I:K:J = 3:3:3:1:1:1:2.
    int role = static_cast<int>(uniform_below(rng, 14));
    if (role < 3) {
      edges.insert({kX, w});
      edges.insert({kY, w});
      zs.push_back(w);
    } else if (role < 6) {
      edges.insert({kX, w});
      xs.push_back(w);
    } else if (role < 9) {
      edges.insert({kY, w});
      ys.push_back(w);
    } else if (role < 10) {
      edges.insert(make_edge(any_or(xs, kX), w));
      edges.insert(make_edge(any_or(ys, kY), w));
      ws.push_back(w);
    } else if (role < 11) {
      edges.insert(make_edge(any_or(xs, kX), w));
      edges.insert(make_edge(any_or(zs, kY), w));
      is.push_back(w);
    } else if (role < 12) {
      edges.insert(make_edge(any_or(ys, kY), w));
      edges.insert(make_edge(any_or(zs, kX), w));
      ks.push_back(w);
    } else {
      edges.insert(make_edge(any_or(zs, kX), w));
      std::vector<Vertex> inner = js;
      inner.insert(inner.end(), is.begin(), is.end());
      inner.insert(inner.end(), ks.begin(), ks.end());
      inner.insert(inner.end(), ws.begin(), ws.end());
      if (!inner.empty()) edges.insert(make_edge(pick(inner, rng), w));
      js.push_back(w);
    }
  }
  for (Vertex a = kX; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (chance(rng, 1, static_cast<std::uint64_t>(n))) edges.insert({a, b});
    }
  }

  const int max_repairs = 8 * n;
  int repairs = 0;
  for (;;) {
    UndirectedGraph g = build(n, edges);
    bool changed = false;
    if (auto pq = far_pair(g, 3)) {
      if (!shortcut(g, g, *pq, 3, edges, rng)) return std::nullopt;
      changed = true;
    } else {
      for (int i = 0; i < g.num_edges() && !changed; ++i) {
        std::vector<int> drop{i};
        UndirectedGraph h = g.without_edges(drop);
        if (auto pq = far_pair(h, 4)) {
          if (!shortcut(g, h, *pq, 4, edges, rng)) return std::nullopt;
          changed = true;
        }
      }
    }
    if (!changed) break;
    if (++repairs > max_repairs) return std::nullopt;
  }

  const ClassParams params{3, 4, 1};
  UndirectedGraph g = build(n, edges);
  std::vector<Edge> order;
  for (const Edge& e : g.edges()) {
    if (!frozen(e.a) && !frozen(e.b)) order.push_back(e);
  }
  shuffle(std::span<Edge>(order), rng);
  for (const Edge& e : order) {
    std::vector<int> drop{*g.edge_index(e.a, e.b)};
    UndirectedGraph thinner = g.without_edges(drop);
    if (in_class(thinner, params).member) g = std::move(thinner);
  }
  if (!in_class(g, params).member || !find_adjacent_degree2_pair(g)) return std::nullopt;
  return g;
}

UndirectedGraph min_g_instance(int n, std::uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    if (auto g = random_min_g_instance(n, rng)) return *g;
  }
  throw CapabilityError("no instance on " + std::to_string(n) + " vertices after 1000 attempts");
}

Lemma1Instance random_lemma1_instance(int n, Rng& rng) {
  if (n < 3 || n > 64) throw InputError("lemma1 instance size must be in [3, 64], got " + std::to_string(n));
  std::vector<Vertex> ids(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i;
  shuffle(std::span<Vertex>(ids), rng);
  int attached_size = uniform_int(rng, 2, n - 1);
  int anchor_size = uniform_int(rng, 1, n - attached_size);
  std::vector<Vertex> attached(ids.begin(), ids.begin() + attached_size);
  std::vector<Vertex> anchor(ids.begin() + attached_size, ids.begin() + attached_size + anchor_size);

  EdgeSet edges;
  auto linked = [&](Vertex w) {
    return std::any_of(attached.begin(), attached.end(),
                       [&](Vertex t) { return t != w && edges.count(make_edge(w, t)) != 0; });
  };
  for (Vertex w : attached) {
    if (!linked(w)) {
      Vertex t;
      do {
        t = pick(attached, rng);
      } while (t == w);
      edges.insert(make_edge(w, t));
    }
    edges.insert(make_edge(w, pick(anchor, rng)));
  }
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (chance(rng, 1, 3)) edges.insert({a, b});
    }
  }
  std::sort(anchor.begin(), anchor.end());
  std::sort(attached.begin(), attached.end());
  return {build(n, edges), std::move(anchor), std::move(attached)};
}

Orientation random_orientation(const UndirectedGraph& g, Rng& rng) {
  std::vector<bool> forward(static_cast<std::size_t>(g.num_edges()));
  for (std::size_t i = 0; i < forward.size(); ++i) forward[i] = chance(rng, 1, 2);
  return Orientation(g, std::move(forward));
}

}  // namespace oriadim
