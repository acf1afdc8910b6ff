#include "oriadim/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <string>

#include "oriadim/errors.hpp"

namespace oriadim {

namespace {

void check_vertex(int n, Vertex v) {
  if (v < 0 || v >= n) {
    throw InputError("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n) + ")");
  }
}

// BFS over any out-neighbor accessor; writes into dist (size n).
template <typename Neighbors>
void bfs_into(int n, Vertex source, Neighbors&& out, std::vector<int>& dist, std::vector<Vertex>& queue) {
  dist.assign(static_cast<std::size_t>(n), kUnreachable);
  queue.clear();
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex w = queue[head];
    int next = dist[static_cast<std::size_t>(w)] + 1;
    for (Vertex t : out(w)) {
      if (dist[static_cast<std::size_t>(t)] == kUnreachable) {
        dist[static_cast<std::size_t>(t)] = next;
        queue.push_back(t);
      }
    }
  }
}

template <typename Neighbors>
DiameterCertificate all_pairs(int n, Neighbors&& out, bool parallel) {
  if (n == 0) throw InputError("diameter of the empty graph is undefined");
  DiameterCertificate cert;
  cert.n = n;
  cert.dist.assign(static_cast<std::size_t>(n) * n, kUnreachable);
  int best = 0;
  bool strong = true;
  if (parallel) {
#pragma omp parallel reduction(max : best) reduction(&& : strong)
    {
      std::vector<int> dist;
      std::vector<Vertex> queue;
#pragma omp for schedule(dynamic, 4)
      for (int s = 0; s < n; ++s) {
        bfs_into(n, s, out, dist, queue);
        std::copy(dist.begin(), dist.end(), cert.dist.begin() + static_cast<std::ptrdiff_t>(s) * n);
        for (int d : dist) {
          if (d == kUnreachable) strong = false;
          else best = std::max(best, d);
        }
      }
    }
  } else {
    std::vector<int> dist;
    std::vector<Vertex> queue;
    for (int s = 0; s < n; ++s) {
      bfs_into(n, s, out, dist, queue);
      std::copy(dist.begin(), dist.end(), cert.dist.begin() + static_cast<std::ptrdiff_t>(s) * n);
      for (int d : dist) {
        if (d == kUnreachable) strong = false;
        else best = std::max(best, d);
      }
    }
  }
  cert.strongly_connected = strong;
  cert.diameter = strong ? best : kUnreachable;
  return cert;
}

template <typename Neighbors>
int max_distance(int n, Neighbors&& out) {
  if (n == 0) throw InputError("diameter of the empty graph is undefined");
  std::vector<int> dist;
  std::vector<Vertex> queue;
  int best = 0;
  for (int s = 0; s < n; ++s) {
    bfs_into(n, s, out, dist, queue);
    if (static_cast<int>(queue.size()) < n) return kUnreachable;
    best = std::max(best, dist[static_cast<std::size_t>(queue.back())]);
  }
  return best;
}

}  // namespace

UndirectedGraph::UndirectedGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
  if (n < 0) throw InputError("negative vertex count");
}

UndirectedGraph::UndirectedGraph(int n, std::span<const Edge> edges) : UndirectedGraph(n) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    check_vertex(n, e.a);
    check_vertex(n, e.b);
    if (e.a == e.b) throw InputError("self-loop at vertex " + std::to_string(e.a));
    edges_.push_back(make_edge(e.a, e.b));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw InputError("duplicate edge {" + std::to_string(dup->a) + "," + std::to_string(dup->b) + "}");
  }
  for (const Edge& e : edges_) {
    adj_[static_cast<std::size_t>(e.a)].push_back(e.b);
    adj_[static_cast<std::size_t>(e.b)].push_back(e.a);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

UndirectedGraph::UndirectedGraph(int n, std::initializer_list<std::pair<int, int>> edges)
    : UndirectedGraph(n, [&] {
        std::vector<Edge> list;
        for (auto [a, b] : edges) list.push_back(Edge{a, b});
        return list;
      }()) {}

bool UndirectedGraph::adjacent(Vertex a, Vertex b) const {
  if (a < 0 || a >= n_ || b < 0 || b >= n_) return false;
  auto list = neighbors(a);
  return std::binary_search(list.begin(), list.end(), b);
}

std::optional<int> UndirectedGraph::edge_index(Vertex a, Vertex b) const {
  Edge key = make_edge(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

UndirectedGraph UndirectedGraph::without_edges(std::span<const int> edge_indices) const {
  std::vector<bool> drop(edges_.size(), false);
  for (int i : edge_indices) drop[static_cast<std::size_t>(i)] = true;
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (!drop[i]) kept.push_back(edges_[i]);
  }
  return UndirectedGraph(n_, kept);
}

UndirectedGraph UndirectedGraph::with_edge(Vertex a, Vertex b) const {
  std::vector<Edge> list = edges_;
  list.push_back(make_edge(a, b));
  return UndirectedGraph(n_, list);
}

Orientation::Orientation(UndirectedGraph base, std::vector<bool> forward)
    : Orientation(std::make_shared<const UndirectedGraph>(std::move(base)), std::move(forward)) {}

Orientation::Orientation(std::shared_ptr<const UndirectedGraph> base, std::vector<bool> forward)
    : base_(std::move(base)), forward_(std::move(forward)) {
  if (forward_.size() != base_->edges().size()) {
    throw InputError("orientation has " + std::to_string(forward_.size()) + " directions for " +
                     std::to_string(base_->num_edges()) + " edges");
  }
  build_lists();
}

Orientation Orientation::from_arcs(UndirectedGraph base, std::span<const Arc> arcs) {
  std::vector<bool> forward(base.edges().size(), false);
  std::vector<bool> seen(base.edges().size(), false);
  for (const Arc& arc : arcs) {
    auto index = base.edge_index(arc.from, arc.to);
    if (!index) {
      throw InputError("arc " + std::to_string(arc.from) + "->" + std::to_string(arc.to) +
                       " is not an edge of the graph");
    }
    auto i = static_cast<std::size_t>(*index);
    if (seen[i]) {
      throw InputError("edge {" + std::to_string(base.edge(*index).a) + "," +
                       std::to_string(base.edge(*index).b) + "} oriented twice");
    }
    seen[i] = true;
    forward[i] = arc.from < arc.to;
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) {
      const Edge& e = base.edges()[i];
      throw InputError("edge {" + std::to_string(e.a) + "," + std::to_string(e.b) + "} has no direction");
    }
  }
  return Orientation(std::move(base), std::move(forward));
}

void Orientation::build_lists() {
  auto n = static_cast<std::size_t>(base_->num_vertices());
  out_.assign(n, {});
  in_.assign(n, {});
  for (int i = 0; i < base_->num_edges(); ++i) {
    Arc a = arc(i);
    out_[static_cast<std::size_t>(a.from)].push_back(a.to);
    in_[static_cast<std::size_t>(a.to)].push_back(a.from);
  }
}

Arc Orientation::arc(int edge_index) const {
  const Edge& e = base_->edge(edge_index);
  return forward(edge_index) ? Arc{e.a, e.b} : Arc{e.b, e.a};
}

std::vector<Arc> Orientation::arcs() const {
  std::vector<Arc> list;
  list.reserve(forward_.size());
  for (int i = 0; i < num_arcs(); ++i) list.push_back(arc(i));
  return list;
}

Orientation Orientation::reversed() const {
  std::vector<bool> flipped = forward_;
  flipped.flip();
  return Orientation(base_, std::move(flipped));
}

Orientation Orientation::with_flipped(int edge_index) const {
  std::vector<bool> flipped = forward_;
  flipped[static_cast<std::size_t>(edge_index)] = !flipped[static_cast<std::size_t>(edge_index)];
  return Orientation(base_, std::move(flipped));
}

bool DiameterCertificate::self_consistent() const {
  if (dist.size() != static_cast<std::size_t>(n) * n) return false;
  int best = 0;
  bool strong = true;
  for (int i = 0; i < n; ++i) {
    if (at(i, i) != 0) return false;
    for (int j = 0; j < n; ++j) {
      int d = at(i, j);
      if (d == kUnreachable) {
        strong = false;
        continue;
      }
      best = std::max(best, d);
      for (int k = 0; k < n; ++k) {
        int d2 = at(j, k);
        if (d2 != kUnreachable && at(i, k) != kUnreachable && at(i, k) > d + d2) return false;
        if (d2 != kUnreachable && at(i, k) == kUnreachable) return false;
      }
    }
  }
  return strong == strongly_connected && diameter == (strong ? best : kUnreachable);
}

std::vector<int> bfs_distances(const UndirectedGraph& g, Vertex source) {
  check_vertex(g.num_vertices(), source);
  std::vector<int> dist;
  std::vector<Vertex> queue;
  bfs_into(g.num_vertices(), source, [&](Vertex v) { return g.neighbors(v); }, dist, queue);
  return dist;
}

std::vector<int> bfs_distances(const Orientation& o, Vertex source) {
  check_vertex(o.num_vertices(), source);
  std::vector<int> dist;
  std::vector<Vertex> queue;
  bfs_into(o.num_vertices(), source, [&](Vertex v) { return o.out_neighbors(v); }, dist, queue);
  return dist;
}

DiameterCertificate diameter(const UndirectedGraph& g) {
  return all_pairs(g.num_vertices(), [&](Vertex v) { return g.neighbors(v); }, true);
}

DiameterCertificate diameter(const Orientation& o) {
  return all_pairs(o.num_vertices(), [&](Vertex v) { return o.out_neighbors(v); }, true);
}

DiameterCertificate diameter_serial(const UndirectedGraph& g) {
  return all_pairs(g.num_vertices(), [&](Vertex v) { return g.neighbors(v); }, false);
}

DiameterCertificate diameter_serial(const Orientation& o) {
  return all_pairs(o.num_vertices(), [&](Vertex v) { return o.out_neighbors(v); }, false);
}

int diameter_value(const UndirectedGraph& g) {
  return max_distance(g.num_vertices(), [&](Vertex v) { return g.neighbors(v); });
}

int diameter_value(const Orientation& o) {
  return max_distance(o.num_vertices(), [&](Vertex v) { return o.out_neighbors(v); });
}

bool is_connected(const UndirectedGraph& g) {
  if (g.num_vertices() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::find(dist.begin(), dist.end(), kUnreachable) == dist.end();
}

std::vector<Edge> bridges(const UndirectedGraph& g) {
  // Iterative DFS with low-link values; the parent edge is skipped by index
  // so that the scheme stays correct if multi-edges are ever admitted.
  int n = g.num_vertices();
  std::vector<int> order(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> found;
  int clock = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> stack;

  for (Vertex root = 0; root < n; ++root) {
    if (order[static_cast<std::size_t>(root)] != -1) continue;
    order[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = clock++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& top = stack.back();
      auto nbrs = g.neighbors(top.v);
      if (top.next < nbrs.size()) {
        Vertex w = nbrs[top.next++];
        if (w == top.parent) continue;
        auto wi = static_cast<std::size_t>(w);
        if (order[wi] == -1) {
          order[wi] = low[wi] = clock++;
          stack.push_back({w, top.v, 0});
        } else {
          low[static_cast<std::size_t>(top.v)] = std::min(low[static_cast<std::size_t>(top.v)], order[wi]);
        }
        continue;
      }
      Frame done = top;
      stack.pop_back();
      if (done.parent >= 0) {
        auto p = static_cast<std::size_t>(done.parent);
        auto c = static_cast<std::size_t>(done.v);
        low[p] = std::min(low[p], low[c]);
        if (low[c] > order[p]) found.push_back(make_edge(done.parent, done.v));
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

int min_degree(const UndirectedGraph& g) {
  if (g.num_vertices() == 0) throw InputError("minimum degree of the empty graph is undefined");
  int best = g.degree(0);
  for (Vertex v = 1; v < g.num_vertices(); ++v) best = std::min(best, g.degree(v));
  return best;
}

std::string certificate_digest(const DiameterCertificate& cert) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint32_t value) {
    for (int i = 0; i < 4; ++i) {
      h ^= (value >> (8 * i)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint32_t>(cert.n));
  for (int d : cert.dist) mix(static_cast<std::uint32_t>(d));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace oriadim
