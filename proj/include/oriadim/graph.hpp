#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace oriadim {

using Vertex = int;

// Distance sentinel for "no path". Never produced by arithmetic; compare, don't add.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Unordered edge stored with a < b.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Arc {
  Vertex from = 0;
  Vertex to = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

inline Edge make_edge(Vertex p, Vertex q) { return p < q ? Edge{p, q} : Edge{q, p}; }

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
///
/// Edges are kept sorted lexicographically, so an edge's index is a stable
/// identifier that orientations and searches use to address it.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(int n);

  /// Throws InputError on self-loops, duplicate pairs, or out-of-range ids.
  UndirectedGraph(int n, std::span<const Edge> edges);
  UndirectedGraph(int n, std::initializer_list<std::pair<int, int>> edges);

  int num_vertices() const noexcept { return n_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int index) const { return edges_[static_cast<std::size_t>(index)]; }

  /// Sorted neighbor list.
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(Vertex a, Vertex b) const;

  /// Index of {a,b} in edges(), if present.
  std::optional<int> edge_index(Vertex a, Vertex b) const;

  UndirectedGraph without_edges(std::span<const int> edge_indices) const;
  UndirectedGraph with_edge(Vertex a, Vertex b) const;

  friend bool operator==(const UndirectedGraph& l, const UndirectedGraph& r) {
    return l.n_ == r.n_ && l.edges_ == r.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// One direction for every edge of a base graph.
///
/// forward[i] means edges()[i].a -> edges()[i].b. The base graph is shared
/// between copies, so flipping an arc is O(m) rather than O(n + m) plus a
/// graph copy.
class Orientation {
 public:
  Orientation() = default;
  Orientation(UndirectedGraph base, std::vector<bool> forward);
  Orientation(std::shared_ptr<const UndirectedGraph> base, std::vector<bool> forward);

  /// Throws InputError unless the arcs cover every edge of base exactly once.
  static Orientation from_arcs(UndirectedGraph base, std::span<const Arc> arcs);

  const UndirectedGraph& base() const noexcept { return *base_; }
  const std::shared_ptr<const UndirectedGraph>& shared_base() const noexcept { return base_; }
  int num_vertices() const noexcept { return base_->num_vertices(); }
  int num_arcs() const noexcept { return base_->num_edges(); }

  bool forward(int edge_index) const { return forward_[static_cast<std::size_t>(edge_index)]; }
  const std::vector<bool>& directions() const noexcept { return forward_; }
  Arc arc(int edge_index) const;
  /// Arcs in edge order.
  std::vector<Arc> arcs() const;

  std::span<const Vertex> out_neighbors(Vertex v) const { return out_[static_cast<std::size_t>(v)]; }
  std::span<const Vertex> in_neighbors(Vertex v) const { return in_[static_cast<std::size_t>(v)]; }

  Orientation reversed() const;
  Orientation with_flipped(int edge_index) const;

  friend bool operator==(const Orientation& l, const Orientation& r) {
    return l.base() == r.base() && l.forward_ == r.forward_;
  }

 private:
  void build_lists();

  std::shared_ptr<const UndirectedGraph> base_ = std::make_shared<const UndirectedGraph>();
  std::vector<bool> forward_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

/// All-pairs distance matrix plus its maximum.
struct DiameterCertificate {
  int n = 0;
  std::vector<int> dist;  // row-major, dist[i * n + j] = d(i, j)
  int diameter = 0;       // kUnreachable when some pair has no path
  bool strongly_connected = true;

  int at(Vertex from, Vertex to) const { return dist[static_cast<std::size_t>(from) * n + to]; }

  /// Re-checks the certificate's own invariants (zero diagonal, triangle
  /// inequality over finite entries, diameter = max entry).
  bool self_consistent() const;
};

std::vector<int> bfs_distances(const UndirectedGraph& g, Vertex source);
std::vector<int> bfs_distances(const Orientation& o, Vertex source);

/// OpenMP over sources. Throws InputError when n = 0.
DiameterCertificate diameter(const UndirectedGraph& g);
DiameterCertificate diameter(const Orientation& o);

/// Single-threaded reference kept for cross-checking the parallel kernel.
DiameterCertificate diameter_serial(const UndirectedGraph& g);
DiameterCertificate diameter_serial(const Orientation& o);

/// Max distance only, no matrix. Stops early once an unreachable pair is seen.
int diameter_value(const UndirectedGraph& g);
int diameter_value(const Orientation& o);

bool is_connected(const UndirectedGraph& g);

/// Edges whose removal increases the number of connected components, sorted.
std::vector<Edge> bridges(const UndirectedGraph& g);

int min_degree(const UndirectedGraph& g);

/// 64-bit FNV-1a over the distance matrix, as 16 hex digits.
std::string certificate_digest(const DiameterCertificate& cert);

}  // namespace oriadim
