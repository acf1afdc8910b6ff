#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "oriadim/graph.hpp"

namespace oriadim {

/// Parameters (k, lambda, s) of the class of graphs with diameter at most k
/// whose diameter stays at most lambda after deleting any s or fewer edges.
struct ClassParams {
  int k = 3;
  int lambda = 4;
  int s = 1;

  /// Throws InputError unless k >= 1, lambda > k and s >= 0.
  void validate() const;
};

struct ClassReport {
  bool member = false;
  /// Edge set of size <= s whose deletion pushes the diameter above lambda.
  std::optional<std::vector<Edge>> violating_deletion;
  /// Ordered pair at distance > k in the graph itself.
  std::optional<std::pair<Vertex, Vertex>> violating_pair;
  /// Distance realized by the witness (the pair's distance, or the diameter
  /// after the deletion); kUnreachable for disconnections.
  int witness_distance = 0;
  std::optional<int> min_edge_count;
};

/// Exhaustive membership test. For s = 1 the deletions are scanned in
/// parallel; the witness is always the first violating subset in
/// (size, lexicographic edge index) order.
ClassReport in_class(const UndirectedGraph& g, const ClassParams& p);
ClassReport in_class_serial(const UndirectedGraph& g, const ClassParams& p);

inline constexpr int kMinEdgesMaxVertices = 10;

struct MinEdgesResult {
  /// Exact minimum when exact, otherwise a proven lower bound.
  int edges = 0;
  bool exact = false;
  /// False when no n-vertex graph belongs to the class at all.
  bool found = true;
  std::optional<UndirectedGraph> witness;
  std::size_t graphs_examined = 0;
};

/// Smallest edge count among n-vertex members of the class, by isomorph-free
/// enumeration with an increasing edge cap. budget bounds canonicalizations
/// per cap (0 = unlimited). Throws CapabilityError for n > 10.
MinEdgesResult min_edges_in_class(int n, const ClassParams& p, std::size_t budget = 0);

/// Two adjacent degree-2 vertices u, v with other neighbors x (of u) and
/// y (of v), x != y.
struct Degree2Pair {
  Vertex u = 0;
  Vertex v = 0;
  Vertex x = 0;
  Vertex y = 0;

  friend bool operator==(const Degree2Pair&, const Degree2Pair&) = default;
};

/// Lexicographically smallest (u, v) over ordered pairs; nullopt if none.
std::optional<Degree2Pair> find_adjacent_degree2_pair(const UndirectedGraph& g);

/// Minimum degree is at least s + 1, which every class member must satisfy.
bool check_observation1(const UndirectedGraph& g, const ClassParams& p);

}  // namespace oriadim
