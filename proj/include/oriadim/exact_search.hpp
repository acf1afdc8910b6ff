#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "oriadim/graph.hpp"

namespace oriadim {

inline constexpr int kExhaustiveEdgeCeiling = 30;

struct SearchConfig {
  /// Largest edge count accepted by oriented_diameter_exact (<= 30).
  int edge_cap = kExhaustiveEdgeCeiling;
  /// Branch-and-bound nodes before giving up (0 = unlimited). Also bounds the
  /// number of candidate reversals tried by improve_orientation.
  std::uint64_t node_budget = 0;
  /// Stop as soon as an orientation with diameter <= target is found.
  std::optional<int> target;
};

enum class SearchStatus {
  Optimal,          // proven minimum
  TargetReached,    // stopped early at or below cfg.target
  BudgetExhausted,  // best found, not proven optimal
};

struct ExactResult {
  int diameter = kUnreachable;
  std::optional<Orientation> witness;
  SearchStatus status = SearchStatus::Optimal;
  std::uint64_t nodes = 0;

  bool proven_optimal() const { return status == SearchStatus::Optimal; }
};

/// DFS-tree strong orientation: tree arcs point away from the root, back
/// edges point to the ancestor. Throws BridgeError naming the first bridge,
/// InputError if g is disconnected.
Orientation robbins_orient(const UndirectedGraph& g);

/// Same construction with a seeded root and neighbor order.
Orientation robbins_orient(const UndirectedGraph& g, std::uint64_t seed);

/// Minimum diameter over all orientations of g (n <= 64).
///
/// Edges are branched in order of decreasing endpoint-degree sum; the first
/// edge's direction is fixed since reversing every arc preserves the
/// diameter. A node is pruned when the mixed graph (fixed arcs one way, free
/// edges both ways) already has diameter >= the incumbent. Subtrees run in
/// parallel with a shared monotone bound. The witness is deterministic: it
/// comes from a single-threaded replay that stops at the first orientation
/// reaching the proven value.
ExactResult oriented_diameter_exact(const UndirectedGraph& g, const SearchConfig& cfg = {});

/// Single-threaded branch-and-bound with the same pruning.
ExactResult oriented_diameter_exact_serial(const UndirectedGraph& g, const SearchConfig& cfg = {});

/// Accepts single-arc reversals that keep the orientation strong and lower
/// (diameter, total distance) lexicographically; edges scanned in index
/// order until a full pass changes nothing. Diameter never increases.
Orientation improve_orientation(const UndirectedGraph& g, const Orientation& o, const SearchConfig& cfg = {});

inline constexpr int kWitnessExhaustiveMaxVertices = 9;

struct WitnessSearchOptions {
  int n_max = 7;
  int diameter_target = 9;
  /// Undirected diameter bound of the searched family.
  int graph_diameter = 3;
  /// Random graphs per vertex count above the exhaustive cap.
  int samples = 200;
  /// Compute every candidate's exact oriented diameter instead of stopping
  /// once an orientation below the target turns up.
  bool exact_values = false;
  std::uint64_t seed = 1;
  SearchConfig search;
};

struct WitnessRecord {
  UndirectedGraph graph;
  int oriented_diameter = 0;
  bool proven = true;
};

struct WitnessSearchResult {
  std::vector<WitnessRecord> witnesses;  // oriented diameter >= target
  bool exhaustive = true;                // every vertex count fully enumerated
  bool all_proven = true;                // every exact search finished
  std::size_t graphs_examined = 0;       // isomorphism classes (or samples) looked at
  std::size_t candidates = 0;            // bridgeless, connected, diameter within bound
  /// Over all candidates. Exact when exact_values is set; otherwise an upper
  /// bound for non-witnesses (the first orientation found below the target).
  int max_oriented_diameter = 0;
  std::vector<std::size_t> candidates_by_n;  // index = vertex count
};

/// Searches bridgeless graphs of diameter <= graph_diameter on 3..n_max
/// vertices for oriented diameter >= diameter_target. Exhaustive and
/// isomorph-free up to 9 vertices, seeded sampling above.
WitnessSearchResult search_witness(const WitnessSearchOptions& opts);

}  // namespace oriadim
