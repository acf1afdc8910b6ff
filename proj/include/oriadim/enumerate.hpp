#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "oriadim/graph.hpp"

namespace oriadim {

// Isomorphism-free small-graph generation.

inline constexpr int kCanonicalMaxVertices = 16;

/// Canonical key: two graphs get the same key iff they are isomorphic.
/// Individualization-refinement with twin pruning; n <= 16.
std::string canonical_key(const UndirectedGraph& g);

/// The graph relabeled into its canonical labeling.
UndirectedGraph canonical_form(const UndirectedGraph& g);

struct EnumerationResult {
  std::vector<UndirectedGraph> graphs;  // canonical forms, sorted by key
  bool complete = true;                 // false when the budget cut generation short
  std::size_t candidates = 0;           // canonicalizations performed
};

/// One representative per isomorphism class of n-vertex graphs with at most
/// max_edges edges, built by vertex addition. budget bounds the total number
/// of canonicalizations (0 = unlimited).
EnumerationResult enumerate_graphs(int n, int max_edges, std::size_t budget = 0);

/// Single-threaded reference for enumerate_graphs.
EnumerationResult enumerate_graphs_serial(int n, int max_edges, std::size_t budget = 0);

}  // namespace oriadim
