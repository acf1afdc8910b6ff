#pragma once

#include <optional>
#include <span>
#include <vector>

#include "oriadim/graph.hpp"

namespace oriadim {

/// Host graph H with disjoint vertex sets S (anchor) and S' (attached).
///
/// Valid when S' is covered by N(S) and H[S'] has no single-vertex
/// components. The edges to orient are those of H[S'] plus E[S', S].
struct Lemma1Instance {
  UndirectedGraph host;
  std::vector<Vertex> anchor;    // S
  std::vector<Vertex> attached;  // S'
};

/// Throws InputError naming the first offending vertex.
void validate_lemma1(const UndirectedGraph& host, std::span<const Vertex> anchor, std::span<const Vertex> attached);

/// Indices (into host.edges()) of the edges the construction must orient.
std::vector<int> lemma1_edges(const UndirectedGraph& host, std::span<const Vertex> anchor,
                              std::span<const Vertex> attached);

/// Orients H[S'] and E[S', S] so that every w in S' is within two arcs of S
/// in both directions.
///
/// Each component of H[S'] gets a BFS spanning tree rooted at its smallest
/// vertex, 2-colored by depth parity (even = A, odd = B). Tree edges point
/// B -> A; A vertices send all their S-edges into S, B vertices receive all
/// of theirs from S. Non-tree edges inside a component go B -> A when
/// bichromatic, else from the lower to the higher id. Arcs come back in
/// host edge order.
std::vector<Arc> orient_lemma1(const UndirectedGraph& host, std::span<const Vertex> anchor,
                               std::span<const Vertex> attached);
std::vector<Arc> orient_lemma1(const Lemma1Instance& inst);

struct Lemma1Verdict {
  enum class Direction { FromAnchor, ToAnchor };

  bool ok = true;
  std::optional<Vertex> witness;
  Direction direction = Direction::FromAnchor;
  int distance = 0;  // the offending set distance, kUnreachable if none
};

/// Checks d(S, w) <= 2 and d(w, S) <= 2 for every w in S' using only the
/// given arcs. Throws InputError if the arcs do not orient exactly F.
Lemma1Verdict verify_lemma1(const UndirectedGraph& host, std::span<const Vertex> anchor,
                            std::span<const Vertex> attached, std::span<const Arc> arcs);
Lemma1Verdict verify_lemma1(const Lemma1Instance& inst, std::span<const Arc> arcs);

}  // namespace oriadim
