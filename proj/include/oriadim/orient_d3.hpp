#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oriadim/class_check.hpp"
#include "oriadim/exact_search.hpp"
#include "oriadim/graph.hpp"

namespace oriadim {

/// Cells of the hub partition, in rank order. The first four hold the single
/// distinguished vertices: the degree-2 pair u, v and their hubs x (neighbor
/// of u) and y (neighbor of v).
enum class Cell : std::uint8_t {
  PairU,
  PairV,
  HubX,
  HubY,
  X1,
  X2,
  X3,
  Y1,
  Y2,
  Y3,
  Z,
  W,
  I,
  K,
  J1,
  J2,
  J3,
  J41,
  J42,
};

inline constexpr std::size_t kCellCount = 19;

std::string_view cell_name(Cell c);

/// Vertex partition around an adjacent degree-2 pair.
///
/// X, Y, Z split N(x) and N(y) by membership in the other hub's
/// neighborhood; W, I, K collect the remaining vertices by which of X, Y, Z
/// they touch (checked in that order); J is the rest. X, Y and J are
/// refined further by their adjacency to the other cells.
struct VertexPartition {
  Degree2Pair pair;
  std::vector<Cell> cell_of;  // per vertex
  std::array<std::vector<Vertex>, kCellCount> members;

  const std::vector<Vertex>& operator[](Cell c) const { return members[static_cast<std::size_t>(c)]; }
  Cell cell(Vertex v) const { return cell_of[static_cast<std::size_t>(v)]; }
  bool empty(Cell c) const { return (*this)[c].empty(); }
};

/// Throws StructuralError naming the vertex when a vertex outside
/// A = X u Y u Z u {u,v,x,y} misses N(x) or N(y) (no diameter-3 path to the
/// pair), or when H[J42] has a single-vertex component. Throws InputError if
/// pair is not a valid adjacent degree-2 configuration of g.
VertexPartition partition_vertices(const UndirectedGraph& g, const Degree2Pair& pair);

/// Checks the partition invariants (totality, set definitions, no trivial
/// components in G[X3], G[Y3], G[J42]); returns the first violation.
std::optional<std::string> validate_partition(const UndirectedGraph& g, const VertexPartition& p);

enum class OrientMode { Partition, FallbackExact, FallbackHeuristic };

std::string_view mode_name(OrientMode m);

struct RuleApplication {
  std::string rule;
  Arc arc;
};

/// An edge matched by a later rule after an earlier one already fixed it.
struct RuleConflict {
  Edge edge;
  std::string kept_rule;
  std::string ignored_rule;
};

struct OrientationPlan {
  OrientMode mode = OrientMode::Partition;
  std::optional<VertexPartition> partition;
  std::vector<RuleApplication> rules_applied;  // application order
  std::vector<Arc> leftover;                   // edges no rule names
  std::vector<RuleConflict> conflicts;
  std::string fallback_reason;
  /// Fallback searches only.
  std::optional<SearchStatus> search_status;
};

struct OrientOptions {
  std::uint64_t seed = 1;
  /// Exact fallback applies when n <= exact_max_vertices or m <= exact_max_edges.
  int exact_max_vertices = 10;
  int exact_max_edges = 20;
  SearchConfig search{kExhaustiveEdgeCeiling, 2'000'000, std::nullopt};
  /// Seeded Robbins restarts for the heuristic fallback.
  int restarts = 8;
};

struct OrientResult {
  Orientation orientation;
  OrientationPlan plan;
};

/// Applies the partition rules to an already computed partition. Every edge
/// of g is oriented exactly once; see orient_d3 for the rule list.
OrientResult orient_partition(const UndirectedGraph& g, const VertexPartition& p);

/// Orients a bridgeless graph.
///
/// With an adjacent degree-2 pair, undirected diameter <= 3 and a valid
/// partition, edges follow these families (first match wins):
///   u->v->y->Y1->W->X1->x->u,  y->Z->x,  y->x,  Y1->Z->X1,  Y1->X1,  Y1->K->Z,
///   Z->I->X1,  K->J->I,  J->W,  x->X2->X1,  Y1->Y2->y,  J1->Z,  Z->J2,
///   Z->J3,  each J41 vertex sends one arc (to its smallest Z neighbor) and
///   receives the rest,  orient_lemma1 on (Z, J42), ({x}, X3), ({y}, Y3);
/// remaining edges point from the lower-ranked cell (ties: lower id).
/// Otherwise it falls back to exact search on small graphs and to seeded
/// Robbins restarts plus improve_orientation on larger ones.
///
/// Throws BridgeError if g has a bridge, InputError if g is disconnected.
OrientResult orient_d3(const UndirectedGraph& g, const OrientOptions& opts = {});

/// Full distance certificate of o; throws InputError if o is not an
/// orientation of g.
DiameterCertificate verify_theorem1(const UndirectedGraph& g, const Orientation& o);

struct ObservationFailure {
  std::string check;
  Vertex witness = -1;
  int distance = 0;
  int bound = 0;
};

struct ObservationReport {
  bool ok = true;
  std::vector<ObservationFailure> failures;
};

/// Distance checks on a partition-mode orientation:
///   every X2 vertex has an X1 neighbor, every Y2 vertex a Y1 neighbor;
///   d(y, s) <= 3 for s in X1 and d(s, x) <= 3 for s in Y1;
///   when Z is nonempty, d(y, s) <= 4 on X2 u X3 and d(s, x) <= 4 on Y2 u Y3;
///   Z empty implies I, J, K empty.
ObservationReport check_observations(const UndirectedGraph& g, const VertexPartition& p, const Orientation& o);

}  // namespace oriadim
