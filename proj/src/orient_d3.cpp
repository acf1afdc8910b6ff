#include "oriadim/orient_d3.hpp"

#include <algorithm>
#include <string>

#include "oriadim/errors.hpp"
#include "oriadim/lemma1.hpp"

namespace oriadim {

namespace {

using CellSet = std::uint32_t;

constexpr CellSet bit(Cell c) { return CellSet{1} << static_cast<unsigned>(c); }

constexpr CellSet kJ = bit(Cell::J1) | bit(Cell::J2) | bit(Cell::J3) | bit(Cell::J41) | bit(Cell::J42);
constexpr CellSet kX = bit(Cell::X1) | bit(Cell::X2) | bit(Cell::X3);
constexpr CellSet kY = bit(Cell::Y1) | bit(Cell::Y2) | bit(Cell::Y3);

struct RuleFamily {
  const char* name;
  CellSet from;
  CellSet to;
};

// Listing order is precedence order. y->x and Y1->X1 are not in the printed
// rule list: an x-y edge left to the rank rule would point x->y and starve
// a degree-2 x of in-arcs, and d(y, X1) <= 3 goes through Y1->X1 arcs.
constexpr RuleFamily kFamilies[] = {
    {"u->v", bit(Cell::PairU), bit(Cell::PairV)},
    {"v->y", bit(Cell::PairV), bit(Cell::HubY)},
    {"y->Y1", bit(Cell::HubY), bit(Cell::Y1)},
    {"Y1->W", bit(Cell::Y1), bit(Cell::W)},
    {"W->X1", bit(Cell::W), bit(Cell::X1)},
    {"X1->x", bit(Cell::X1), bit(Cell::HubX)},
    {"x->u", bit(Cell::HubX), bit(Cell::PairU)},
    {"y->Z", bit(Cell::HubY), bit(Cell::Z)},
    {"Z->x", bit(Cell::Z), bit(Cell::HubX)},
    {"y->x", bit(Cell::HubY), bit(Cell::HubX)},
    {"Y1->Z", bit(Cell::Y1), bit(Cell::Z)},
    {"Z->X1", bit(Cell::Z), bit(Cell::X1)},
    {"Y1->X1", bit(Cell::Y1), bit(Cell::X1)},
    {"Y1->K", bit(Cell::Y1), bit(Cell::K)},
    {"K->Z", bit(Cell::K), bit(Cell::Z)},
    {"Z->I", bit(Cell::Z), bit(Cell::I)},
    {"I->X1", bit(Cell::I), bit(Cell::X1)},
    {"K->J", bit(Cell::K), kJ},
    {"J->I", kJ, bit(Cell::I)},
    {"J->W", kJ, bit(Cell::W)},
    {"x->X2", bit(Cell::HubX), bit(Cell::X2)},
    {"X2->X1", bit(Cell::X2), bit(Cell::X1)},
    {"Y1->Y2", bit(Cell::Y1), bit(Cell::Y2)},
    {"Y2->y", bit(Cell::Y2), bit(Cell::HubY)},
    {"J1->Z", bit(Cell::J1), bit(Cell::Z)},
    {"Z->J2", bit(Cell::Z), bit(Cell::J2)},
    {"Z->J3", bit(Cell::Z), bit(Cell::J3)},
};

constexpr std::string_view kCellNames[kCellCount] = {"u",  "v",  "x", "y", "X1", "X2", "X3", "Y1",  "Y2", "Y3",
                                                      "Z",  "W",  "I", "K", "J1", "J2", "J3", "J41", "J42"};

bool valid_pair(const UndirectedGraph& g, const Degree2Pair& p) {
  const int n = g.num_vertices();
  for (Vertex w : {p.u, p.v, p.x, p.y}) {
    if (w < 0 || w >= n) return false;
  }
  return g.degree(p.u) == 2 && g.degree(p.v) == 2 && g.adjacent(p.u, p.v) && g.adjacent(p.u, p.x) &&
         g.adjacent(p.v, p.y) && p.x != p.y && p.x != p.v && p.y != p.u;
}

// Edge-by-edge orientation bookkeeping for orient_partition.
class Assigner {
 public:
  explicit Assigner(const UndirectedGraph& g) : g_(g), rule_of_(static_cast<std::size_t>(g.num_edges()), -1) {
    forward_.assign(static_cast<std::size_t>(g.num_edges()), false);
  }

  void assign(int index, Arc arc, const std::string& rule, OrientationPlan& plan) {
    auto i = static_cast<std::size_t>(index);
    if (rule_of_[i] >= 0) {
      const std::string& kept = names_[static_cast<std::size_t>(rule_of_[i])];
      if (kept != rule) plan.conflicts.push_back({g_.edge(index), kept, rule});
      return;
    }
    if (names_.empty() || names_.back() != rule) names_.push_back(rule);
    rule_of_[i] = static_cast<int>(names_.size()) - 1;
    forward_[i] = arc.from < arc.to;
    plan.rules_applied.push_back({rule, arc});
  }

  void assign_leftover(int index, Arc arc, OrientationPlan& plan) {
    auto i = static_cast<std::size_t>(index);
    rule_of_[i] = kLeftover;
    forward_[i] = arc.from < arc.to;
    plan.leftover.push_back(arc);
  }

  bool assigned(int index) const { return rule_of_[static_cast<std::size_t>(index)] != -1; }
  std::vector<bool> take() { return std::move(forward_); }

 private:
  static constexpr int kLeftover = -2;
  const UndirectedGraph& g_;
  std::vector<int> rule_of_;
  std::vector<std::string> names_;
  std::vector<bool> forward_;
};

}  // namespace

std::string_view cell_name(Cell c) { return kCellNames[static_cast<std::size_t>(c)]; }

std::string_view mode_name(OrientMode m) {
  switch (m) {
    case OrientMode::Partition:
      return "partition";
    case OrientMode::FallbackExact:
      return "fallback-exact";
    case OrientMode::FallbackHeuristic:
      return "fallback-heuristic";
  }
  return "unknown";
}

VertexPartition partition_vertices(const UndirectedGraph& g, const Degree2Pair& pair) {
  if (!valid_pair(g, pair)) throw InputError("(u,v,x,y) is not an adjacent degree-2 configuration");
  const int n = g.num_vertices();
  constexpr int kUnset = -1;
  std::vector<int> cell(static_cast<std::size_t>(n), kUnset);
  auto put = [&](Vertex w, Cell c) { cell[static_cast<std::size_t>(w)] = static_cast<int>(c); };
  auto in = [&](Vertex w, CellSet s) {
    int c = cell[static_cast<std::size_t>(w)];
    return c != kUnset && ((s >> c) & 1U) != 0;
  };
  auto touches = [&](Vertex w, CellSet s) {
    auto nbrs = g.neighbors(w);
    return std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex t) { return in(t, s); });
  };

  put(pair.u, Cell::PairU);
  put(pair.v, Cell::PairV);
  put(pair.x, Cell::HubX);
  put(pair.y, Cell::HubY);

  // X and Y are first collected into X1/Y1 and split afterwards.
  for (Vertex w : g.neighbors(pair.x)) {
    if (w == pair.u || w == pair.v || w == pair.y) continue;
    put(w, g.adjacent(w, pair.y) ? Cell::Z : Cell::X1);
  }
  for (Vertex w : g.neighbors(pair.y)) {
    if (w == pair.u || w == pair.v || w == pair.x || g.adjacent(w, pair.x)) continue;
    put(w, Cell::Y1);
  }
  const CellSet x_all = bit(Cell::X1);
  const CellSet y_all = bit(Cell::Y1);
  const CellSet z = bit(Cell::Z);

  std::vector<Vertex> rest;
  for (Vertex s = 0; s < n; ++s) {
    if (cell[static_cast<std::size_t>(s)] == kUnset) rest.push_back(s);
  }
  for (Vertex s : rest) {
    bool near_x = false;
    bool near_y = false;
    for (Vertex t : g.neighbors(s)) {
      near_x |= g.adjacent(t, pair.x);
      near_y |= g.adjacent(t, pair.y);
    }
    if (!near_x || !near_y) {
      throw StructuralError("vertex " + std::to_string(s) + " is farther than 3 from " +
                                (near_x ? "v" : "u") + "; no diameter-3 partition",
                            s);
    }
  }
  std::vector<Cell> outer(rest.size());
  for (std::size_t i = 0; i < rest.size(); ++i) {
    Vertex s = rest[i];
    bool hx = touches(s, x_all);
    bool hy = touches(s, y_all);
    bool hz = touches(s, z);
    if (hx && hy) outer[i] = Cell::W;
    else if (hx && hz) outer[i] = Cell::I;
    else if (hy && hz) outer[i] = Cell::K;
    else outer[i] = Cell::J1;  // J, split below
  }
  for (std::size_t i = 0; i < rest.size(); ++i) put(rest[i], outer[i]);

  // X/Y refinement against the unrefined sets.
  std::vector<Vertex> xs, ys;
  for (Vertex w = 0; w < n; ++w) {
    if (in(w, x_all)) xs.push_back(w);
    if (in(w, y_all)) ys.push_back(w);
  }
  std::vector<Cell> x_first(xs.size()), y_first(ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    bool one = touches(xs[i], y_all | z | bit(Cell::I) | bit(Cell::W));
    x_first[i] = one ? Cell::X1 : Cell::X3;
  }
  for (std::size_t i = 0; i < ys.size(); ++i) {
    bool one = touches(ys[i], x_all | z | bit(Cell::K) | bit(Cell::W));
    y_first[i] = one ? Cell::Y1 : Cell::Y3;
  }
  for (std::size_t i = 0; i < xs.size(); ++i) put(xs[i], x_first[i]);
  for (std::size_t i = 0; i < ys.size(); ++i) put(ys[i], y_first[i]);
  for (Vertex w : xs) {
    if (in(w, bit(Cell::X3)) && !touches(w, bit(Cell::X3))) put(w, Cell::X2);
  }
  for (Vertex w : ys) {
    if (in(w, bit(Cell::Y3)) && !touches(w, bit(Cell::Y3))) put(w, Cell::Y2);
  }
  // X2 was carved out of X3 in place; an X3 vertex whose only X3-neighbors
  // became X2 would now be isolated, but X2 vertices have no neighbor in
  // X \ X1 at all, so that cannot happen.

  // J refinement: J1 = N(K), J2 = N(I) \ J1, J3 = N(W) \ (J1 u J2).
  std::vector<Vertex> js;
  for (Vertex w = 0; w < n; ++w) {
    if (in(w, bit(Cell::J1))) js.push_back(w);
  }
  std::vector<Cell> j_cell(js.size());
  for (std::size_t i = 0; i < js.size(); ++i) {
    Vertex s = js[i];
    if (touches(s, bit(Cell::K))) j_cell[i] = Cell::J1;
    else if (touches(s, bit(Cell::I))) j_cell[i] = Cell::J2;
    else if (touches(s, bit(Cell::W))) j_cell[i] = Cell::J3;
    else {
      auto nbrs = g.neighbors(s);
      bool only_z = std::all_of(nbrs.begin(), nbrs.end(), [&](Vertex t) { return in(t, z); });
      j_cell[i] = only_z ? Cell::J41 : Cell::J42;
    }
  }
  for (std::size_t i = 0; i < js.size(); ++i) put(js[i], j_cell[i]);
  for (Vertex s : js) {
    if (in(s, bit(Cell::J42)) && !touches(s, bit(Cell::J42))) {
      throw StructuralError("vertex " + std::to_string(s) + " is a trivial component of G[J42]", s);
    }
  }

  VertexPartition p;
  p.pair = pair;
  p.cell_of.resize(static_cast<std::size_t>(n));
  for (Vertex w = 0; w < n; ++w) {
    Cell c = static_cast<Cell>(cell[static_cast<std::size_t>(w)]);
    p.cell_of[static_cast<std::size_t>(w)] = c;
    p.members[static_cast<std::size_t>(c)].push_back(w);
  }
  return p;
}

std::optional<std::string> validate_partition(const UndirectedGraph& g, const VertexPartition& p) {
  const int n = g.num_vertices();
  if (static_cast<int>(p.cell_of.size()) != n) return "partition size differs from vertex count";
  std::size_t total = 0;
  for (std::size_t c = 0; c < kCellCount; ++c) {
    total += p.members[c].size();
    for (Vertex w : p.members[c]) {
      if (w < 0 || w >= n || p.cell(w) != static_cast<Cell>(c)) {
        return "vertex " + std::to_string(w) + " listed in the wrong cell";
      }
    }
  }
  if (total != static_cast<std::size_t>(n)) return "cells do not cover every vertex exactly once";
  if (p[Cell::PairU] != std::vector<Vertex>{p.pair.u} || p[Cell::PairV] != std::vector<Vertex>{p.pair.v} ||
      p[Cell::HubX] != std::vector<Vertex>{p.pair.x} || p[Cell::HubY] != std::vector<Vertex>{p.pair.y}) {
    return "distinguished cells do not match the pair";
  }
  auto in = [&](Vertex w, CellSet s) { return ((s >> static_cast<unsigned>(p.cell(w))) & 1U) != 0; };
  auto touches = [&](Vertex w, CellSet s) {
    auto nbrs = g.neighbors(w);
    return std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex t) { return in(t, s); });
  };
  const Vertex x = p.pair.x;
  const Vertex y = p.pair.y;
  for (Vertex w = 0; w < n; ++w) {
    if (w == p.pair.u || w == p.pair.v || w == x || w == y) continue;
    bool nx = g.adjacent(w, x);
    bool ny = g.adjacent(w, y);
    bool want_x = nx && !ny;
    bool want_y = ny && !nx;
    bool want_z = nx && ny;
    if (want_x != in(w, kX) || want_y != in(w, kY) || want_z != in(w, bit(Cell::Z))) {
      return "vertex " + std::to_string(w) + " violates the X/Y/Z definition";
    }
    if (in(w, bit(Cell::W)) && !(touches(w, kX) && touches(w, kY))) {
      return "W vertex " + std::to_string(w) + " lacks an X or Y neighbor";
    }
    if (in(w, bit(Cell::I)) && !(touches(w, kX) && touches(w, bit(Cell::Z)))) {
      return "I vertex " + std::to_string(w) + " lacks an X or Z neighbor";
    }
    if (in(w, bit(Cell::K)) && !(touches(w, kY) && touches(w, bit(Cell::Z)))) {
      return "K vertex " + std::to_string(w) + " lacks a Y or Z neighbor";
    }
    if (in(w, kX)) {
      bool one = touches(w, kY | bit(Cell::Z) | bit(Cell::I) | bit(Cell::W));
      if (one != in(w, bit(Cell::X1))) return "vertex " + std::to_string(w) + " violates the X1 definition";
      if (in(w, bit(Cell::X2)) && touches(w, bit(Cell::X2) | bit(Cell::X3))) {
        return "X2 vertex " + std::to_string(w) + " is not isolated in G[X \\ X1]";
      }
      if (in(w, bit(Cell::X3)) && !touches(w, bit(Cell::X3))) {
        return "X3 vertex " + std::to_string(w) + " is a trivial component of G[X3]";
      }
    }
    if (in(w, kY)) {
      bool one = touches(w, kX | bit(Cell::Z) | bit(Cell::K) | bit(Cell::W));
      if (one != in(w, bit(Cell::Y1))) return "vertex " + std::to_string(w) + " violates the Y1 definition";
      if (in(w, bit(Cell::Y2)) && touches(w, bit(Cell::Y2) | bit(Cell::Y3))) {
        return "Y2 vertex " + std::to_string(w) + " is not isolated in G[Y \\ Y1]";
      }
      if (in(w, bit(Cell::Y3)) && !touches(w, bit(Cell::Y3))) {
        return "Y3 vertex " + std::to_string(w) + " is a trivial component of G[Y3]";
      }
    }
    if (in(w, kJ)) {
      if (touches(w, kX | kY)) return "J vertex " + std::to_string(w) + " touches X or Y";
      Cell want = touches(w, bit(Cell::K))   ? Cell::J1
                  : touches(w, bit(Cell::I)) ? Cell::J2
                  : touches(w, bit(Cell::W)) ? Cell::J3
                  : [&] {
                      auto nbrs = g.neighbors(w);
                      return std::all_of(nbrs.begin(), nbrs.end(), [&](Vertex t) { return in(t, bit(Cell::Z)); })
                                 ? Cell::J41
                                 : Cell::J42;
                    }();
      if (want != p.cell(w)) return "J vertex " + std::to_string(w) + " is in the wrong J cell";
      if (want == Cell::J42 && !touches(w, bit(Cell::J42))) {
        return "J42 vertex " + std::to_string(w) + " is a trivial component of G[J42]";
      }
    }
  }
  return std::nullopt;
}

OrientResult orient_partition(const UndirectedGraph& g, const VertexPartition& p) {
  OrientationPlan plan;
  plan.mode = OrientMode::Partition;
  plan.partition = p;
  Assigner assigner(g);
  auto cell_in = [&](Vertex w, CellSet s) { return ((s >> static_cast<unsigned>(p.cell(w))) & 1U) != 0; };

  for (const RuleFamily& family : kFamilies) {
    for (int i = 0; i < g.num_edges(); ++i) {
      const Edge& e = g.edge(i);
      if (cell_in(e.a, family.from) && cell_in(e.b, family.to)) {
        assigner.assign(i, {e.a, e.b}, family.name, plan);
      } else if (cell_in(e.b, family.from) && cell_in(e.a, family.to)) {
        assigner.assign(i, {e.b, e.a}, family.name, plan);
      }
    }
  }

  // One arc out of each J41 vertex, all others in.
  for (Vertex s : p[Cell::J41]) {
    bool first = true;
    for (Vertex t : g.neighbors(s)) {
      if (p.cell(t) != Cell::Z) continue;
      Arc arc = first ? Arc{s, t} : Arc{t, s};
      assigner.assign(*g.edge_index(s, t), arc, "J41<->Z", plan);
      first = false;
    }
  }

  auto apply_lemma1 = [&](std::vector<Vertex> anchor, const std::vector<Vertex>& attached, const std::string& name) {
    if (attached.empty()) return;
    for (const Arc& arc : orient_lemma1(g, anchor, attached)) {
      assigner.assign(*g.edge_index(arc.from, arc.to), arc, name, plan);
    }
  };
  apply_lemma1(p[Cell::Z], p[Cell::J42], "lemma1(Z,J42)");
  apply_lemma1({p.pair.x}, p[Cell::X3], "lemma1(x,X3)");
  apply_lemma1({p.pair.y}, p[Cell::Y3], "lemma1(y,Y3)");

  for (int i = 0; i < g.num_edges(); ++i) {
    if (assigner.assigned(i)) continue;
    const Edge& e = g.edge(i);
    auto ra = static_cast<int>(p.cell(e.a));
    auto rb = static_cast<int>(p.cell(e.b));
    bool a_first = ra != rb ? ra < rb : e.a < e.b;
    assigner.assign_leftover(i, a_first ? Arc{e.a, e.b} : Arc{e.b, e.a}, plan);
  }
  return {Orientation(g, assigner.take()), std::move(plan)};
}

OrientResult orient_d3(const UndirectedGraph& g, const OrientOptions& opts) {
  const int n = g.num_vertices();
  if (n == 0) throw InputError("graph has no vertices");
  if (!is_connected(g)) throw InputError("graph is disconnected");
  auto cut = bridges(g);
  if (!cut.empty()) throw BridgeError(cut.front().a, cut.front().b);

  std::string reason;
  auto pair = find_adjacent_degree2_pair(g);
  if (n < 5) {
    reason = "fewer than 5 vertices";
  } else if (!pair) {
    reason = "no adjacent degree-2 pair with distinct outer neighbors";
  } else if (diameter_value(g) > 3) {
    reason = "undirected diameter exceeds 3";
  } else {
    try {
      VertexPartition partition = partition_vertices(g, *pair);
      OrientResult result = orient_partition(g, partition);
      if (diameter_value(result.orientation) == kUnreachable) {
        throw StructuralError("partition orientation is not strongly connected");
      }
      return result;
    } catch (const StructuralError& e) {
      if (std::string_view(e.what()) == "partition orientation is not strongly connected") throw;
      reason = e.what();
    }
  }

  OrientResult result;
  result.plan.fallback_reason = reason;
  const int m = g.num_edges();
  bool exact = m <= std::min(opts.search.edge_cap, kExhaustiveEdgeCeiling) &&
               (n <= opts.exact_max_vertices || m <= opts.exact_max_edges);
  if (exact) {
    ExactResult found = oriented_diameter_exact(g, opts.search);
    result.orientation = *found.witness;
    result.plan.mode = OrientMode::FallbackExact;
    result.plan.search_status = found.status;
    return result;
  }

  result.plan.mode = OrientMode::FallbackHeuristic;
  SearchConfig climb = opts.search;
  climb.target.reset();
  std::optional<Orientation> best;
  std::pair<int, long> best_value{kUnreachable, 0};
  for (int r = 0; r < std::max(opts.restarts, 1); ++r) {
    Orientation start = r == 0 ? robbins_orient(g) : robbins_orient(g, opts.seed + static_cast<std::uint64_t>(r));
    Orientation candidate = improve_orientation(g, start, climb);
    DiameterCertificate cert = diameter_serial(candidate);
    long total = 0;
    for (int d : cert.dist) total += d;
    std::pair<int, long> value{cert.diameter, total};
    if (!best || value < best_value) {
      best = std::move(candidate);
      best_value = value;
    }
  }
  result.orientation = std::move(*best);
  return result;
}

DiameterCertificate verify_theorem1(const UndirectedGraph& g, const Orientation& o) {
  if (!(o.base() == g)) throw InputError("orientation does not orient exactly the edges of the graph");
  return diameter(o);
}

ObservationReport check_observations(const UndirectedGraph& g, const VertexPartition& p, const Orientation& o) {
  if (!(o.base() == g)) throw InputError("orientation does not orient exactly the edges of the graph");
  ObservationReport report;
  auto fail = [&](std::string check, Vertex w, int distance, int bound) {
    report.ok = false;
    report.failures.push_back({std::move(check), w, distance, bound});
  };
  auto has_neighbor_in = [&](Vertex w, Cell c) {
    auto nbrs = g.neighbors(w);
    return std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex t) { return p.cell(t) == c; });
  };

  for (Vertex w : p[Cell::X2]) {
    if (!has_neighbor_in(w, Cell::X1)) fail("X2 vertex has an X1 neighbor", w, 0, 0);
  }
  for (Vertex w : p[Cell::Y2]) {
    if (!has_neighbor_in(w, Cell::Y1)) fail("Y2 vertex has a Y1 neighbor", w, 0, 0);
  }

  std::vector<int> from_y = bfs_distances(o, p.pair.y);
  std::vector<int> to_x = bfs_distances(o.reversed(), p.pair.x);
  for (Vertex w : p[Cell::X1]) {
    int d = from_y[static_cast<std::size_t>(w)];
    if (d > 3) fail("d(y, X1) <= 3", w, d, 3);
  }
  for (Vertex w : p[Cell::Y1]) {
    int d = to_x[static_cast<std::size_t>(w)];
    if (d > 3) fail("d(Y1, x) <= 3", w, d, 3);
  }
  if (!p.empty(Cell::Z)) {
    for (Cell c : {Cell::X2, Cell::X3}) {
      for (Vertex w : p[c]) {
        int d = from_y[static_cast<std::size_t>(w)];
        if (d > 4) fail("d(y, X2 u X3) <= 4", w, d, 4);
      }
    }
    for (Cell c : {Cell::Y2, Cell::Y3}) {
      for (Vertex w : p[c]) {
        int d = to_x[static_cast<std::size_t>(w)];
        if (d > 4) fail("d(Y2 u Y3, x) <= 4", w, d, 4);
      }
    }
  } else {
    for (Cell c : {Cell::I, Cell::K, Cell::J1, Cell::J2, Cell::J3, Cell::J41, Cell::J42}) {
      if (!p.empty(c)) fail("Z empty implies I, J, K empty", p[c].front(), 0, 0);
    }
  }
  return report;
}

}  // namespace oriadim
