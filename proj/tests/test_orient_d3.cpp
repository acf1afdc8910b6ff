#include <algorithm>
#include <map>

#include "doctest.h"
#include "oriadim/class_check.hpp"
#include "oriadim/errors.hpp"
#include "oriadim/generators.hpp"
#include "oriadim/orient_d3.hpp"
#include "support/fixtures.hpp"

using namespace oriadim;
using namespace fixtures;

namespace {

std::vector<Vertex> cell(const VertexPartition& p, Cell c) { return p[c]; }

// Rule that oriented edge {a,b}, or "" for leftovers.
std::string rule_of(const OrientationPlan& plan, Vertex a, Vertex b) {
  for (const RuleApplication& r : plan.rules_applied) {
    if (make_edge(r.arc.from, r.arc.to) == make_edge(a, b)) return r.rule;
  }
  return "";
}

}  // namespace

TEST_CASE("C5 partition and orientation") {
  Degree2Pair pair{0, 1, 4, 2};
  VertexPartition p = partition_vertices(c5(), pair);
  CHECK(cell(p, Cell::Z) == std::vector<Vertex>{3});
  for (Cell c : {Cell::X1, Cell::X2, Cell::X3, Cell::Y1, Cell::Y2, Cell::Y3, Cell::W, Cell::I, Cell::K, Cell::J1,
                 Cell::J2, Cell::J3, Cell::J41, Cell::J42}) {
    CHECK(p.empty(c));
  }
  CHECK_FALSE(validate_partition(c5(), p));

  OrientResult r = orient_d3(c5());
  CHECK(r.plan.mode == OrientMode::Partition);
  CHECK(r.orientation == directed_cycle(5));
  CHECK(verify_theorem1(c5(), r.orientation).diameter == 4);
  CHECK(check_observations(c5(), *r.plan.partition, r.orientation).ok);
  CHECK(r.plan.leftover.empty());
  CHECK(r.plan.conflicts.empty());
}

TEST_CASE("W membership") {
  // C5 (u=0, v=1, y=2, z=3, x=4) plus x'=5 on x, y'=6 on y, and w=7 on both.
  UndirectedGraph g(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {4, 5}, {2, 6}, {5, 7}, {6, 7}});
  VertexPartition p = partition_vertices(g, {0, 1, 4, 2});
  CHECK(p.cell(7) == Cell::W);
  CHECK(p.cell(5) == Cell::X1);
  CHECK(p.cell(6) == Cell::Y1);
  CHECK_FALSE(validate_partition(g, p));
}

TEST_CASE("unassignable vertex is a structural error") {
  // Vertex 6 only touches X = {5, 7}: no neighbor in N(y).
  UndirectedGraph g(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {4, 5}, {4, 7}, {5, 6}, {6, 7}});
  try {
    partition_vertices(g, {0, 1, 4, 2});
    FAIL("expected a structural error");
  } catch (const StructuralError& e) {
    CHECK(e.vertex() == 6);
  }
  CHECK_THROWS_AS(partition_vertices(g, {0, 2, 4, 1}), InputError);
}

TEST_CASE("fallbacks") {
  OrientResult k4r = orient_d3(k4());
  CHECK(k4r.plan.mode == OrientMode::FallbackExact);
  CHECK(verify_theorem1(k4(), k4r.orientation).diameter == 3);
  CHECK_FALSE(k4r.plan.fallback_reason.empty());

  OrientResult c3r = orient_d3(c3());
  CHECK(c3r.plan.mode == OrientMode::FallbackExact);
  CHECK(diameter(c3r.orientation).diameter == 2);

  // Petersen: 3-regular, no degree-2 pair, 15 edges.
  UndirectedGraph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
  CHECK(orient_d3(petersen).plan.mode == OrientMode::FallbackExact);

  Rng rng(43);
  UndirectedGraph big = random_bridgeless(30, 2, 10, rng);
  OrientResult h = orient_d3(big);
  CHECK(h.plan.mode == OrientMode::FallbackHeuristic);
  CHECK(diameter(h.orientation).strongly_connected);
  CHECK(h.orientation == orient_d3(big).orientation);

  // A long cycle has the pair but diameter above 3.
  OrientResult c9 = orient_d3(cycle_graph(9));
  CHECK(c9.plan.mode != OrientMode::Partition);
  CHECK(diameter(c9.orientation).diameter == 8);
}

TEST_CASE("bridges and disconnection are rejected") {
  CHECK_THROWS_AS(orient_d3(p3()), BridgeError);
  CHECK_THROWS_WITH(orient_d3(bowtie_bridge()), "bridge {2,3}");
  CHECK_THROWS_AS(orient_d3(UndirectedGraph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})), InputError);
  CHECK_THROWS_AS(orient_d3(UndirectedGraph(0)), InputError);
}

TEST_CASE("x-y edge is oriented y to x") {
  // x = 2 has degree 2; pointing x -> y would leave x without in-arcs.
  UndirectedGraph g(6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
  REQUIRE(in_class(g, {3, 4, 1}).member);
  OrientResult r = orient_d3(g);
  REQUIRE(r.plan.mode == OrientMode::Partition);
  CHECK(rule_of(r.plan, 2, 3) == "y->x");
  CHECK(r.orientation.arc(*g.edge_index(2, 3)) == Arc{3, 2});
  CHECK(diameter(r.orientation).strongly_connected);
}

TEST_CASE("X1 reached from Y1") {
  // X1 = {6} whose only non-hub neighbor is 5 in Y1.
  UndirectedGraph g(7, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {2, 6}, {3, 4}, {3, 5}, {5, 6}});
  REQUIRE(in_class(g, {3, 4, 1}).member);
  OrientResult r = orient_d3(g);
  REQUIRE(r.plan.mode == OrientMode::Partition);
  CHECK(r.plan.partition->cell(6) == Cell::X1);
  CHECK(r.plan.partition->cell(5) == Cell::Y1);
  CHECK(rule_of(r.plan, 5, 6) == "Y1->X1");
  ObservationReport obs = check_observations(g, *r.plan.partition, r.orientation);
  CHECK(obs.ok);
  CHECK(diameter(r.orientation).diameter <= 9);
}

TEST_CASE("generated instances: partition invariants and the bound") {
  std::map<OrientMode, int> modes;
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    int n = 6 + static_cast<int>(seed % 30);
    UndirectedGraph g = min_g_instance(n, seed);
    CAPTURE(seed);
    REQUIRE(in_class(g, {3, 4, 1}).member);
    OrientResult r = orient_d3(g);
    ++modes[r.plan.mode];
    DiameterCertificate cert = verify_theorem1(g, r.orientation);
    REQUIRE(cert.strongly_connected);
    CHECK(cert.diameter <= 9);
    if (r.plan.mode != OrientMode::Partition) continue;

    const VertexPartition& p = *r.plan.partition;
    CHECK_FALSE(validate_partition(g, p));
    CHECK(r.plan.conflicts.empty());
    CHECK(r.plan.rules_applied.size() + r.plan.leftover.size() == static_cast<std::size_t>(g.num_edges()));
    std::vector<Edge> seen;
    for (const RuleApplication& a : r.plan.rules_applied) seen.push_back(make_edge(a.arc.from, a.arc.to));
    for (const Arc& a : r.plan.leftover) seen.push_back(make_edge(a.from, a.to));
    std::sort(seen.begin(), seen.end());
    CHECK(seen == g.edges());
    for (const RuleApplication& a : r.plan.rules_applied) CHECK(r.orientation.arc(*g.edge_index(a.arc.from, a.arc.to)) == a.arc);

    // Each J41 vertex: one arc into Z, the rest out of Z.
    for (Vertex s : p[Cell::J41]) {
      int out = 0;
      for (Vertex t : r.orientation.out_neighbors(s)) out += p.cell(t) == Cell::Z ? 1 : 0;
      CHECK(out == 1);
      CHECK(static_cast<int>(r.orientation.in_neighbors(s).size()) == g.degree(s) - 1);
    }
    ObservationReport obs = check_observations(g, p, r.orientation);
    CHECK(obs.ok);
    if (p.empty(Cell::Z)) {
      for (Cell c : {Cell::I, Cell::K, Cell::J1, Cell::J2, Cell::J3, Cell::J41, Cell::J42}) CHECK(p.empty(c));
    }
  }
  CHECK(modes[OrientMode::Partition] >= 100);
}

TEST_CASE("single-arc reversals are caught") {
  int flips = 0;
  int caught_by_observations = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    UndirectedGraph g = min_g_instance(12 + static_cast<int>(seed % 10), seed);
    OrientResult r = orient_d3(g);
    if (r.plan.mode != OrientMode::Partition) continue;
    const VertexPartition& p = *r.plan.partition;
    for (const RuleApplication& a : r.plan.rules_applied) {
      Orientation bad = r.orientation.with_flipped(*g.edge_index(a.arc.from, a.arc.to));
      DiameterCertificate cert = verify_theorem1(g, bad);
      ObservationReport obs = check_observations(g, p, bad);
      ++flips;
      // u has degree 2, so flipping either of its arcs leaves it a source or sink.
      if (a.rule == "x->u" || a.rule == "u->v") CHECK_FALSE(cert.strongly_connected);
      if (!obs.ok) ++caught_by_observations;
      // The observation checker and plain BFS must agree on d(y, X1) <= 3.
      std::vector<int> from_y = bfs_distances(bad, p.pair.y);
      bool obs3 = std::all_of(p[Cell::X1].begin(), p[Cell::X1].end(),
                              [&](Vertex w) { return from_y[static_cast<std::size_t>(w)] <= 3; });
      bool reported = std::none_of(obs.failures.begin(), obs.failures.end(),
                                   [](const ObservationFailure& f) { return f.check == "d(y, X1) <= 3"; });
      CHECK(obs3 == reported);
    }
  }
  CHECK(flips > 0);
  CHECK(caught_by_observations > 0);
}
