#include <numeric>
#include <set>

#include "doctest.h"
#include "oriadim/enumerate.hpp"
#include "oriadim/errors.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace oriadim;

namespace {

UndirectedGraph relabel(const UndirectedGraph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back(make_edge(perm[static_cast<std::size_t>(e.a)], perm[static_cast<std::size_t>(e.b)]));
  return UndirectedGraph(g.num_vertices(), edges);
}

}  // namespace

TEST_CASE("class counts match brute force over labeled graphs") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    EnumerationResult r = enumerate_graphs(n, n * (n - 1) / 2);
    CHECK(r.complete);
    CHECK(r.graphs.size() == oracle::all_classes(n).size());
    std::set<std::vector<bool>> seen;
    for (const UndirectedGraph& g : r.graphs) seen.insert(oracle::canonical(n, oracle::edge_pairs(g)));
    CHECK(seen.size() == r.graphs.size());
  }
}

TEST_CASE("seven-vertex classes") {
  // 1044 graphs on 7 vertices; too slow for the permutation oracle.
  EnumerationResult r = enumerate_graphs(7, 21);
  CHECK(r.graphs.size() == 1044);
  std::set<std::string> keys;
  for (const UndirectedGraph& g : r.graphs) keys.insert(canonical_key(g));
  CHECK(keys.size() == 1044);
}

TEST_CASE("edge cap and budget") {
  EnumerationResult capped = enumerate_graphs(6, 6);
  for (const UndirectedGraph& g : capped.graphs) CHECK(g.num_edges() <= 6);
  std::size_t expected = 0;
  for (const auto& code : oracle::all_classes(6)) {
    if (std::count(code.begin(), code.end(), true) <= 6) ++expected;
  }
  CHECK(capped.graphs.size() == expected);

  EnumerationResult cut = enumerate_graphs(7, 21, 50);
  CHECK_FALSE(cut.complete);
  CHECK_THROWS_AS(canonical_key(UndirectedGraph(17)), CapabilityError);
}

TEST_CASE("parallel and serial enumeration agree") {
  for (int n = 3; n <= 7; ++n) {
    EnumerationResult a = enumerate_graphs(n, 12);
    EnumerationResult b = enumerate_graphs_serial(n, 12);
    CHECK(a.graphs == b.graphs);
  }
}

TEST_CASE("canonical key is invariant under relabeling and separates classes") {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    int n = uniform_int(rng, 1, 12);
    UndirectedGraph g = fixtures::random_graph(n, static_cast<std::uint64_t>(uniform_int(rng, 1, 9)), 10, rng);
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    shuffle(std::span<Vertex>(perm), rng);
    UndirectedGraph h = relabel(g, perm);
    CHECK(canonical_key(g) == canonical_key(h));
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(canonical_key(canonical_form(g)) == canonical_key(g));
  }
  for (int trial = 0; trial < 300; ++trial) {
    int n = uniform_int(rng, 2, 6);
    UndirectedGraph a = fixtures::random_graph(n, 1, 2, rng);
    UndirectedGraph b = fixtures::random_graph(n, 1, 2, rng);
    bool iso = oracle::canonical(n, oracle::edge_pairs(a)) == oracle::canonical(n, oracle::edge_pairs(b));
    CHECK((canonical_key(a) == canonical_key(b)) == iso);
  }
}

TEST_CASE("regular graphs with many automorphisms") {
  // Petersen graph against a relabeled copy, and against the 5-prism.
  UndirectedGraph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
  UndirectedGraph prism(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                             {5, 6}, {6, 7}, {7, 8}, {8, 9}, {5, 9}});
  std::vector<Vertex> perm{3, 7, 1, 9, 0, 5, 2, 8, 6, 4};
  CHECK(canonical_key(petersen) == canonical_key(relabel(petersen, perm)));
  CHECK(canonical_key(petersen) != canonical_key(prism));
  CHECK(canonical_key(complete_graph(12)) == canonical_key(relabel(complete_graph(12), {11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0})));
}
