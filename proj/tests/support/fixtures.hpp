#pragma once

#include <vector>

#include "oriadim/generators.hpp"
#include "oriadim/graph.hpp"
#include "oriadim/random.hpp"

namespace fixtures {

using oriadim::UndirectedGraph;

inline UndirectedGraph c3() { return UndirectedGraph(3, {{0, 1}, {1, 2}, {0, 2}}); }
inline UndirectedGraph c4() { return UndirectedGraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }
inline UndirectedGraph c5() { return UndirectedGraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}); }
inline UndirectedGraph k4() { return UndirectedGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
inline UndirectedGraph p3() { return UndirectedGraph(3, {{0, 1}, {1, 2}}); }
inline UndirectedGraph p4() { return UndirectedGraph(4, {{0, 1}, {1, 2}, {2, 3}}); }
inline UndirectedGraph star3() { return UndirectedGraph(4, {{0, 1}, {0, 2}, {0, 3}}); }
// Triangles 0,1,2 and 3,4,5 joined by {2,3}.
inline UndirectedGraph bowtie_bridge() {
  return UndirectedGraph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
}

// Directed cycle 0 -> 1 -> ... -> n-1 -> 0.
inline oriadim::Orientation directed_cycle(int n) {
  std::vector<oriadim::Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  return oriadim::Orientation::from_arcs(oriadim::cycle_graph(n), arcs);
}

// G(n, p) without any connectivity repair.
inline UndirectedGraph random_graph(int n, std::uint64_t num, std::uint64_t den, oriadim::Rng& rng) {
  std::vector<oriadim::Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (oriadim::chance(rng, num, den)) edges.push_back({a, b});
  return UndirectedGraph(n, edges);
}

}  // namespace fixtures
