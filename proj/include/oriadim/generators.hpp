#pragma once

#include <cstdint>
#include <optional>

#include "oriadim/graph.hpp"
#include "oriadim/lemma1.hpp"
#include "oriadim/random.hpp"

namespace oriadim {

UndirectedGraph cycle_graph(int n);
UndirectedGraph complete_graph(int n);
UndirectedGraph path_graph(int n);

/// Connected bridgeless graph on n >= 3 vertices: G(n, p) with p = num/den,
/// then components joined and every bridge closed by a cross edge.
UndirectedGraph random_bridgeless(int n, std::uint64_t num, std::uint64_t den, Rng& rng);

/// Planted instance of G(n, 3, 4, 1) built around u=0, v=1, x=2, y=3 with
/// u-v, u-x, v-y and u, v of degree 2. Remaining vertices are seeded into
/// the hub cells, distance violations are repaired by added edges (never at
/// u or v), and the result is thinned by deleting edges while membership
/// holds. Returns nullopt if the repair loop gives up. Needs 6 <= n <= 64.
std::optional<UndirectedGraph> random_min_g_instance(int n, Rng& rng);

/// Same, retried until an instance comes out.
UndirectedGraph min_g_instance(int n, std::uint64_t seed);

/// Valid Lemma1Instance on n vertices (3 <= n <= 64).
Lemma1Instance random_lemma1_instance(int n, Rng& rng);

/// Uniformly random orientation of g.
Orientation random_orientation(const UndirectedGraph& g, Rng& rng);

}  // namespace oriadim
