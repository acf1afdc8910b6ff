#pragma once

// Adjacency-mask kernels for graphs with at most 64 vertices. Used by the
// searches, which evaluate millions of small (mixed) digraphs.

#include <array>
#include <bit>
#include <cstdint>

#include "oriadim/graph.hpp"

namespace oriadim::bits {

inline constexpr int kMaxVertices = 64;

using Mask = std::uint64_t;

struct MaskGraph {
  int n = 0;
  std::array<Mask, kMaxVertices> out{};

  Mask all() const { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
};

inline MaskGraph from_undirected(const UndirectedGraph& g) {
  MaskGraph m;
  m.n = g.num_vertices();
  for (const Edge& e : g.edges()) {
    m.out[static_cast<std::size_t>(e.a)] |= Mask{1} << e.b;
    m.out[static_cast<std::size_t>(e.b)] |= Mask{1} << e.a;
  }
  return m;
}

inline MaskGraph from_orientation(const Orientation& o) {
  MaskGraph m;
  m.n = o.num_vertices();
  for (int i = 0; i < o.num_arcs(); ++i) {
    Arc a = o.arc(i);
    m.out[static_cast<std::size_t>(a.from)] |= Mask{1} << a.to;
  }
  return m;
}

/// Eccentricity of source, or kUnreachable. Gives up (returning limit) as
/// soon as the BFS depth reaches limit without covering every vertex.
inline int eccentricity(const MaskGraph& g, int source, int limit = kUnreachable) {
  const Mask all = g.all();
  Mask reach = Mask{1} << source;
  Mask frontier = reach;
  int depth = 0;
  while (reach != all) {
    if (depth >= limit) return limit;
    Mask next = 0;
    for (Mask f = frontier; f != 0; f &= f - 1) {
      next |= g.out[static_cast<std::size_t>(std::countr_zero(f))];
    }
    next &= ~reach;
    if (next == 0) return kUnreachable;
    reach |= next;
    frontier = next;
    ++depth;
  }
  return depth;
}

/// min(diameter, limit); kUnreachable dominates when some vertex is cut off
/// before the limit is hit.
inline int diameter(const MaskGraph& g, int limit = kUnreachable) {
  int best = 0;
  for (int s = 0; s < g.n; ++s) {
    int e = eccentricity(g, s, limit);
    if (e == kUnreachable) return kUnreachable;
    if (e > best) best = e;
    if (best >= limit) return limit;
  }
  return best;
}

/// Sum of all pairwise distances; only meaningful when strongly connected.
inline long total_distance(const MaskGraph& g) {
  const Mask all = g.all();
  long sum = 0;
  for (int s = 0; s < g.n; ++s) {
    Mask reach = Mask{1} << s;
    Mask frontier = reach;
    int depth = 0;
    while (reach != all) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) {
        next |= g.out[static_cast<std::size_t>(std::countr_zero(f))];
      }
      next &= ~reach;
      if (next == 0) return -1;
      ++depth;
      sum += depth * std::popcount(next);
      reach |= next;
      frontier = next;
    }
  }
  return sum;
}

}  // namespace oriadim::bits
