#include "oriadim/lemma1.hpp"

#include <algorithm>
#include <string>

#include "oriadim/errors.hpp"

namespace oriadim {

namespace {

enum class Role : unsigned char { Outside, Anchor, Attached };

std::vector<Role> roles(const UndirectedGraph& host, std::span<const Vertex> anchor, std::span<const Vertex> attached) {
  const int n = host.num_vertices();
  std::vector<Role> role(static_cast<std::size_t>(n), Role::Outside);
  auto mark = [&](Vertex v, Role r) {
    if (v < 0 || v >= n) throw InputError("vertex " + std::to_string(v) + " out of range");
    Role& slot = role[static_cast<std::size_t>(v)];
    if (slot != Role::Outside) {
      throw InputError(slot == r ? "vertex " + std::to_string(v) + " listed twice"
                                 : "vertex " + std::to_string(v) + " is in both S and S'");
    }
    slot = r;
  };
  for (Vertex v : anchor) mark(v, Role::Anchor);
  for (Vertex v : attached) mark(v, Role::Attached);
  return role;
}

// Distances from the whole anchor set along arcs (or against them).
std::vector<int> set_distances(int n, std::span<const Vertex> sources, std::span<const Arc> arcs, bool reverse) {
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(n));
  for (const Arc& a : arcs) {
    if (reverse) out[static_cast<std::size_t>(a.to)].push_back(a.from);
    else out[static_cast<std::size_t>(a.from)].push_back(a.to);
  }
  std::vector<int> dist(static_cast<std::size_t>(n), kUnreachable);
  std::vector<Vertex> queue;
  for (Vertex s : sources) {
    dist[static_cast<std::size_t>(s)] = 0;
    queue.push_back(s);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex w = queue[head];
    for (Vertex t : out[static_cast<std::size_t>(w)]) {
      if (dist[static_cast<std::size_t>(t)] == kUnreachable) {
        dist[static_cast<std::size_t>(t)] = dist[static_cast<std::size_t>(w)] + 1;
        queue.push_back(t);
      }
    }
  }
  return dist;
}

}  // namespace

void validate_lemma1(const UndirectedGraph& host, std::span<const Vertex> anchor, std::span<const Vertex> attached) {
  std::vector<Role> role = roles(host, anchor, attached);
  for (Vertex w : attached) {
    bool touches_anchor = false;
    bool touches_attached = false;
    for (Vertex t : host.neighbors(w)) {
      touches_anchor |= role[static_cast<std::size_t>(t)] == Role::Anchor;
      touches_attached |= role[static_cast<std::size_t>(t)] == Role::Attached;
    }
    if (!touches_anchor) throw InputError("vertex " + std::to_string(w) + " of S' has no neighbor in S");
    if (!touches_attached) {
      throw InputError("vertex " + std::to_string(w) + " is a trivial component of H[S']");
    }
  }
}

std::vector<int> lemma1_edges(const UndirectedGraph& host, std::span<const Vertex> anchor,
                              std::span<const Vertex> attached) {
  std::vector<Role> role = roles(host, anchor, attached);
  std::vector<int> indices;
  for (int i = 0; i < host.num_edges(); ++i) {
    Role ra = role[static_cast<std::size_t>(host.edge(i).a)];
    Role rb = role[static_cast<std::size_t>(host.edge(i).b)];
    if ((ra == Role::Attached && rb != Role::Outside) || (rb == Role::Attached && ra != Role::Outside)) {
      indices.push_back(i);
    }
  }
  return indices;
}

std::vector<Arc> orient_lemma1(const UndirectedGraph& host, std::span<const Vertex> anchor,
                               std::span<const Vertex> attached) {
  validate_lemma1(host, anchor, attached);
  std::vector<Role> role = roles(host, anchor, attached);
  const int n = host.num_vertices();

  // depth parity per attached vertex; -1 = unvisited
  std::vector<int> parity(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> roots(attached.begin(), attached.end());
  std::sort(roots.begin(), roots.end());
  std::vector<Vertex> queue;
  for (Vertex root : roots) {
    if (parity[static_cast<std::size_t>(root)] != -1) continue;
    parity[static_cast<std::size_t>(root)] = 0;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex w = queue[head];
      for (Vertex t : host.neighbors(w)) {
        if (role[static_cast<std::size_t>(t)] != Role::Attached || parity[static_cast<std::size_t>(t)] != -1) continue;
        parity[static_cast<std::size_t>(t)] = 1 - parity[static_cast<std::size_t>(w)];
        parent[static_cast<std::size_t>(t)] = w;
        queue.push_back(t);
      }
    }
  }

  auto is_a = [&](Vertex w) { return parity[static_cast<std::size_t>(w)] == 0; };
  std::vector<Arc> arcs;
  for (int i : lemma1_edges(host, anchor, attached)) {
    const Edge& e = host.edge(i);
    Role ra = role[static_cast<std::size_t>(e.a)];
    Role rb = role[static_cast<std::size_t>(e.b)];
    if (ra == Role::Anchor || rb == Role::Anchor) {
      Vertex w = ra == Role::Anchor ? e.b : e.a;
      Vertex s = ra == Role::Anchor ? e.a : e.b;
      arcs.push_back(is_a(w) ? Arc{w, s} : Arc{s, w});
      continue;
    }
    bool tree = parent[static_cast<std::size_t>(e.a)] == e.b || parent[static_cast<std::size_t>(e.b)] == e.a;
    if (tree || is_a(e.a) != is_a(e.b)) {
      arcs.push_back(is_a(e.a) ? Arc{e.b, e.a} : Arc{e.a, e.b});
    } else {
      arcs.push_back(Arc{e.a, e.b});
    }
  }
  return arcs;
}

std::vector<Arc> orient_lemma1(const Lemma1Instance& inst) {
  return orient_lemma1(inst.host, inst.anchor, inst.attached);
}

Lemma1Verdict verify_lemma1(const UndirectedGraph& host, std::span<const Vertex> anchor,
                            std::span<const Vertex> attached, std::span<const Arc> arcs) {
  std::vector<int> expected = lemma1_edges(host, anchor, attached);
  std::vector<bool> wanted(static_cast<std::size_t>(host.num_edges()), false);
  for (int i : expected) wanted[static_cast<std::size_t>(i)] = true;
  std::vector<bool> seen(wanted.size(), false);
  for (const Arc& a : arcs) {
    auto index = host.edge_index(a.from, a.to);
    if (!index || !wanted[static_cast<std::size_t>(*index)]) {
      throw InputError("arc " + std::to_string(a.from) + "->" + std::to_string(a.to) + " is not an edge of F");
    }
    if (seen[static_cast<std::size_t>(*index)]) {
      throw InputError("edge {" + std::to_string(a.from) + "," + std::to_string(a.to) + "} oriented twice");
    }
    seen[static_cast<std::size_t>(*index)] = true;
  }
  if (static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true)) != expected.size()) {
    throw InputError("arcs leave some edge of F unoriented");
  }

  const int n = host.num_vertices();
  std::vector<int> from_anchor = set_distances(n, anchor, arcs, false);
  std::vector<int> to_anchor = set_distances(n, anchor, arcs, true);
  Lemma1Verdict verdict;
  for (Vertex w : attached) {
    int in = from_anchor[static_cast<std::size_t>(w)];
    int out = to_anchor[static_cast<std::size_t>(w)];
    if (in > 2 || out > 2) {
      verdict.ok = false;
      verdict.witness = w;
      verdict.direction = in > 2 ? Lemma1Verdict::Direction::FromAnchor : Lemma1Verdict::Direction::ToAnchor;
      verdict.distance = in > 2 ? in : out;
      return verdict;
    }
  }
  return verdict;
}

Lemma1Verdict verify_lemma1(const Lemma1Instance& inst, std::span<const Arc> arcs) {
  return verify_lemma1(inst.host, inst.anchor, inst.attached, arcs);
}

}  // namespace oriadim
