#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "closedgraph/graph.hpp"
#include "closedgraph/verdict.hpp"

namespace closedgraph {

/// Chordless cycle of length >= 4, listed in cyclic order.
struct HoleWitness {
  std::vector<Vertex> cycle;
};

/// Induced K_{1,3}: center adjacent to three pairwise non-adjacent leaves.
struct ClawWitness {
  Vertex center = 0;
  std::array<Vertex, 3> leaves{};
};

/// A vertex at distance >= 2 from a longest shortest path `path` joining
/// `from` and `to`.
struct NarrowWitness {
  Vertex vertex = 0;
  std::vector<Vertex> path;
  Vertex from = 0;
  Vertex to = 0;
};

// ---------------------------------------------------------------------------
// Witness checks, usable independently of the deciders.

inline bool is_valid_hole(const Graph& g, const HoleWitness& w) {
  const auto& c = w.cycle;
  const std::size_t k = c.size();
  if (k < 4) return false;
  VertexMask members = 0;
  for (Vertex v : c) {
    if (!g.contains(v) || (members & bit(v))) return false;
    members |= bit(v);
  }
  for (std::size_t i = 0; i < k; ++i) {
    const VertexMask expected = bit(c[(i + 1) % k]) | bit(c[(i + k - 1) % k]);
    if ((g.neighbors(c[i]) & members) != expected) return false;
  }
  return true;
}

inline bool is_valid_claw(const Graph& g, const ClawWitness& w) {
  if (!g.contains(w.center)) return false;
  for (std::size_t i = 0; i < 3; ++i) {
    const Vertex a = w.leaves[i];
    if (!g.contains(a) || a == w.center || !g.adjacent(w.center, a)) return false;
    for (std::size_t j = i + 1; j < 3; ++j)
      if (a == w.leaves[j] || g.adjacent(a, w.leaves[j])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Chordality

namespace detail {

// Maximum-cardinality search order; the reverse is a perfect elimination
// ordering exactly when g is chordal.
inline std::vector<Vertex> mcs_order(const Graph& g) {
  const int n = g.order();
  std::vector<int> weight(n, 0);
  std::vector<Vertex> visit;
  visit.reserve(n);
  VertexMask unvisited = g.all();
  while (unvisited != 0) {
    Vertex best = -1;
    for_each_vertex(unvisited, [&](Vertex v) {
      if (best < 0 || weight[v] > weight[best]) best = v;
    });
    visit.push_back(best);
    unvisited &= ~bit(best);
    for_each_vertex(g.neighbors(best) & unvisited, [&](Vertex w) { ++weight[w]; });
  }
  return visit;
}

inline bool is_reverse_peo(const Graph& g, const std::vector<Vertex>& visit) {
  VertexMask earlier = 0;
  for (Vertex v : visit) {
    if (!is_complete_on(g, g.neighbors(v) & earlier)) return false;
    earlier |= bit(v);
  }
  return true;
}

// Shortest chordless cycle of length <= max_length, or an empty vector.
//
// For a vertex v with non-adjacent neighbors x, y, a shortest x-y path in
// G - (N[v] \ {x, y}) closes a chordless cycle through v; every hole arises
// this way, so the minimum over all (v, x, y) is the shortest hole.
inline std::vector<Vertex> shortest_hole(const Graph& g, int max_length) {
  const int n = g.order();
  std::vector<Vertex> best;
  int best_length = max_length + 1;
  std::vector<Vertex> parent(n, -1);

  for (Vertex v = 0; v < n; ++v) {
    const VertexMask nv = g.neighbors(v);
    for_each_vertex(nv, [&](Vertex x) {
      if (best_length == 4) return;
      const VertexMask ys = nv & ~prefix_mask(x + 1) & ~g.neighbors(x);
      for_each_vertex(ys, [&](Vertex y) {
        if (best_length == 4) return;
        // Path x..y needs `edges` edges; cycle length is edges + 2.
        const int max_edges = best_length - 3;
        const VertexMask allowed = (g.all() & ~g.closed_neighbors(v)) | bit(x) | bit(y);
        VertexMask seen = bit(x);
        VertexMask frontier = seen;
        int depth = 0;
        bool found = false;
        while (frontier != 0 && depth < max_edges && !found) {
          VertexMask next = 0;
          for_each_vertex(frontier, [&](Vertex u) {
            const VertexMask fresh = g.neighbors(u) & allowed & ~seen & ~next;
            for_each_vertex(fresh, [&](Vertex w) { parent[w] = u; });
            next |= fresh;
          });
          ++depth;
          seen |= next;
          frontier = next;
          found = (next & bit(y)) != 0;
        }
        if (!found) return;
        std::vector<Vertex> path;
        for (Vertex cur = y; cur != x; cur = parent[cur]) path.push_back(cur);
        path.push_back(x);
        best.assign(1, v);
        best.insert(best.end(), path.rbegin(), path.rend());
        best_length = depth + 2;
      });
    });
    if (best_length == 4) break;
  }
  return best;
}

}  // namespace detail

/// Chordality via maximum-cardinality search. On failure the witness is a
/// shortest chordless cycle.
inline Verdict<HoleWitness> is_chordal(const Graph& g) {
  if (detail::is_reverse_peo(g, detail::mcs_order(g))) return {};
  HoleWitness w{detail::shortest_hole(g, g.order())};
  detail::ensure(is_valid_hole(g, w), "is_chordal: invalid hole witness");
  return Verdict<HoleWitness>::fails(std::move(w));
}

/// Every cycle of length 4, 5 or 6 has a chord.
inline Verdict<HoleWitness> has_chordal_456(const Graph& g) {
  if (detail::is_reverse_peo(g, detail::mcs_order(g))) return {};
  HoleWitness w{detail::shortest_hole(g, 6)};
  if (w.cycle.empty()) return {};
  detail::ensure(is_valid_hole(g, w) && w.cycle.size() <= 6,
                 "has_chordal_456: invalid hole witness");
  return Verdict<HoleWitness>::fails(std::move(w));
}

// ---------------------------------------------------------------------------
// Claws

inline Verdict<ClawWitness> is_claw_free(const Graph& g) {
  for (Vertex c = 0; c < g.order(); ++c) {
    const VertexMask nc = g.neighbors(c);
    for (VertexMask xs = nc; xs != 0; xs &= xs - 1) {
      const Vertex x = lowest(xs);
      const VertexMask after_x = nc & ~prefix_mask(x + 1) & ~g.neighbors(x);
      for (VertexMask ys = after_x; ys != 0; ys &= ys - 1) {
        const Vertex y = lowest(ys);
        const VertexMask zs = after_x & ~prefix_mask(y + 1) & ~g.neighbors(y);
        if (zs != 0) {
          ClawWitness w{c, {x, y, lowest(zs)}};
          detail::ensure(is_valid_claw(g, w), "is_claw_free: invalid claw witness");
          return Verdict<ClawWitness>::fails(w);
        }
      }
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Diameter and longest shortest paths

namespace detail {

inline void require_connected(const Graph& g, const char* op) {
  if (g.empty()) throw DomainError(std::string(op) + ": empty graph");
  if (!is_connected(g)) throw DomainError(std::string(op) + ": graph is disconnected");
}

inline int diameter_of(const DistanceMatrix& d) {
  int best = 0;
  for (Vertex u = 0; u < d.order(); ++u)
    for (int x : d.row(u)) best = std::max(best, x);
  return best;
}

inline std::vector<std::pair<Vertex, Vertex>> diametral_pairs(const DistanceMatrix& d) {
  const int diam = diameter_of(d);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  if (d.order() == 1) {
    pairs.emplace_back(0, 0);
    return pairs;
  }
  for (Vertex u = 0; u < d.order(); ++u)
    for (Vertex w = u + 1; w < d.order(); ++w)
      if (d(u, w) == diam) pairs.emplace_back(u, w);
  return pairs;
}

}  // namespace detail

inline int diameter(const Graph& g) {
  detail::require_connected(g, "diameter");
  return detail::diameter_of(DistanceMatrix(g));
}

/// Unordered pairs (u, w), u < w, with d(u, w) = diam(g). A single-vertex
/// graph yields the degenerate pair (v, v).
inline std::vector<std::pair<Vertex, Vertex>> diametral_endpoints(const Graph& g) {
  detail::require_connected(g, "diametral_endpoints");
  return detail::diametral_pairs(DistanceMatrix(g));
}

/// Union of the members of all diametral pairs.
inline VertexMask longest_path_endpoints(const Graph& g) {
  VertexMask m = 0;
  for (auto [u, w] : diametral_endpoints(g)) m |= bit(u) | bit(w);
  return m;
}

inline bool is_valid_narrow_witness(const Graph& g, const NarrowWitness& w) {
  if (!is_connected(g)) return false;
  const DistanceMatrix d(g);
  const auto& p = w.path;
  if (p.empty() || p.front() != w.from || p.back() != w.to) return false;
  if (!g.contains(w.vertex)) return false;
  const int len = static_cast<int>(p.size()) - 1;
  if (len != detail::diameter_of(d) || d(w.from, w.to) != len) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.adjacent(p[i], p[i + 1])) return false;
  for (Vertex x : p)
    if (g.closed_neighbors(w.vertex) & bit(x)) return false;
  return true;
}

/// Every vertex lies on or next to every longest shortest path.
///
/// For each diametral pair (u, w) and each vertex v far from both ends, a
/// violation exists iff some shortest u-w path avoids N[v]; that is decided by
/// reachability in the layered shortest-path DAG with N[v] removed.
inline Verdict<NarrowWitness> is_narrow(const Graph& g) {
  detail::require_connected(g, "is_narrow");
  const int n = g.order();
  if (n == 1) return {};
  const DistanceMatrix d(g);
  const int diam = detail::diameter_of(d);
  std::vector<VertexMask> layer(diam + 1);
  std::vector<VertexMask> reach(diam + 1);

  for (auto [u, w] : detail::diametral_pairs(d)) {
    std::fill(layer.begin(), layer.end(), 0);
    for (Vertex x = 0; x < n; ++x)
      if (d(u, x) + d(x, w) == diam) layer[d(u, x)] |= bit(x);

    for (Vertex v = 0; v < n; ++v) {
      if (d(u, v) < 2 || d(w, v) < 2) continue;
      const VertexMask blocked = g.closed_neighbors(v);
      reach[0] = bit(u);
      for (int k = 1; k <= diam; ++k) {
        VertexMask r = 0;
        for_each_vertex(layer[k] & ~blocked, [&](Vertex x) {
          if (g.neighbors(x) & reach[k - 1]) r |= bit(x);
        });
        reach[k] = r;
        if (r == 0) break;
      }
      if (!(reach[diam] & bit(w))) continue;

      std::vector<Vertex> path(diam + 1);
      path[diam] = w;
      for (int k = diam - 1; k >= 0; --k)
        path[k] = lowest(g.neighbors(path[k + 1]) & reach[k]);
      NarrowWitness witness{v, std::move(path), u, w};
      detail::ensure(is_valid_narrow_witness(g, witness), "is_narrow: invalid witness");
      return Verdict<NarrowWitness>::fails(std::move(witness));
    }
  }
  return {};
}

struct LongestShortestPaths {
  std::vector<std::vector<Vertex>> paths;
  bool truncated = false;
};

/// Explicit enumeration of every longest shortest path, each once (oriented
/// from the smaller to the larger endpoint). Exponential in general.
inline LongestShortestPaths enumerate_longest_shortest_paths(const Graph& g,
                                                             std::size_t cap) {
  detail::require_connected(g, "enumerate_longest_shortest_paths");
  if (cap == 0) throw DomainError("enumerate_longest_shortest_paths: cap must be positive");
  const DistanceMatrix d(g);
  const int diam = detail::diameter_of(d);
  LongestShortestPaths out;
  std::vector<Vertex> path;

  auto extend = [&](auto&& self, Vertex to) -> bool {
    const Vertex cur = path.back();
    if (cur == to) {
      if (out.paths.size() == cap) {
        out.truncated = true;
        return false;
      }
      out.paths.push_back(path);
      return true;
    }
    const int k = static_cast<int>(path.size());
    for (VertexMask next = g.neighbors(cur); next != 0; next &= next - 1) {
      const Vertex x = lowest(next);
      if (d(path.front(), x) != k || d(x, to) != diam - k) continue;
      path.push_back(x);
      const bool more = self(self, to);
      path.pop_back();
      if (!more) return false;
    }
    return true;
  };

  for (auto [u, w] : detail::diametral_pairs(d)) {
    path.assign(1, u);
    if (!extend(extend, w)) break;
  }
  return out;
}

}  // namespace closedgraph
