#pragma once

#include <array>
#include <string>
#include <vector>

#include "closedgraph/graph.hpp"
#include "closedgraph/labeling.hpp"
#include "closedgraph/structure.hpp"
#include "closedgraph/verdict.hpp"

namespace closedgraph {

/// Why a labeling is not closed. All values are labels, not vertex indices.
struct ClosedViolation {
  enum class Kind { fork, interval_gap, non_directed_path };

  Kind kind = Kind::fork;
  std::array<int, 3> triple{};  // fork: (j, i, k), j < k, both on one side of i
  int label = 0;                // interval_gap: i
  int missing = 0;              // interval_gap: the k in [i+1, i+r] missing from N^>(i)
  std::vector<int> path;        // non_directed_path: a shortest path, as labels
};

inline const char* to_string(ClosedViolation::Kind kind) {
  switch (kind) {
    case ClosedViolation::Kind::fork: return "fork";
    case ClosedViolation::Kind::interval_gap: return "interval-gap";
    case ClosedViolation::Kind::non_directed_path: return "non-directed-path";
  }
  return "?";
}

namespace detail {

// Adjacency re-indexed by label: bit (b - 1) of result[a - 1] is set iff the
// vertices labeled a and b are adjacent.
inline std::vector<VertexMask> label_adjacency(const Graph& g, const Labeling& lab) {
  std::vector<VertexMask> out(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexMask m = 0;
    for_each_vertex(g.neighbors(v), [&](Vertex w) { m |= bit(lab.label(w) - 1); });
    out[lab.label(v) - 1] = m;
  }
  return out;
}

inline ClosedViolation fork(int j, int i, int k) {
  ClosedViolation v;
  v.kind = ClosedViolation::Kind::fork;
  v.triple = {j, i, k};
  return v;
}

// Smallest (j, k), j < k, in `side` (0-based label bits) that are not adjacent.
inline bool first_non_edge(const std::vector<VertexMask>& ladj, VertexMask side, int& j, int& k) {
  for (VertexMask js = side; js != 0; js &= js - 1) {
    const int a = lowest(js);
    const VertexMask missing = side & ~prefix_mask(a + 1) & ~ladj[a];
    if (missing != 0) {
      j = a + 1;
      k = lowest(missing) + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

inline bool is_valid_fork(const Graph& g, const Labeling& lab, const ClosedViolation& v) {
  if (v.kind != ClosedViolation::Kind::fork) return false;
  const auto [j, i, k] = v.triple;
  const int n = lab.size();
  for (int x : v.triple)
    if (x < 1 || x > n) return false;
  if (j == k) return false;
  const bool shape = (j > i && k > i) || (j < i && k < i);
  const Vertex vj = lab.vertex(j), vi = lab.vertex(i), vk = lab.vertex(k);
  return shape && g.adjacent(vj, vi) && g.adjacent(vi, vk) && !g.adjacent(vj, vk);
}

/// Closedness straight from the definition: for every label i and neighbors
/// j, k of i lying on the same side of i, {j, k} must be an edge. Reports the
/// lexicographically smallest (i, j, k) violation.
inline Verdict<ClosedViolation> is_closed_by_definition(const Graph& g, const Labeling& lab) {
  require_matching(g, lab, "is_closed_by_definition");
  const auto ladj = detail::label_adjacency(g, lab);
  for (int a = 0; a < g.order(); ++a) {
    const VertexMask below = ladj[a] & prefix_mask(a);
    const VertexMask above = ladj[a] & ~prefix_mask(a + 1);
    int j = 0, k = 0;
    if (detail::first_non_edge(ladj, below, j, k) || detail::first_non_edge(ladj, above, j, k)) {
      auto v = detail::fork(j, a + 1, k);
      detail::ensure(is_valid_fork(g, lab, v), "is_closed_by_definition: invalid fork");
      return Verdict<ClosedViolation>::fails(std::move(v));
    }
  }
  return {};
}

/// Closedness as "every shortest path is directed". A shortest path from s is
/// exactly a path in the BFS DAG of s, so it suffices that no vertex is a
/// local label extremum between a DAG predecessor and a DAG successor.
inline Verdict<ClosedViolation> is_closed_by_directed_paths(const Graph& g, const Labeling& lab) {
  detail::require_connected(g, "is_closed_by_directed_paths");
  require_matching(g, lab, "is_closed_by_directed_paths");
  const int n = g.order();
  std::vector<int> dist(n);
  std::vector<VertexMask> layer;

  for (Vertex s = 0; s < n; ++s) {
    const int ecc = detail::bfs_into(g, s, dist);
    layer.assign(ecc + 1, 0);
    for (Vertex v = 0; v < n; ++v) layer[dist[v]] |= bit(v);

    for (Vertex b = 0; b < n; ++b) {
      const int db = dist[b];
      if (db == 0 || db == ecc) continue;
      const int lb = lab.label(b);
      VertexMask preds_lower = 0, preds_higher = 0, succs_lower = 0, succs_higher = 0;
      for_each_vertex(g.neighbors(b) & layer[db - 1], [&](Vertex a) {
        (lab.label(a) < lb ? preds_lower : preds_higher) |= bit(a);
      });
      for_each_vertex(g.neighbors(b) & layer[db + 1], [&](Vertex c) {
        (lab.label(c) < lb ? succs_lower : succs_higher) |= bit(c);
      });
      Vertex a = -1, c = -1;
      if (preds_lower && succs_lower) {
        a = lowest(preds_lower);
        c = lowest(succs_lower);
      } else if (preds_higher && succs_higher) {
        a = lowest(preds_higher);
        c = lowest(succs_higher);
      } else {
        continue;
      }
      std::vector<Vertex> back{c, b, a};
      for (Vertex cur = a; dist[cur] > 0;) {
        cur = lowest(g.neighbors(cur) & layer[dist[cur] - 1]);
        back.push_back(cur);
      }
      ClosedViolation v;
      v.kind = ClosedViolation::Kind::non_directed_path;
      for (auto it = back.rbegin(); it != back.rend(); ++it) v.path.push_back(lab.label(*it));
      return Verdict<ClosedViolation>::fails(std::move(v));
    }
  }
  return {};
}

/// N^>(i): labels of the neighbors of label i that exceed i, ascending.
inline std::vector<int> upper_neighborhood(const Graph& g, const Labeling& lab, int i) {
  require_matching(g, lab, "upper_neighborhood");
  if (i < 1 || i > lab.size())
    throw DomainError("upper_neighborhood: label " + std::to_string(i) + " out of range");
  std::vector<int> out;
  for_each_vertex(g.neighbors(lab.vertex(i)), [&](Vertex w) {
    if (lab.label(w) > i) out.push_back(lab.label(w));
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// Closedness on a connected graph as "each N^>(i) is complete and equals the
/// interval [i+1, i+|N^>(i)|]".
inline Verdict<ClosedViolation> is_closed_by_intervals(const Graph& g, const Labeling& lab) {
  detail::require_connected(g, "is_closed_by_intervals");
  require_matching(g, lab, "is_closed_by_intervals");
  const auto ladj = detail::label_adjacency(g, lab);
  for (int a = 0; a < g.order(); ++a) {
    const VertexMask above = ladj[a] & ~prefix_mask(a + 1);
    int j = 0, k = 0;
    if (detail::first_non_edge(ladj, above, j, k))
      return Verdict<ClosedViolation>::fails(detail::fork(j, a + 1, k));
    const int r = popcount(above);
    const VertexMask interval = prefix_mask(a + 1 + r) & ~prefix_mask(a + 1);
    if (above != interval) {
      ClosedViolation v;
      v.kind = ClosedViolation::Kind::interval_gap;
      v.label = a + 1;
      v.missing = lowest(interval & ~above) + 1;
      return Verdict<ClosedViolation>::fails(std::move(v));
    }
  }
  return {};
}

/// Outcome of the layer-structure checks that every closed labeling of a
/// connected graph must satisfy.
struct ClosedLayerReport {
  bool layers_complete = true;
  bool next_layer_is_upper_neighborhood = true;
  bool height_is_diameter = true;
  bool endpoints_placed = true;
  int height = 0;
  int diameter = 0;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
};

/// Checks, for a closed labeling of a connected graph:
///  (a) each layer is complete;
///  (b) L_{N+1} = N^>(max L_N) for N < h;
///  (c) diam = h;
///  (d) every longest shortest path has an end in L_0 or L_1 and the other in L_h.
inline ClosedLayerReport check_closed_layer_properties(const Graph& g, const Labeling& lab) {
  detail::require_connected(g, "check_closed_layer_properties");
  require_matching(g, lab, "check_closed_layer_properties");
  if (!is_closed_by_definition(g, lab))
    throw DomainError("check_closed_layer_properties: labeling is not closed");

  ClosedLayerReport report;
  const LayerDecomposition dec = layers(g, lab);
  report.height = dec.height;

  for (int n = 0; n <= dec.height; ++n) {
    if (!is_complete_on(g, dec.layers[n])) {
      report.layers_complete = false;
      report.failures.push_back("layer " + std::to_string(n) + " is not complete");
    }
  }
  for (int n = 0; n < dec.height; ++n) {
    int top = 0;
    for (Vertex v : dec.layers[n]) top = std::max(top, lab.label(v));
    std::vector<int> next;
    for (Vertex v : dec.layers[n + 1]) next.push_back(lab.label(v));
    std::sort(next.begin(), next.end());
    if (next != upper_neighborhood(g, lab, top)) {
      report.next_layer_is_upper_neighborhood = false;
      report.failures.push_back("layer " + std::to_string(n + 1) +
                                " differs from the upper neighborhood of label " +
                                std::to_string(top));
    }
  }

  const DistanceMatrix d(g);
  report.diameter = detail::diameter_of(d);
  if (report.diameter != dec.height) {
    report.height_is_diameter = false;
    report.failures.push_back("diameter " + std::to_string(report.diameter) +
                              " differs from height " + std::to_string(dec.height));
  }
  for (auto [u, w] : detail::diametral_pairs(d)) {
    const int lu = dec.layer_of[u], lw = dec.layer_of[w];
    const bool placed = (lu <= 1 && lw == dec.height) || (lw <= 1 && lu == dec.height);
    if (!placed) {
      report.endpoints_placed = false;
      report.failures.push_back("longest shortest path " + g.name(u) + ".." + g.name(w) +
                                " has endpoints in layers " + std::to_string(lu) + " and " +
                                std::to_string(lw));
    }
  }
  return report;
}

}  // namespace closedgraph
