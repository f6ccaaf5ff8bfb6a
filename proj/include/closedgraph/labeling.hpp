#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "closedgraph/graph.hpp"
#include "closedgraph/structure.hpp"
#include "closedgraph/verdict.hpp"

namespace closedgraph {

/// Bijection between the vertices of a graph and the labels 1..n.
class Labeling {
 public:
  Labeling() = default;

  /// label_of[v] is the label of vertex v. Throws DomainError unless the
  /// values are exactly 1..n.
  static Labeling from_labels(std::vector<int> label_of) {
    const int n = static_cast<int>(label_of.size());
    std::vector<Vertex> vertex_of(n, -1);
    for (Vertex v = 0; v < n; ++v) {
      const int label = label_of[v];
      if (label < 1 || label > n)
        throw DomainError("labeling: label " + std::to_string(label) + " outside 1.." +
                          std::to_string(n));
      if (vertex_of[label - 1] != -1)
        throw DomainError("labeling: label " + std::to_string(label) + " used twice");
      vertex_of[label - 1] = v;
    }
    return Labeling(std::move(label_of), std::move(vertex_of));
  }

  /// vertex_of[i] is the vertex carrying label i + 1.
  static Labeling from_order(std::span<const Vertex> vertex_of) {
    std::vector<int> label_of(vertex_of.size(), 0);
    const int n = static_cast<int>(vertex_of.size());
    for (int i = 0; i < n; ++i) {
      const Vertex v = vertex_of[i];
      if (v < 0 || v >= n || label_of[v] != 0)
        throw DomainError("labeling: vertex order is not a permutation");
      label_of[v] = i + 1;
    }
    return Labeling(std::move(label_of), {vertex_of.begin(), vertex_of.end()});
  }

  static Labeling identity(int n) {
    std::vector<Vertex> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    return from_order(order);
  }

  int size() const noexcept { return static_cast<int>(label_of_.size()); }
  int label(Vertex v) const { return label_of_.at(v); }
  Vertex vertex(int label) const { return vertex_of_.at(label - 1); }
  std::span<const int> labels() const noexcept { return label_of_; }
  std::span<const Vertex> order() const noexcept { return vertex_of_; }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  Labeling(std::vector<int> label_of, std::vector<Vertex> vertex_of)
      : label_of_(std::move(label_of)), vertex_of_(std::move(vertex_of)) {}

  std::vector<int> label_of_;
  std::vector<Vertex> vertex_of_;
};

/// The auxiliary function l of the labeling algorithm: l(i) is the label
/// whose neighborhood was being scanned when label i was handed out.
struct LFunction {
  std::vector<int> values;  // values[i - 1] = l(i)

  int operator()(int label) const { return values.at(label - 1); }
  int size() const noexcept { return static_cast<int>(values.size()); }
};

/// Choice rule for the two free choices of the labeling algorithm.
class TieBreak {
 public:
  static TieBreak min_id() noexcept { return TieBreak(false, 0); }
  static TieBreak seeded(std::uint64_t seed) noexcept { return TieBreak(true, seed); }

  bool is_seeded() const noexcept { return seeded_; }
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  TieBreak(bool seeded, std::uint64_t seed) : seeded_(seeded), seed_(seed) {}
  bool seeded_;
  std::uint64_t seed_;
};

struct LabelingRun {
  Labeling labeling;
  LFunction l;
};

namespace detail {

// Picks among `tied` (non-empty, in vertex order) per the tie-break rule.
class TiePicker {
 public:
  explicit TiePicker(const TieBreak& tb) : seeded_(tb.is_seeded()), rng_(tb.seed()) {}

  Vertex pick(VertexMask tied) {
    if (!seeded_ || popcount(tied) == 1) return lowest(tied);
    auto k = static_cast<int>(rng_() % static_cast<std::uint64_t>(popcount(tied)));
    while (k-- > 0) tied &= tied - 1;
    return lowest(tied);
  }

 private:
  bool seeded_;
  std::mt19937_64 rng_;
};

}  // namespace detail

/// Labels a connected graph: the first label goes to a minimum-degree vertex
/// among all endpoints of longest shortest paths; then, for j = 1, 2, ...,
/// the unlabeled neighbors of the vertex labeled j are labeled one at a time,
/// each time choosing one with the fewest unlabeled neighbors.
inline LabelingRun algorithm1_label(const Graph& g, const TieBreak& tb = TieBreak::min_id()) {
  detail::require_connected(g, "algorithm1_label");
  const int n = g.order();
  detail::TiePicker picker(tb);

  const VertexMask endpoints = longest_path_endpoints(g);
  int min_degree = n;
  for_each_vertex(endpoints, [&](Vertex v) { min_degree = std::min(min_degree, g.degree(v)); });
  VertexMask start_candidates = 0;
  for_each_vertex(endpoints, [&](Vertex v) {
    if (g.degree(v) == min_degree) start_candidates |= bit(v);
  });

  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<int> l;
  l.reserve(n);

  const Vertex v0 = picker.pick(start_candidates);
  order.push_back(v0);
  l.push_back(0);
  VertexMask labeled = bit(v0);

  for (int j = 1; j <= n; ++j) {
    const Vertex current = order.at(j - 1);
    VertexMask pending = g.neighbors(current) & ~labeled;
    while (pending != 0) {
      int fewest = n + 1;
      VertexMask tied = 0;
      for_each_vertex(pending, [&](Vertex u) {
        const int open = popcount(g.neighbors(u) & ~labeled);
        if (open < fewest) {
          fewest = open;
          tied = bit(u);
        } else if (open == fewest) {
          tied |= bit(u);
        }
      });
      const Vertex v = picker.pick(tied);
      order.push_back(v);
      l.push_back(j);
      labeled |= bit(v);
      pending &= ~bit(v);
    }
  }

  detail::ensure(static_cast<int>(order.size()) == n, "algorithm1_label: not every vertex labeled");
  return {Labeling::from_order(order), LFunction{std::move(l)}};
}

/// Vertices grouped by distance from the vertex labeled 1.
struct LayerDecomposition {
  std::vector<std::vector<Vertex>> layers;  // each sorted by label
  std::vector<int> layer_of;                // per vertex
  int height = 0;
};

inline void require_matching(const Graph& g, const Labeling& lab, const char* op) {
  if (lab.size() != g.order())
    throw DomainError(std::string(op) + ": labeling size " + std::to_string(lab.size()) +
                      " does not match graph order " + std::to_string(g.order()));
}

inline LayerDecomposition layers(const Graph& g, const Labeling& lab) {
  detail::require_connected(g, "layers");
  require_matching(g, lab, "layers");
  const DistanceMap d = bfs_distances(g, lab.vertex(1));
  LayerDecomposition out;
  out.layer_of = d.dist;
  for (int v : d.dist) out.height = std::max(out.height, v);
  out.layers.resize(out.height + 1);
  for (int label = 1; label <= lab.size(); ++label) {
    const Vertex v = lab.vertex(label);
    out.layers[d[v]].push_back(v);
  }
  return out;
}

/// l(1) = 0 and l(i) = min label among the neighbors of label i for i > 1.
/// The witness is the first violating label.
inline Verdict<int> check_l_minimality(const Graph& g, const Labeling& lab, const LFunction& lf) {
  require_matching(g, lab, "check_l_minimality");
  if (lf.size() != lab.size()) throw DomainError("check_l_minimality: l-function size mismatch");
  for (int i = 1; i <= lab.size(); ++i) {
    int expected = 0;
    if (i > 1) {
      expected = lab.size() + 1;
      for_each_vertex(g.neighbors(lab.vertex(i)),
                      [&](Vertex w) { expected = std::min(expected, lab.label(w)); });
    }
    if (lf(i) != expected) return Verdict<int>::fails(i);
  }
  return {};
}

/// l(t) < l(s) implies t < s. Witness (t, s).
inline Verdict<std::pair<int, int>> check_l_order(const LFunction& lf) {
  for (int t = 1; t <= lf.size(); ++t)
    for (int s = 1; s <= lf.size(); ++s)
      if (lf(t) < lf(s) && !(t < s)) return Verdict<std::pair<int, int>>::fails({t, s});
  return {};
}

/// For a label t in layer N > 0, the label l(t) lies in layer N - 1.
/// Witness is the offending t.
inline Verdict<int> check_l_layers(const Graph& g, const Labeling& lab, const LFunction& lf) {
  const LayerDecomposition dec = layers(g, lab);
  for (int t = 2; t <= lab.size(); ++t) {
    const int l = lf(t);
    if (l < 1 || l > lab.size()) return Verdict<int>::fails(t);
    const int n_t = dec.layer_of[lab.vertex(t)];
    if (n_t > 0 && dec.layer_of[lab.vertex(l)] != n_t - 1) return Verdict<int>::fails(t);
  }
  return {};
}

/// Labels strictly increase across layers. Witness is a pair of labels (t, s)
/// with t in an earlier layer than s but t > s.
inline Verdict<std::pair<int, int>> check_layer_monotonicity(const Graph& g, const Labeling& lab) {
  const LayerDecomposition dec = layers(g, lab);
  for (std::size_t n = 0; n + 1 < dec.layers.size(); ++n) {
    int max_here = 0;
    for (Vertex v : dec.layers[n]) max_here = std::max(max_here, lab.label(v));
    int min_later = lab.size() + 1;
    for (std::size_t m = n + 1; m < dec.layers.size(); ++m)
      for (Vertex v : dec.layers[m]) min_later = std::min(min_later, lab.label(v));
    if (max_here > min_later) return Verdict<std::pair<int, int>>::fails({max_here, min_later});
  }
  return {};
}

// ---------------------------------------------------------------------------
// "vertex label" text lines

inline void write_labeling(std::ostream& out, const Graph& g, const Labeling& lab) {
  require_matching(g, lab, "write_labeling");
  for (Vertex v = 0; v < g.order(); ++v) out << g.name(v) << ' ' << lab.label(v) << '\n';
}

/// Reads "vertex label" lines for g. Malformed lines or unknown vertices
/// raise ParseError; a non-bijective assignment raises DomainError.
inline Labeling read_labeling(std::istream& in, const Graph& g) {
  std::vector<int> label_of(g.order(), 0);
  VertexMask assigned = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = detail::split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() != 2) throw ParseError("expected 'vertex label'", line_no);
    const auto v = g.find(tokens[0]);
    if (!v) throw ParseError("unknown vertex '" + std::string(tokens[0]) + "'", line_no);
    int label = 0;
    try {
      std::size_t used = 0;
      label = std::stoi(std::string(tokens[1]), &used);
      if (used != tokens[1].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError("label '" + std::string(tokens[1]) + "' is not an integer", line_no);
    }
    if (assigned & bit(*v))
      throw DomainError("labeling: vertex '" + g.name(*v) + "' labeled twice");
    assigned |= bit(*v);
    label_of[*v] = label;
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (!(assigned & bit(v))) throw DomainError("labeling: vertex '" + g.name(v) + "' has no label");
  return Labeling::from_labels(std::move(label_of));
}

}  // namespace closedgraph
