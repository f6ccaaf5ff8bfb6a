#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "closedgraph/closed.hpp"
#include "closedgraph/graph.hpp"
#include "closedgraph/labeling.hpp"
#include "closedgraph/structure.hpp"

namespace closedgraph {

// ---------------------------------------------------------------------------
// Closed-labeling search

namespace detail {

// Backtracking over connected graphs. Labels are handed out in increasing
// order; a vertex may take the next label only if the partial labeling can
// still satisfy "N^>(i) is complete and equals [i+1, i+|N^>(i)|]" for every
// labeled i. The constraints are exact, so every complete assignment is a
// closed labeling and every closed labeling is reached.
class ClosedSearch {
 public:
  // on_leaf receives each closed labeling as a vertex order (label i + 1 at
  // position i) and returns false to stop the search.
  using Visitor = std::function<bool(const std::vector<Vertex>&)>;

  explicit ClosedSearch(const Graph& g) : g_(g), order_(g.order()) {}

  std::optional<Labeling> find_one() {
    std::optional<Labeling> out;
    run([&](const std::vector<Vertex>& order) {
      out = Labeling::from_order(order);
      return false;
    });
    return out;
  }

  std::uint64_t count() {
    std::uint64_t total = 0;
    run([&](const std::vector<Vertex>&) {
      ++total;
      return true;
    });
    return total;
  }

  void run(const Visitor& on_leaf) {
    on_leaf_ = &on_leaf;
    stopped_ = false;
    if (g_.order() == 0) {
      on_leaf(order_);
      return;
    }
    for (Vertex v = 0; v < g_.order() && !stopped_; ++v) {
      order_[0] = v;
      extend(1, bit(v), bit(v));
    }
  }

 private:
  // `labeled`: vertices carrying labels 1..t. `open`: labeled vertices
  // adjacent to every vertex labeled after them.
  void extend(int t, VertexMask labeled, VertexMask open) {
    if (t == g_.order()) {
      stopped_ = !(*on_leaf_)(order_);
      return;
    }
    const VertexMask unlabeled = g_.all() & ~labeled;
    for (VertexMask cand = unlabeled; cand != 0 && !stopped_; cand &= cand - 1) {
      const Vertex v = lowest(cand);
      const VertexMask labeled_nbrs = g_.neighbors(v) & labeled;
      if (labeled_nbrs == 0) continue;
      if ((labeled_nbrs & ~open) != 0) continue;
      // Every vertex labeled at or after v's smallest-labeled neighbor must be
      // adjacent to v.
      int first_pos = t;
      for (int p = 0; p < t; ++p)
        if (labeled_nbrs & bit(order_[p])) {
          first_pos = p;
          break;
        }
      bool ok = true;
      for (int p = first_pos; p < t && ok; ++p) ok = (labeled_nbrs & bit(order_[p])) != 0;
      if (!ok) continue;
      // Open vertices not adjacent to v close now; they must be saturated.
      const VertexMask remaining = unlabeled & ~bit(v);
      for_each_vertex(open & ~g_.neighbors(v), [&](Vertex w) {
        ok = ok && (g_.neighbors(w) & remaining) == 0;
      });
      if (!ok) continue;
      order_[t] = v;
      extend(t + 1, labeled | bit(v), (open & g_.neighbors(v)) | bit(v));
    }
  }

  const Graph& g_;
  std::vector<Vertex> order_;
  const Visitor* on_leaf_ = nullptr;
  bool stopped_ = false;
};

inline std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

/// Composes per-component labelings into one labeling in which component c
/// occupies a consecutive block of labels, blocks in component order.
inline Labeling compose_blocks(const Graph& g, const std::vector<std::vector<Vertex>>& components,
                               const std::vector<Labeling>& parts) {
  std::vector<Vertex> order;
  order.reserve(g.order());
  for (std::size_t c = 0; c < components.size(); ++c)
    for (int label = 1; label <= parts[c].size(); ++label)
      order.push_back(components[c].at(parts[c].vertex(label)));
  return Labeling::from_order(order);
}

/// A closed labeling of g, or nullopt if g is not closed. Disconnected
/// graphs are searched component by component and composed block-wise.
inline std::optional<Labeling> find_closed_labeling(const Graph& g) {
  if (is_connected(g) || g.empty()) return detail::ClosedSearch(g).find_one();
  const auto comps = connected_components(g);
  std::vector<Labeling> parts;
  for (const auto& comp : comps) {
    const Graph sub = induced_subgraph(g, comp);
    auto lab = detail::ClosedSearch(sub).find_one();
    if (!lab) return std::nullopt;
    parts.push_back(std::move(*lab));
  }
  return compose_blocks(g, comps, parts);
}

/// Calls f(labeling) for every closed labeling of a connected graph; f
/// returns false to stop early.
inline void for_each_closed_labeling(const Graph& g, const std::function<bool(const Labeling&)>& f) {
  detail::require_connected(g, "for_each_closed_labeling");
  detail::ClosedSearch(g).run(
      [&](const std::vector<Vertex>& order) { return f(Labeling::from_order(order)); });
}

inline constexpr int kMaxCountOrder = 9;

/// Exact number of closed labelings. A labeling of a disconnected graph is
/// closed iff its restriction to each component is, so the count is the
/// product of component counts times the number of interleavings.
inline std::uint64_t count_closed_labelings(const Graph& g) {
  if (g.order() > kMaxCountOrder)
    throw GuardError("count_closed_labelings: n = " + std::to_string(g.order()) +
                     " exceeds the limit of " + std::to_string(kMaxCountOrder));
  if (is_connected(g) || g.empty()) return detail::ClosedSearch(g).count();
  std::uint64_t total = 1;
  int placed = 0;
  for (const auto& comp : connected_components(g)) {
    const Graph sub = induced_subgraph(g, comp);
    total *= detail::ClosedSearch(sub).count();
    placed += sub.order();
    total *= detail::binomial(placed, sub.order());
  }
  return total;
}

// ---------------------------------------------------------------------------
// Small-graph enumeration

inline constexpr int kMaxEnumerationOrder = 7;

/// Calls f(g) for every connected labeled graph on vertices 0..n-1, in order
/// of the edge-subset bitmask (bit k = k-th pair in graph6 column order).
/// Only masks m with m / block_size = b (mod stride), b = offset, are visited;
/// the defaults visit everything.
inline void for_each_connected_graph(int n, const std::function<void(const Graph&)>& f,
                                     std::uint64_t offset = 0, std::uint64_t stride = 1,
                                     std::uint64_t block_size = 4096) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw GuardError("enumerate_connected_graphs: n must be in 1.." +
                     std::to_string(kMaxEnumerationOrder));
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  const VertexMask everyone = prefix_mask(n);
  std::vector<VertexMask> adj(n);

  for (std::uint64_t block = offset; block * block_size < total; block += stride) {
    const std::uint64_t end = std::min(total, (block + 1) * block_size);
    for (std::uint64_t m = block * block_size; m < end; ++m) {
      std::fill(adj.begin(), adj.end(), 0);
      for (std::uint64_t rest = m; rest != 0; rest &= rest - 1) {
        const auto [i, j] = pairs[std::countr_zero(rest)];
        adj[i] |= bit(j);
        adj[j] |= bit(i);
      }
      VertexMask seen = 1, frontier = 1;
      while (frontier != 0) {
        VertexMask next = 0;
        for_each_vertex(frontier, [&](Vertex v) { next |= adj[v]; });
        frontier = next & ~seen;
        seen |= frontier;
      }
      if (seen != everyone) continue;
      f(Graph::from_adjacency(adj));
    }
  }
}

inline std::vector<Graph> enumerate_connected_graphs(int n) {
  std::vector<Graph> out;
  for_each_connected_graph(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

// ---------------------------------------------------------------------------
// Per-graph classification

struct GraphClass {
  bool connected = false;
  bool chordal = false;
  bool claw_free = false;
  bool narrow = false;  // every component narrow
  bool weak_456 = false;
  bool closed = false;  // by exhaustive search

  bool triple() const noexcept { return chordal && claw_free && narrow; }
  bool weak_triple() const noexcept { return weak_456 && claw_free && narrow; }

  /// e.g. "chordal+claw-free+narrow+weak-456+closed", or "none".
  std::string key() const {
    std::string out;
    auto add = [&](bool on, const char* name) {
      if (!on) return;
      if (!out.empty()) out += '+';
      out += name;
    };
    add(chordal, "chordal");
    add(claw_free, "claw-free");
    add(narrow, "narrow");
    add(weak_456, "weak-456");
    add(closed, "closed");
    return out.empty() ? "none" : out;
  }
};

inline bool all_components_narrow(const Graph& g) {
  if (is_connected(g)) return is_narrow(g).holds();
  for (const auto& comp : connected_components(g))
    if (!is_narrow(induced_subgraph(g, comp))) return false;
  return true;
}

inline GraphClass classify(const Graph& g) {
  GraphClass c;
  c.connected = is_connected(g);
  c.chordal = is_chordal(g).holds();
  c.weak_456 = c.chordal || has_chordal_456(g).holds();
  c.claw_free = is_claw_free(g).holds();
  c.narrow = all_components_narrow(g);
  c.closed = find_closed_labeling(g).has_value();
  return c;
}

/// The labeling algorithm on every component, composed block-wise.
struct ComponentLabeling {
  std::vector<std::vector<Vertex>> components;
  std::vector<Graph> subgraphs;
  std::vector<LabelingRun> runs;
  Labeling labeling;
};

inline ComponentLabeling label_by_components(const Graph& g, const TieBreak& tb = TieBreak::min_id()) {
  ComponentLabeling out;
  out.components = connected_components(g);
  std::vector<Labeling> parts;
  for (const auto& comp : out.components) {
    out.subgraphs.push_back(induced_subgraph(g, comp));
    out.runs.push_back(algorithm1_label(out.subgraphs.back(), tb));
    parts.push_back(out.runs.back().labeling);
  }
  out.labeling = compose_blocks(g, out.components, parts);
  return out;
}

// ---------------------------------------------------------------------------
// Sweep

struct SweepOptions {
  bool weak_chordal = false;
  int tie_trials = 5;
  int jobs = 1;
};

struct Counterexample {
  std::string graph6;
  std::string failure;

  friend auto operator<=>(const Counterexample&, const Counterexample&) = default;
};

struct SweepReport {
  int max_n = 0;
  bool weak_chordal = false;
  int tie_trials = 0;
  std::uint64_t graphs_examined = 0;
  std::map<int, std::uint64_t> examined_by_order;
  std::map<std::string, std::uint64_t> classes;
  std::uint64_t labelings_certified = 0;
  std::vector<Counterexample> counterexamples;
  std::chrono::duration<double> elapsed{0};

  bool ok() const noexcept { return counterexamples.empty(); }

  std::uint64_t count_where(const std::function<bool(const std::string&)>& pred) const {
    std::uint64_t total = 0;
    for (const auto& [key, count] : classes)
      if (pred(key)) total += count;
    return total;
  }

  void merge(const SweepReport& other) {
    graphs_examined += other.graphs_examined;
    for (const auto& [n, c] : other.examined_by_order) examined_by_order[n] += c;
    for (const auto& [k, c] : other.classes) classes[k] += c;
    labelings_certified += other.labelings_certified;
    counterexamples.insert(counterexamples.end(), other.counterexamples.begin(),
                           other.counterexamples.end());
  }

  void finalize() {
    std::sort(counterexamples.begin(), counterexamples.end());
    counterexamples.erase(std::unique(counterexamples.begin(), counterexamples.end()),
                          counterexamples.end());
  }
};

namespace detail {

inline std::string tie_name(const TieBreak& tb) {
  return tb.is_seeded() ? "seed " + std::to_string(tb.seed()) : "min-id";
}

// Runs every check on one graph and accumulates into `report`.
inline void sweep_one(const Graph& g, const SweepOptions& options, SweepReport& report) {
  const GraphClass c = classify(g);
  ++report.graphs_examined;
  ++report.examined_by_order[g.order()];
  ++report.classes[c.key()];

  auto fail = [&](std::string what) { report.counterexamples.push_back({to_graph6(g), std::move(what)}); };

  const char* triple_name = c.connected ? "closed iff chordal, claw-free and narrow"
                                        : "closed iff chordal, claw-free and components narrow";
  if (c.closed != c.triple()) fail(triple_name);
  if (options.weak_chordal && c.closed != c.weak_triple())
    fail("closed iff 4/5/6-cycles chorded, claw-free and narrow");
  if (!c.triple() || g.empty()) return;

  for (int trial = 0; trial <= options.tie_trials; ++trial) {
    const TieBreak tb = trial == 0 ? TieBreak::min_id() : TieBreak::seeded(trial);
    const ComponentLabeling run = label_by_components(g, tb);
    if (!is_closed_by_definition(g, run.labeling)) {
      fail("algorithm labeling not closed (" + tie_name(tb) + ")");
      continue;
    }
    ++report.labelings_certified;
    for (std::size_t k = 0; k < run.runs.size(); ++k) {
      const Graph& sub = run.subgraphs[k];
      const LabelingRun& r = run.runs[k];
      const std::string where = " (" + tie_name(tb) + ")";
      if (!check_closed_layer_properties(sub, r.labeling).passed()) fail("layer properties" + where);
      if (!check_l_minimality(sub, r.labeling, r.l)) fail("l(i) = min N(i)" + where);
      if (!check_l_order(r.l)) fail("l(t) < l(s) implies t < s" + where);
      if (!check_l_layers(sub, r.labeling, r.l)) fail("l(t) in previous layer" + where);
      if (!check_layer_monotonicity(sub, r.labeling)) fail("labels increase across layers" + where);
    }
  }
}

}  // namespace detail

/// Exhaustive check over every connected labeled graph with 1..max_n vertices.
inline SweepReport sweep_theorem(int max_n, const SweepOptions& options = {}) {
  if (max_n < 1 || max_n > kMaxEnumerationOrder)
    throw GuardError("sweep: max_n must be in 1.." + std::to_string(kMaxEnumerationOrder));
  if (options.tie_trials < 0) throw GuardError("sweep: tie_trials must be >= 0");
  if (options.jobs < 1) throw GuardError("sweep: jobs must be >= 1");

  const auto start = std::chrono::steady_clock::now();
  const auto jobs = static_cast<std::uint64_t>(options.jobs);
  std::vector<SweepReport> partial(jobs);
  auto work = [&](std::uint64_t w) {
    for (int n = 1; n <= max_n; ++n)
      for_each_connected_graph(
          n, [&](const Graph& g) { detail::sweep_one(g, options, partial[w]); }, w, jobs);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> workers;
    for (std::uint64_t w = 0; w < jobs; ++w) workers.emplace_back(work, w);
  }

  SweepReport report;
  report.max_n = max_n;
  report.weak_chordal = options.weak_chordal;
  report.tie_trials = options.tie_trials;
  for (const auto& p : partial) report.merge(p);
  report.finalize();
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

/// Same checks over graphs read from a graph6 stream (one per line; blank
/// lines skipped). Disconnected graphs are checked component-wise.
inline SweepReport sweep_graph6(std::istream& in, const SweepOptions& options = {}) {
  if (options.tie_trials < 0) throw GuardError("sweep: tie_trials must be >= 0");
  const auto start = std::chrono::steady_clock::now();
  SweepReport report;
  report.weak_chordal = options.weak_chordal;
  report.tie_trials = options.tie_trials;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::split_tokens(line).empty()) continue;
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    report.max_n = std::max(report.max_n, g.order());
    detail::sweep_one(g, options, report);
  }
  report.finalize();
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace closedgraph
