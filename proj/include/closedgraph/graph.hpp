#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "closedgraph/errors.hpp"

namespace closedgraph {

/// Dense vertex index, 0..n-1 in the graph's fixed vertex order.
using Vertex = int;

/// Vertex set as a bitmask over dense indices.
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexMask bit(Vertex v) noexcept {
  return VertexMask{1} << v;
}

inline constexpr VertexMask prefix_mask(int n) noexcept {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

inline int popcount(VertexMask m) noexcept { return std::popcount(m); }

inline Vertex lowest(VertexMask m) noexcept { return std::countr_zero(m); }

/// Calls f(v) for every vertex in m in increasing index order.
template <class F>
void for_each_vertex(VertexMask m, F&& f) {
  while (m != 0) {
    f(lowest(m));
    m &= m - 1;
  }
}

inline std::vector<Vertex> to_vertices(VertexMask m) {
  std::vector<Vertex> out;
  out.reserve(popcount(m));
  for_each_vertex(m, [&](Vertex v) { out.push_back(v); });
  return out;
}

class GraphBuilder;

/// Immutable simple undirected graph with named vertices.
///
/// Vertex names are opaque tokens; algorithms work on the dense index given
/// by first-appearance order. That order is also the tie-breaking order
/// ("smallest identifier") used throughout the library.
class Graph {
 public:
  Graph() = default;

  int order() const noexcept { return static_cast<int>(names_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool empty() const noexcept { return names_.empty(); }

  const std::string& name(Vertex v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<Vertex> find(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<Vertex>(it - names_.begin());
  }

  Vertex index_of(std::string_view name) const {
    if (auto v = find(name)) return *v;
    throw DomainError("unknown vertex '" + std::string(name) + "'");
  }

  bool contains(Vertex v) const noexcept { return v >= 0 && v < order(); }

  VertexMask all() const noexcept { return prefix_mask(order()); }
  VertexMask neighbors(Vertex v) const { return adjacency_.at(v); }
  VertexMask closed_neighbors(Vertex v) const { return neighbors(v) | bit(v); }
  bool adjacent(Vertex u, Vertex v) const { return (adjacency_.at(u) & bit(v)) != 0; }
  int degree(Vertex v) const { return popcount(adjacency_.at(v)); }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
      for_each_vertex(adjacency_[u] & ~prefix_mask(u + 1),
                      [&](Vertex w) { out.emplace_back(u, w); });
    return out;
  }

  /// Builds the graph on vertices 0..n-1 named "0".."n-1" from raw masks.
  static Graph from_adjacency(std::vector<VertexMask> adjacency);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  std::vector<std::string> names_;
  std::vector<VertexMask> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Accumulates vertices and edges; duplicate edges collapse.
class GraphBuilder {
 public:
  Vertex add_vertex(std::string_view name) {
    if (auto v = find(name)) return *v;
    if (static_cast<int>(names_.size()) == kMaxVertices)
      throw UnsupportedSize("graphs are limited to " +
                            std::to_string(kMaxVertices) + " vertices");
    names_.emplace_back(name);
    adjacency_.push_back(0);
    return static_cast<Vertex>(names_.size() - 1);
  }

  void add_edge(Vertex u, Vertex v) {
    if (u == v) throw DomainError("self-loop on vertex '" + names_.at(u) + "'");
    adjacency_.at(u) |= bit(v);
    adjacency_.at(v) |= bit(u);
  }

  void add_edge(std::string_view u, std::string_view v) {
    if (u == v) throw DomainError("self-loop on vertex '" + std::string(u) + "'");
    Vertex a = add_vertex(u);
    Vertex b = add_vertex(v);
    add_edge(a, b);
  }

  Graph build() && {
    Graph g;
    std::size_t degree_sum = 0;
    for (VertexMask m : adjacency_) degree_sum += popcount(m);
    g.names_ = std::move(names_);
    g.adjacency_ = std::move(adjacency_);
    g.edge_count_ = degree_sum / 2;
    return g;
  }

 private:
  std::optional<Vertex> find(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<Vertex>(it - names_.begin());
  }

  std::vector<std::string> names_;
  std::vector<VertexMask> adjacency_;
};

inline Graph Graph::from_adjacency(std::vector<VertexMask> adjacency) {
  const int n = static_cast<int>(adjacency.size());
  if (n > kMaxVertices)
    throw UnsupportedSize("graphs are limited to " +
                          std::to_string(kMaxVertices) + " vertices");
  Graph g;
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < n; ++v) {
    const VertexMask m = adjacency[v];
    if (m & bit(v)) throw DomainError("self-loop in adjacency masks");
    if (m & ~prefix_mask(n)) throw DomainError("adjacency mask out of range");
    for_each_vertex(m, [&](Vertex w) {
      if (!(adjacency[w] & bit(v))) throw DomainError("asymmetric adjacency masks");
    });
    degree_sum += popcount(m);
  }
  g.names_.reserve(n);
  for (Vertex v = 0; v < n; ++v) g.names_.push_back(std::to_string(v));
  g.adjacency_ = std::move(adjacency);
  g.edge_count_ = degree_sum / 2;
  return g;
}

/// True when adjacency is symmetric and loop-free and edge_count matches.
inline bool is_well_formed(const Graph& g) {
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const VertexMask m = g.neighbors(v);
    if (m & bit(v)) return false;
    if (m & ~g.all()) return false;
    bool symmetric = true;
    for_each_vertex(m, [&](Vertex w) { symmetric = symmetric && g.adjacent(w, v); });
    if (!symmetric) return false;
    degree_sum += popcount(m);
  }
  return degree_sum == 2 * g.edge_count();
}

/// Induced subgraph on `keep`, preserving names and relative vertex order.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  GraphBuilder b;
  for (Vertex v : keep) b.add_vertex(g.name(v));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j]))
        b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return std::move(b).build();
}

/// Same graph with vertex order permuted: new vertex k is old vertex order[k].
inline Graph reorder(const Graph& g, std::span<const Vertex> order) {
  if (static_cast<int>(order.size()) != g.order())
    throw DomainError("reorder: permutation size mismatch");
  VertexMask seen = 0;
  for (Vertex v : order) {
    if (!g.contains(v) || (seen & bit(v))) throw DomainError("reorder: not a permutation");
    seen |= bit(v);
  }
  return induced_subgraph(g, order);
}

// ---------------------------------------------------------------------------
// Edge-list text format

namespace detail {

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

}  // namespace detail

/// Reads "u v" edge lines and "u" isolated-vertex lines. Blank lines and
/// lines whose first non-space character is '#' are skipped.
inline Graph parse_edge_list(std::istream& in) {
  GraphBuilder b;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = detail::split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() > 2)
      throw ParseError("expected 'u v' or 'u', got " +
                           std::to_string(tokens.size()) + " tokens",
                       line_no);
    if (tokens.size() == 2 && tokens[0] == tokens[1])
      throw ParseError("self-loop on vertex '" + std::string(tokens[0]) + "'", line_no);
    try {
      if (tokens.size() == 1)
        b.add_vertex(tokens[0]);
      else
        b.add_edge(tokens[0], tokens[1]);
    } catch (const UnsupportedSize& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return std::move(b).build();
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

// ---------------------------------------------------------------------------
// graph6 (short form, n <= 62)

inline constexpr int kGraph6MaxOrder = 62;

/// Decodes one graph6 line. Vertices are named "0".."n-1".
inline Graph parse_graph6(std::string_view line) {
  constexpr std::string_view header = ">>graph6<<";
  if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
    line.remove_suffix(1);
  if (line.empty()) throw ParseError("graph6: empty string", 0);
  for (char c : line) {
    const auto u = static_cast<unsigned char>(c);
    if (u < 63 || u > 126)
      throw ParseError(std::string("graph6: invalid character '") + c + "'", 0);
  }
  if (line.front() == '~')
    throw UnsupportedSize("graph6: only the short form (n <= 62) is supported");

  const int n = line.front() - 63;
  const std::string_view body = line.substr(1);
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (body.size() < need) throw ParseError("graph6: truncated bit vector", 0);
  if (body.size() > need) throw ParseError("graph6: trailing characters", 0);

  std::vector<VertexMask> adjacency(n, 0);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int group = body[k / 6] - 63;
      if (group & (1 << (5 - k % 6))) {
        adjacency[i] |= bit(j);
        adjacency[j] |= bit(i);
      }
    }
  }
  if (need > 0) {
    const int last = body.back() - 63;
    const int pad = static_cast<int>(need * 6 - bits);
    if (last & ((1 << pad) - 1)) throw ParseError("graph6: nonzero padding bits", 0);
  }
  return Graph::from_adjacency(std::move(adjacency));
}

/// Canonical graph6 string of g under its own vertex order.
inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder)
    throw UnsupportedSize("graph6: short form supports at most 62 vertices");
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int group = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
  return out;
}

// ---------------------------------------------------------------------------
// Distances and connectivity

struct DistanceMap {
  static constexpr int kUnreachable = -1;

  Vertex source = 0;
  std::vector<int> dist;

  bool reachable(Vertex v) const { return dist.at(v) != kUnreachable; }
  int operator[](Vertex v) const { return dist.at(v); }
};

namespace detail {

// Layered BFS over masks. Writes distances into dist (size n, pre-filled by
// the caller is not required). Returns the eccentricity within the component.
inline int bfs_into(const Graph& g, Vertex source, std::span<int> dist) {
  std::fill(dist.begin(), dist.end(), DistanceMap::kUnreachable);
  VertexMask seen = bit(source);
  VertexMask frontier = seen;
  int depth = 0;
  dist[source] = 0;
  while (true) {
    VertexMask next = 0;
    for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbors(v); });
    next &= ~seen;
    if (next == 0) return depth;
    ++depth;
    for_each_vertex(next, [&](Vertex v) { dist[v] = depth; });
    seen |= next;
    frontier = next;
  }
}

inline VertexMask component_of(const Graph& g, Vertex source) {
  VertexMask seen = bit(source);
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbors(v); });
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen;
}

}  // namespace detail

inline DistanceMap bfs_distances(const Graph& g, Vertex source) {
  if (!g.contains(source))
    throw DomainError("bfs_distances: unknown source vertex " + std::to_string(source));
  DistanceMap m;
  m.source = source;
  m.dist.resize(g.order());
  detail::bfs_into(g, source, m.dist);
  return m;
}

inline DistanceMap bfs_distances(const Graph& g, std::string_view source) {
  return bfs_distances(g, g.index_of(source));
}

/// All-pairs shortest-path distances, row-major n x n.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g)
      : n_(g.order()), dist_(static_cast<std::size_t>(n_) * n_) {
    for (Vertex s = 0; s < n_; ++s)
      detail::bfs_into(g, s, std::span<int>(dist_).subspan(static_cast<std::size_t>(s) * n_, n_));
  }

  int order() const noexcept { return n_; }
  int operator()(Vertex u, Vertex v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
  std::span<const int> row(Vertex u) const {
    return std::span<const int>(dist_).subspan(static_cast<std::size_t>(u) * n_, n_);
  }

 private:
  int n_;
  std::vector<int> dist_;
};

inline bool is_connected(const Graph& g) {
  return g.order() > 0 && detail::component_of(g, 0) == g.all();
}

/// Maximal connected vertex sets, ordered by their first vertex; each lists
/// its members in vertex order.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> parts;
  VertexMask rest = g.all();
  while (rest != 0) {
    const VertexMask comp = detail::component_of(g, lowest(rest));
    parts.push_back(to_vertices(comp));
    rest &= ~comp;
  }
  return parts;
}

inline bool is_complete_on(const Graph& g, VertexMask s) {
  bool complete = true;
  for_each_vertex(s, [&](Vertex v) {
    complete = complete && (s & ~bit(v) & ~g.neighbors(v)) == 0;
  });
  return complete;
}

inline bool is_complete_on(const Graph& g, std::span<const Vertex> s) {
  VertexMask m = 0;
  for (Vertex v : s) {
    if (!g.contains(v)) throw DomainError("is_complete_on: unknown vertex");
    m |= bit(v);
  }
  return is_complete_on(g, m);
}

}  // namespace closedgraph
