#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "closedgraph/oracle.hpp"
#include "closedgraph/structure.hpp"
#include "support/oracles.hpp"

using namespace closedgraph;
namespace oracle = closedgraph::testing;

namespace {

constexpr const char* kNotNarrow = "A B\nA C\nB C\nB E\nC E\nC F\nE F\nB D\nD E";
constexpr const char* kClaw = "c x\nc y\nc z";
constexpr const char* kSquare = "a b\nb c\nc d\nd a";

std::vector<std::string> names(const Graph& g, const std::vector<Vertex>& vs) {
  std::vector<std::string> out;
  for (Vertex v : vs) out.push_back(g.name(v));
  return out;
}

bool narrow_by_enumeration(const Graph& g) {
  const auto paths = enumerate_longest_shortest_paths(g, 1u << 20);
  EXPECT_FALSE(paths.truncated);
  for (const auto& p : paths.paths)
    for (Vertex v = 0; v < g.order(); ++v) {
      bool near = false;
      for (Vertex x : p) near = near || x == v || g.adjacent(v, x);
      if (!near) return false;
    }
  return true;
}

}  // namespace

TEST(Chordal, CalibrationGraphs) {
  const Graph square = parse_edge_list(kSquare);
  const auto v = is_chordal(square);
  ASSERT_FALSE(v);
  EXPECT_EQ(v.witness().cycle.size(), 4u);
  EXPECT_TRUE(is_valid_hole(square, v.witness()));

  EXPECT_TRUE(is_chordal(parse_edge_list(kClaw)));
  EXPECT_TRUE(is_chordal(parse_edge_list(kNotNarrow)));
}

TEST(Chordal, LongHoleWitness) {
  const Graph c6 = oracle::cycle_graph(6);
  const auto v = is_chordal(c6);
  ASSERT_FALSE(v);
  EXPECT_EQ(v.witness().cycle.size(), 6u);
  EXPECT_TRUE(is_valid_hole(c6, v.witness()));
}

TEST(Chordal, AgreesWithInducedCycleSearch) {
  for (int n = 0; n <= 6; ++n)
    oracle::for_each_graph(n, [&](const Graph& g) {
      const auto v = is_chordal(g);
      ASSERT_EQ(v.holds(), oracle::chordal(g)) << to_graph6(g);
      if (!v) {
        ASSERT_TRUE(is_valid_hole(g, v.witness())) << to_graph6(g);
      }
    });
}

TEST(Chordal456, Examples) {
  const Graph c7 = oracle::cycle_graph(7);
  ASSERT_TRUE(oracle::chordal_456(c7));  // brute force: C7's only induced cycle is itself
  EXPECT_TRUE(has_chordal_456(c7));
  EXPECT_FALSE(is_chordal(c7));

  const auto sq = has_chordal_456(parse_edge_list(kSquare));
  ASSERT_FALSE(sq);
  EXPECT_EQ(sq.witness().cycle.size(), 4u);
}

TEST(Chordal456, AgreesWithInducedCycleSearch) {
  for (int n = 0; n <= 6; ++n)
    oracle::for_each_graph(n, [&](const Graph& g) {
      const auto v = has_chordal_456(g);
      ASSERT_EQ(v.holds(), oracle::chordal_456(g)) << to_graph6(g);
      if (!v) {
        ASSERT_TRUE(is_valid_hole(g, v.witness()));
        ASSERT_LE(v.witness().cycle.size(), 6u);
      }
      if (is_chordal(g)) {
        ASSERT_TRUE(v.holds());
      }
    });
  std::mt19937_64 rng(456);
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_graph(8, 0.3, rng);
    ASSERT_EQ(has_chordal_456(g).holds(), oracle::chordal_456(g)) << to_graph6(g);
  }
}

TEST(ClawFree, CalibrationGraphs) {
  const Graph claw = parse_edge_list(kClaw);
  const auto v = is_claw_free(claw);
  ASSERT_FALSE(v);
  EXPECT_EQ(claw.name(v.witness().center), "c");
  EXPECT_EQ(names(claw, {v.witness().leaves.begin(), v.witness().leaves.end()}),
            (std::vector<std::string>{"x", "y", "z"}));

  EXPECT_TRUE(is_claw_free(parse_edge_list(kSquare)));
  EXPECT_TRUE(is_claw_free(parse_edge_list(kNotNarrow)));
}

TEST(ClawFree, AgreesWithBruteForce) {
  for (int n = 0; n <= 6; ++n)
    oracle::for_each_graph(n, [&](const Graph& g) {
      const auto v = is_claw_free(g);
      ASSERT_EQ(v.holds(), oracle::claw_free(g));
      if (!v) {
        ASSERT_TRUE(is_valid_claw(g, v.witness()));
      }
    });
}

TEST(Diameter, Examples) {
  const Graph g = parse_edge_list(kNotNarrow);
  const auto fw = oracle::all_pairs(g);
  int expected = 0;
  for (const auto& row : fw) expected = std::max(expected, *std::max_element(row.begin(), row.end()));
  ASSERT_EQ(expected, 2);
  EXPECT_EQ(diameter(g), 2);
  EXPECT_EQ(diameter(oracle::complete_graph(5)), 1);
  EXPECT_EQ(diameter(oracle::path_graph(4)), 3);
  EXPECT_EQ(diameter(parse_edge_list("solo")), 0);
}

TEST(Diameter, RejectsDisconnectedAndEmpty) {
  EXPECT_THROW(diameter(parse_edge_list("a b\nc d")), DomainError);
  EXPECT_THROW(diameter(Graph{}), DomainError);
  EXPECT_THROW(diametral_endpoints(parse_edge_list("a\nb")), DomainError);
  EXPECT_THROW(is_narrow(parse_edge_list("a\nb")), DomainError);
  EXPECT_THROW(enumerate_longest_shortest_paths(parse_edge_list("a\nb"), 5), DomainError);
}

TEST(DiametralEndpoints, Examples) {
  const Graph g = parse_edge_list(kNotNarrow);
  const auto pairs = diametral_endpoints(g);
  auto has = [&](const char* a, const char* b) {
    const Vertex u = g.index_of(a), w = g.index_of(b);
    return std::find(pairs.begin(), pairs.end(), std::pair{std::min(u, w), std::max(u, w)}) != pairs.end();
  };
  EXPECT_TRUE(has("A", "F"));
  EXPECT_TRUE(has("A", "D"));
  const auto fw = oracle::all_pairs(g);
  std::size_t expected = 0;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex w = u + 1; w < g.order(); ++w) expected += fw[u][w] == 2;
  EXPECT_EQ(pairs.size(), expected);

  EXPECT_EQ(diametral_endpoints(oracle::complete_graph(3)).size(), 3u);
  const auto path = diametral_endpoints(oracle::path_graph(4));
  ASSERT_EQ(path.size(), 1u);
  EXPECT_EQ(path[0], (std::pair<Vertex, Vertex>{0, 3}));
}

TEST(Narrow, CalibrationGraphs) {
  const Graph g = parse_edge_list(kNotNarrow);
  const auto v = is_narrow(g);
  ASSERT_FALSE(v);
  EXPECT_EQ(g.name(v.witness().vertex), "D");
  EXPECT_EQ(names(g, v.witness().path), (std::vector<std::string>{"A", "C", "F"}));
  EXPECT_EQ(g.name(v.witness().from), "A");
  EXPECT_EQ(g.name(v.witness().to), "F");
  EXPECT_TRUE(is_valid_narrow_witness(g, v.witness()));

  EXPECT_TRUE(is_narrow(parse_edge_list(kClaw)));
  EXPECT_TRUE(is_narrow(parse_edge_list(kSquare)));
  EXPECT_TRUE(is_narrow(parse_edge_list("solo")));
  EXPECT_FALSE(is_narrow(oracle::cycle_graph(7)));
}

TEST(LongestShortestPaths, Examples) {
  const auto path = enumerate_longest_shortest_paths(oracle::path_graph(4), 10);
  ASSERT_EQ(path.paths.size(), 1u);
  EXPECT_EQ(path.paths[0], (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_FALSE(path.truncated);

  // Brute force on C4: every shortest path between antipodal vertices.
  const Graph square = oracle::cycle_graph(4);
  std::size_t expected = 0;
  for (const auto& p : oracle::all_shortest_paths(square))
    if (p.size() == 3 && p.front() < p.back()) ++expected;
  ASSERT_EQ(expected, 4u);
  EXPECT_EQ(enumerate_longest_shortest_paths(square, 10).paths.size(), expected);

  const Graph g = parse_edge_list(kNotNarrow);
  const std::vector<Vertex> acf{g.index_of("A"), g.index_of("C"), g.index_of("F")};
  const auto all = enumerate_longest_shortest_paths(g, 100).paths;
  EXPECT_NE(std::find(all.begin(), all.end(), acf), all.end());
}

TEST(LongestShortestPaths, Truncation) {
  const auto out = enumerate_longest_shortest_paths(oracle::cycle_graph(4), 3);
  EXPECT_EQ(out.paths.size(), 3u);
  EXPECT_TRUE(out.truncated);
  EXPECT_THROW(enumerate_longest_shortest_paths(oracle::cycle_graph(4), 0), DomainError);
}

TEST(Narrow, AgreesWithDefinitionOracleUpToSix) {
  for (int n = 1; n <= 6; ++n)
    for_each_connected_graph(n, [&](const Graph& g) {
      const auto v = is_narrow(g);
      ASSERT_EQ(v.holds(), oracle::narrow(g)) << to_graph6(g);
      if (!v) {
        ASSERT_TRUE(is_valid_narrow_witness(g, v.witness()));
      }
    });
}

// The layered-DAG decision against explicit path enumeration on every
// connected labeled graph with at most seven vertices.
TEST(Narrow, AgreesWithPathEnumerationUpToSeven) {
  std::size_t graphs = 0;
  for (int n = 1; n <= 7; ++n)
    for_each_connected_graph(n, [&](const Graph& g) {
      ASSERT_EQ(is_narrow(g).holds(), narrow_by_enumeration(g)) << to_graph6(g);
      ++graphs;
    });
  EXPECT_EQ(graphs, 1893732u);
}

TEST(Structure, IsomorphismInvariance) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Graph g = oracle::random_graph(n, 0.45, rng);
    const bool chordal = is_chordal(g).holds();
    const bool claw_free = is_claw_free(g).holds();
    const bool connected = is_connected(g);
    const bool narrow = connected && is_narrow(g).holds();
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int p = 0; p < 100; ++p) {
      std::shuffle(perm.begin(), perm.end(), rng);
      const Graph h = reorder(g, perm);
      ASSERT_EQ(is_chordal(h).holds(), chordal);
      ASSERT_EQ(is_claw_free(h).holds(), claw_free);
      if (connected) {
        ASSERT_EQ(is_narrow(h).holds(), narrow);
      }
    }
  }
}
