#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "closedgraph/closed.hpp"
#include "closedgraph/oracle.hpp"
#include "support/oracles.hpp"

using namespace closedgraph;
namespace oracle = closedgraph::testing;

namespace {

constexpr const char* kNotNarrow = "A B\nA C\nB C\nB E\nC E\nC F\nE F\nB D\nD E";

using Kind = ClosedViolation::Kind;

// Labels assigned by sorted vertex name, e.g. A..F -> 1..6.
Labeling by_name(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.name(a) < g.name(b); });
  return Labeling::from_order(order);
}

Graph random_connected(int n, std::mt19937_64& rng) {
  for (;;) {
    Graph g = oracle::random_graph(n, 0.45, rng);
    if (oracle::connected(g)) return g;
  }
}

// Compares the three verifiers on one labeling and checks witnesses.
void expect_equivalent(const Graph& g, const std::vector<int>& label_of) {
  const Labeling lab = Labeling::from_labels(label_of);
  const auto def = is_closed_by_definition(g, lab);
  const auto paths = is_closed_by_directed_paths(g, lab);
  const auto intervals = is_closed_by_intervals(g, lab);
  ASSERT_EQ(def.holds(), oracle::closed_by_definition(g, label_of)) << to_graph6(g);
  ASSERT_EQ(paths.holds(), def.holds()) << to_graph6(g);
  ASSERT_EQ(intervals.holds(), def.holds()) << to_graph6(g);
  if (!def) {
    ASSERT_TRUE(is_valid_fork(g, lab, def.witness()));
  }
}

}  // namespace

TEST(ClosedByDefinition, PathExamples) {
  const Graph p = parse_edge_list("a b\nb c");
  EXPECT_TRUE(is_closed_by_definition(p, Labeling::from_labels({1, 2, 3})));

  const auto v = is_closed_by_definition(p, Labeling::from_labels({2, 1, 3}));
  ASSERT_FALSE(v);
  EXPECT_EQ(v.witness().kind, Kind::fork);
  EXPECT_EQ(v.witness().triple, (std::array<int, 3>{2, 1, 3}));
}

TEST(ClosedByDefinition, CompleteGraphAlwaysClosed) {
  const Graph k4 = oracle::complete_graph(4);
  oracle::for_each_labeling(4, [&](const std::vector<int>& l) {
    EXPECT_TRUE(is_closed_by_definition(k4, Labeling::from_labels(l)));
  });
}

TEST(ClosedByDefinition, AcceptsDisconnectedAndRejectsMismatch) {
  const Graph g = parse_edge_list("a b\nc d");
  EXPECT_TRUE(is_closed_by_definition(g, Labeling::from_labels({1, 3, 2, 4})));
  EXPECT_THROW(is_closed_by_definition(g, Labeling::identity(3)), DomainError);
}

TEST(ClosedByDefinition, ReportsSmallestTriple) {
  // Claw with center labeled 1: every leaf pair is a fork; (2, 1, 3) is least.
  const Graph claw = parse_edge_list("c x\nc y\nc z");
  const auto v = is_closed_by_definition(claw, Labeling::from_labels({1, 2, 3, 4}));
  ASSERT_FALSE(v);
  EXPECT_EQ(v.witness().triple, (std::array<int, 3>{2, 1, 3}));
}

TEST(ClosedByDirectedPaths, Examples) {
  EXPECT_TRUE(is_closed_by_directed_paths(oracle::path_graph(4), Labeling::identity(4)));

  const Graph c4 = oracle::cycle_graph(4);
  std::size_t closed = 0;
  oracle::for_each_labeling(4, [&](const std::vector<int>& l) {
    ASSERT_FALSE(oracle::all_shortest_paths_directed(c4, l));
    const auto v = is_closed_by_directed_paths(c4, Labeling::from_labels(l));
    if (v) {
      ++closed;
    } else {
      EXPECT_EQ(v.witness().kind, Kind::non_directed_path);
    }
  });
  EXPECT_EQ(closed, 0u);

  const Graph g = parse_edge_list(kNotNarrow);
  oracle::for_each_labeling(6, [&](const std::vector<int>& l) {
    ASSERT_FALSE(is_closed_by_directed_paths(g, Labeling::from_labels(l)));
  });

  EXPECT_THROW(is_closed_by_directed_paths(parse_edge_list("a\nb"), Labeling::identity(2)), DomainError);
}

TEST(ClosedByDirectedPaths, WitnessIsANonDirectedShortestPath) {
  const Graph c4 = oracle::cycle_graph(4);
  const Labeling lab = Labeling::identity(4);
  const auto v = is_closed_by_directed_paths(c4, lab);
  ASSERT_FALSE(v);
  const auto& path = v.witness().path;
  ASSERT_GE(path.size(), 3u);
  const DistanceMatrix d(c4);
  const Vertex s = lab.vertex(path.front()), t = lab.vertex(path.back());
  EXPECT_EQ(d(s, t) + 1, static_cast<int>(path.size()));
  bool up = true, down = true;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    EXPECT_TRUE(c4.adjacent(lab.vertex(path[k]), lab.vertex(path[k + 1])));
    up = up && path[k] < path[k + 1];
    down = down && path[k] > path[k + 1];
  }
  EXPECT_FALSE(up || down);
}

TEST(ClosedByIntervals, Examples) {
  EXPECT_TRUE(is_closed_by_intervals(oracle::path_graph(4), Labeling::identity(4)));
  EXPECT_TRUE(is_closed_by_intervals(oracle::complete_graph(5), Labeling::identity(5)));

  const Graph p = parse_edge_list("a b\nb c");
  const auto fork = is_closed_by_intervals(p, Labeling::from_labels({2, 1, 3}));
  ASSERT_FALSE(fork);
  EXPECT_EQ(fork.witness().kind, Kind::fork);
  EXPECT_EQ(fork.witness().triple, (std::array<int, 3>{2, 1, 3}));

  // a=1, b=3, c=2: N^>(1) = {3} skips 2.
  const auto gap = is_closed_by_intervals(p, Labeling::from_labels({1, 3, 2}));
  ASSERT_FALSE(gap);
  EXPECT_EQ(gap.witness().kind, Kind::interval_gap);
  EXPECT_EQ(gap.witness().label, 1);
  EXPECT_EQ(gap.witness().missing, 2);
}

TEST(UpperNeighborhood, Examples) {
  EXPECT_EQ(upper_neighborhood(oracle::path_graph(4), Labeling::identity(4), 2), (std::vector<int>{3}));
  EXPECT_EQ(upper_neighborhood(oracle::complete_graph(3), Labeling::identity(3), 1),
            (std::vector<int>{2, 3}));

  const Graph g = parse_edge_list(kNotNarrow);
  const Labeling lab = by_name(g);
  ASSERT_EQ(lab.vertex(2), g.index_of("B"));
  EXPECT_EQ(upper_neighborhood(g, lab, 2), (std::vector<int>{3, 4, 5}));

  EXPECT_THROW(upper_neighborhood(g, lab, 0), DomainError);
  EXPECT_THROW(upper_neighborhood(g, lab, 7), DomainError);
}

TEST(ClosedLayerProperties, Examples) {
  const auto path = check_closed_layer_properties(oracle::path_graph(4), Labeling::identity(4));
  EXPECT_TRUE(path.passed());
  EXPECT_EQ(path.height, 3);
  EXPECT_EQ(path.diameter, 3);

  const auto k3 = check_closed_layer_properties(oracle::complete_graph(3), Labeling::identity(3));
  EXPECT_TRUE(k3.passed());
  EXPECT_EQ(k3.height, 1);

  EXPECT_THROW(check_closed_layer_properties(oracle::path_graph(3), Labeling::from_labels({2, 1, 3})),
               DomainError);
}

// All n! labelings of every connected graph with n <= 5.
TEST(ClosedCharacterizations, AgreeExhaustively) {
  std::size_t labelings = 0;
  for (int n = 1; n <= 5; ++n)
    for_each_connected_graph(n, [&](const Graph& g) {
      oracle::for_each_labeling(n, [&](const std::vector<int>& l) {
        expect_equivalent(g, l);
        ++labelings;
      });
    });
  // 1*1 + 1*2 + 4*6 + 38*24 + 728*120
  EXPECT_EQ(labelings, 1u + 2 + 24 + 912 + 87360);
}

TEST(ClosedCharacterizations, AgreeOnRandomLabelings) {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Graph g = random_connected(n, rng);
    expect_equivalent(g, oracle::random_labels(n, rng));
  }
}

// Random labelings are almost never closed, so also compare on closed ones.
TEST(ClosedCharacterizations, AgreeOnClosedLabelingsOfRandomGraphs) {
  std::mt19937_64 rng(82);
  int seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = random_connected(8, rng);
    const auto lab = find_closed_labeling(g);
    if (!lab) continue;
    ++seen;
    ASSERT_TRUE(is_closed_by_directed_paths(g, *lab));
    ASSERT_TRUE(is_closed_by_intervals(g, *lab));
    ASSERT_TRUE(oracle::all_shortest_paths_directed(g, {lab->labels().begin(), lab->labels().end()}));
  }
  EXPECT_GT(seen, 0);
}

TEST(ClosedByDirectedPaths, MatchesExplicitEnumeration) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Graph g = random_connected(n, rng);
    const auto l = oracle::random_labels(n, rng);
    ASSERT_EQ(is_closed_by_directed_paths(g, Labeling::from_labels(l)).holds(),
              oracle::all_shortest_paths_directed(g, l))
        << to_graph6(g);
  }
}

// Every closed labeling of every connected graph with n <= 6: the graph is
// chordal, claw-free and narrow, and the layer structure holds.
TEST(ClosedLabelings, ImplyStructureAndLayerProperties) {
  std::size_t closed = 0;
  for (int n = 1; n <= 6; ++n)
    for_each_connected_graph(n, [&](const Graph& g) {
      bool any = false;
      for_each_closed_labeling(g, [&](const Labeling& lab) {
        EXPECT_TRUE(is_closed_by_definition(g, lab));
        const auto report = check_closed_layer_properties(g, lab);
        EXPECT_TRUE(report.passed()) << to_graph6(g) << ": " << report.failures.front();
        any = true;
        ++closed;
        return true;
      });
      if (any) {
        EXPECT_TRUE(is_chordal(g)) << to_graph6(g);
        EXPECT_TRUE(is_claw_free(g)) << to_graph6(g);
        EXPECT_TRUE(is_narrow(g)) << to_graph6(g);
      }
    });
  EXPECT_GT(closed, 0u);
}
