#include <gtest/gtest.h>

#include <limits>

#include "cliquedec/graph.hpp"
#include "cliquedec/rng.hpp"
#include "cliquedec/typicality.hpp"
#include "oracles.hpp"

using namespace cliquedec;

namespace {

auto cycle5() -> DenseGraph {
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
  return DenseGraph::from_edges(5, e);
}

auto k6_minus_matching() -> DenseGraph {
  auto g = DenseGraph::complete(6);
  g.remove_edge(0, 1);
  g.remove_edge(2, 3);
  g.remove_edge(4, 5);
  return g;
}

auto random_graph(int n, double p, Rng& rng) -> DenseGraph {
  DenseGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform01() < p) g.add_edge(u, v);
  return g;
}

auto vec(std::initializer_list<Vertex> v) { return std::vector<Vertex>(v); }

}  // namespace

TEST(DenseGraph, CompleteGraphInvariants) {
  auto g = DenseGraph::complete(7);
  EXPECT_EQ(g.edge_count(), 21);
  EXPECT_EQ(g.recount_edges(), 21);
  EXPECT_DOUBLE_EQ(g.density(), 1.0);
  for (int v = 0; v < 7; ++v) EXPECT_FALSE(g.adjacent(v, v));
}

TEST(DenseGraph, RejectsSelfLoopsAndRange) {
  DenseGraph g(4);
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 4), std::invalid_argument);
  EXPECT_THROW(g.remove_edge(0, 1), PreconditionViolation);
}

TEST(CommonNeighborhood, Examples) {
  EXPECT_EQ(common_neighborhood(DenseGraph::complete(5), vec({0, 1})), vec({2, 3, 4}));
  EXPECT_TRUE(common_neighborhood(DenseGraph(5), vec({0})).empty());
  EXPECT_EQ(common_neighborhood(cycle5(), vec({0, 2})), vec({1}));
}

TEST(CommonNeighborhood, Errors) {
  const auto g = DenseGraph::complete(5);
  EXPECT_THROW(common_neighborhood(g, {}), std::invalid_argument);
  EXPECT_THROW(common_neighborhood(g, vec({0, 5})), std::invalid_argument);
}

TEST(CommonNeighborhood, LiteralIntersectionKeepsAdjacentMembers) {
  // 0 and 1 are both adjacent to 2; 2's own row never contains 2.
  std::vector<Edge> e{{0, 1}, {0, 2}, {1, 2}};
  const auto g = DenseGraph::from_edges(3, e);
  EXPECT_EQ(common_neighborhood(g, vec({0})), vec({1, 2}));
  EXPECT_EQ(common_neighborhood(g, vec({0, 1})), vec({2}));
}

TEST(CommonNeighborhood, MonotoneUnderInclusion) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_graph(12, 0.6, rng);
    auto a = rng.sample_subset(12, 4);
    std::size_t prev = std::numeric_limits<std::size_t>::max();
    for (std::size_t len = 1; len <= a.size(); ++len) {
      const auto size = common_neighborhood(g, std::span<const Vertex>(a.data(), len)).size();
      EXPECT_LE(size, prev);
      prev = size;
    }
  }
}

TEST(CountCliques, Examples) {
  EXPECT_EQ(count_cliques(DenseGraph::complete(5), 3), 10);
  EXPECT_EQ(count_cliques(cycle5(), 3), 0);
  EXPECT_EQ(count_cliques(k6_minus_matching(), 3), 8);
  EXPECT_EQ(count_cliques(DenseGraph::complete(5), 1), 5);
  EXPECT_EQ(count_cliques(cycle5(), 2), 5);
  EXPECT_EQ(count_cliques(DenseGraph::complete(5), 6), 0);
  EXPECT_THROW(count_cliques(cycle5(), 0), std::invalid_argument);
}

TEST(CountCliques, MatchesBruteForceOnRandomGraphs) {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(8));
    const double p = 0.2 + 0.75 * rng.uniform01();
    const auto g = random_graph(n, p, rng);
    for (int k = 1; k <= n + 1; ++k)
      ASSERT_EQ(count_cliques(g, k), oracle::brute_clique_count(g, k)) << "n=" << n << " k=" << k;
  }
}

TEST(CountCliques, LargeCompleteGraphIsExact) {
  // C(64,8) = 4426165368 exceeds 32 bits.
  EXPECT_EQ(to_decimal(count_cliques(DenseGraph::complete(64), 8)), "4426165368");
}

TEST(RemoveCliqueEdges, Examples) {
  auto g = DenseGraph::complete(4);
  remove_clique_edges(g, vec({0, 1, 2, 3}));
  EXPECT_EQ(g.edge_count(), 0);

  const auto star = without_clique_edges(DenseGraph::complete(4), vec({0, 1, 2}));
  const std::vector<Edge> expected{{0, 3}, {1, 3}, {2, 3}};
  EXPECT_EQ(star.edges(), expected);

  const auto k5 = without_clique_edges(DenseGraph::complete(5), vec({0, 1}));
  EXPECT_EQ(k5.edge_count(), 9);
  EXPECT_FALSE(k5.adjacent(0, 1));
}

TEST(RemoveCliqueEdges, MissingEdgeIsPreconditionViolation) {
  auto g = DenseGraph::complete(4);
  g.remove_edge(1, 2);
  EXPECT_THROW(remove_clique_edges(g, vec({0, 1, 2})), PreconditionViolation);
  EXPECT_EQ(g.edge_count(), 5);  // untouched
}

TEST(RemoveCliqueEdges, LedgerIsExact) {
  Rng rng(5);
  auto g = DenseGraph::complete(30);
  for (int step = 0; step < 40; ++step) {
    auto c = rng.sample_subset(30, 3);
    if (!is_clique(g, c)) continue;
    const auto before = g.edge_count();
    remove_clique_edges(g, c);
    EXPECT_EQ(g.edge_count(), before - 3);
    EXPECT_EQ(g.recount_edges(), g.edge_count());
  }
}

TEST(Typicality, CompleteGraphPassesAtHOverN) {
  for (int n : {5, 9, 20})
    for (int h = 1; h <= 3; ++h) {
      const auto r = is_typical(DenseGraph::complete(n), static_cast<double>(h) / n, h, ExhaustiveScan{});
      EXPECT_TRUE(r.passed) << n << ' ' << h;
      EXPECT_NEAR(r.worst_relative_deviation, static_cast<double>(h) / n, 1e-12);
    }
}

TEST(Typicality, EmptyGraphPasses) {
  const auto r = is_typical(DenseGraph(8), 0.1, 2, ExhaustiveScan{});
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.worst_relative_deviation, 0.0);
}

TEST(Typicality, SixVertexMatchingComplement) {
  const auto r = is_typical(k6_minus_matching(), 0.5, 1, ExhaustiveScan{});
  EXPECT_TRUE(r.passed);
  EXPECT_NEAR(r.worst_relative_deviation, 1.0 / 6.0, 1e-12);
  EXPECT_EQ(r.sets_checked, 6u);
}

TEST(Typicality, InfiniteAndZeroEpsilon) {
  Rng rng(3);
  const auto g = random_graph(10, 0.5, rng);
  EXPECT_TRUE(is_typical(g, std::numeric_limits<double>::infinity(), 3, ExhaustiveScan{}).passed);
  // Exact predictions are only met by the empty graph here.
  EXPECT_TRUE(is_typical(DenseGraph(10), 0.0, 3, ExhaustiveScan{}).passed);
  EXPECT_FALSE(is_typical(DenseGraph::complete(10), 0.0, 1, ExhaustiveScan{}).passed);
}

TEST(Typicality, ArgumentErrors) {
  const auto g = DenseGraph::complete(4);
  EXPECT_THROW(is_typical(g, 0.1, 5, ExhaustiveScan{}), std::invalid_argument);
  EXPECT_THROW(is_typical(g, 0.1, 0, ExhaustiveScan{}), std::invalid_argument);
}

TEST(Typicality, ModeSelection) {
  EXPECT_TRUE(std::holds_alternative<ExhaustiveScan>(choose_scan_mode(50, 3, 200, 1)));    // 19600 sets
  EXPECT_TRUE(std::holds_alternative<SampledScan>(choose_scan_mode(200, 3, 200, 1)));    // 1313400 sets
}

TEST(Typicality, SampledModeIsSeededAndBounded) {
  Rng rng(8);
  const auto g = random_graph(60, 0.7, rng);
  const auto a = is_typical(g, 0.5, 3, SampledScan{50, 9});
  const auto b = is_typical(g, 0.5, 3, SampledScan{50, 9});
  EXPECT_EQ(a.worst_set, b.worst_set);
  EXPECT_EQ(a.worst_relative_deviation, b.worst_relative_deviation);
  EXPECT_FALSE(a.exhaustive);
  EXPECT_LE(a.sets_checked, 150u);
  const auto full = is_typical(g, 0.5, 3, ExhaustiveScan{});
  EXPECT_LE(a.worst_relative_deviation, full.worst_relative_deviation + 1e-15);
}
