#include <gtest/gtest.h>

#include <algorithm>

#include "cliquedec/decomposition.hpp"
#include "cliquedec/io.hpp"
#include "cliquedec/order_experiment.hpp"
#include "cliquedec/rng.hpp"

using namespace cliquedec;

namespace {

auto all_edges(int n) -> CliqueDecomposition {
  CliqueDecomposition d{n, {}};
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) d.cliques.push_back(Clique{u, v});
  return d;
}

auto fano() -> CliqueDecomposition {
  return {7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}}};
}

auto has_violation(const ValidationResult& r, Violation::Kind kind, Edge e) -> bool {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const Violation& v) { return v.kind == kind && v.edge == e; });
}

}  // namespace

TEST(Validate, Examples) {
  EXPECT_TRUE(validate({3, {{0, 1, 2}}}).ok());
  const auto missing = validate({3, {{0, 1}, {0, 2}}});
  ASSERT_FALSE(missing.ok());
  EXPECT_EQ(missing.violations.size(), 1u);
  EXPECT_TRUE(has_violation(missing, Violation::Kind::uncovered_edge, {1, 2}));
  EXPECT_TRUE(validate({4, {{0, 1, 2}, {0, 3}, {1, 3}, {2, 3}}}).ok());
  EXPECT_TRUE(validate(fano()).ok());
}

TEST(Validate, ReportsEveryKind) {
  const auto r = validate({4, {{0, 1, 2}, {0, 1, 3}, {2}, {1, 5}, {2, 2, 3}}});
  EXPECT_TRUE(has_violation(r, Violation::Kind::repeated_edge, {0, 1}));
  auto count = [&](Violation::Kind k) {
    return std::count_if(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.kind == k; });
  };
  EXPECT_GE(count(Violation::Kind::undersized_clique), 1);
  EXPECT_GE(count(Violation::Kind::vertex_out_of_range), 1);
  EXPECT_GE(count(Violation::Kind::repeated_vertex), 1);
}

TEST(Validate, EmptyGroundSets) {
  EXPECT_TRUE(validate({0, {}}).ok());
  EXPECT_TRUE(validate({1, {}}).ok());
  EXPECT_FALSE(validate({2, {}}).ok());
}

TEST(Profile, Examples) {
  const auto k4 = profile({4, {{0, 1, 2, 3}}}, 11);
  EXPECT_EQ(k4.s(4), 1);
  EXPECT_EQ(k4.clique_total(), 1);
  EXPECT_EQ(k4.oversized_edges, 0);

  const auto pairs6 = profile(all_edges(4), 11);
  EXPECT_EQ(pairs6.s(2), 6);
  EXPECT_EQ(pairs6.oversized_edges, 0);

  CliqueDecomposition big{13, {Clique(std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12})}};
  const auto p13 = profile(big, 11);
  EXPECT_EQ(p13.clique_total(), 0);
  EXPECT_EQ(p13.oversized_edges, 78);
}

TEST(Profile, ErrorsAndInvariant) {
  EXPECT_THROW(profile({3, {{0, 1}}}, 11), std::invalid_argument);
  EXPECT_THROW(profile(fano(), 1), std::invalid_argument);
  for (int cutoff : {2, 3, 5, 11}) {
    const auto p = profile(fano(), cutoff);
    EXPECT_EQ(p.covered_edges(), 21);
  }
}

TEST(Profile, PermutationInvariant) {
  auto d = fano();
  const auto base = profile(d, 11);
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    rng.shuffle(std::span<Clique>(d.cliques));
    EXPECT_EQ(profile(d, 11), base);
  }
}

TEST(Decomposition, CanonicalFormAndJsonRoundTrip) {
  CliqueDecomposition d{4, {{3, 2}, {1, 0, 2}, {3, 0}, {3, 1}}};
  const auto j = to_json(d);
  EXPECT_EQ(j.dump(), R"({"n":4,"cliques":[[0,1,2],[0,3],[1,3],[2,3]]})");
  EXPECT_EQ(decomposition_from_json(j), d.canonical());
  EXPECT_EQ(decomposition_from_json(Json::parse(R"({"n":4,"cliques":[[2,3],[3,0],[3,1],[2,0,1]]})")).canonical(),
            d.canonical());
  EXPECT_THROW(decomposition_from_json(Json::parse(R"({"n":4})")), Json::exception);
}

TEST(Decomposition, UncoveredGraph) {
  const auto g = uncovered_graph(fano(), 3);
  EXPECT_EQ(g.edge_count(), 21 - 9);
  EXPECT_FALSE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(1, 3));
}

TEST(OrderExperiment, SingleTriangle) {
  OrderExperimentConfig cfg;
  cfg.trials = 10;
  const auto r = random_order_experiment({3, {{0, 1, 2}}}, cfg);
  EXPECT_EQ(r.trials, 10);
  EXPECT_EQ(r.coneighborhood_pass_rate, 1.0);
  EXPECT_EQ(r.window_pass_rate, 1.0);
}

TEST(OrderExperiment, AllEdgesOfK30) {
  OrderExperimentConfig cfg;
  cfg.trials = 100;
  cfg.checkpoints = 2;  // probes m = 0, N/2, N
  const auto r = random_order_experiment(all_edges(30), cfg);
  EXPECT_GE(r.coneighborhood_pass_rate, 0.95);
  EXPECT_GE(r.window_pass_rate, 0.95);
}

TEST(OrderExperiment, PrefixZeroDeviatesByAtMostSetSize) {
  // G_0 = K_n: every A has n - |A| common neighbours against prediction n.
  const auto d = all_edges(12);
  const auto g = uncovered_graph(d, 0);
  std::vector<Vertex> a;
  for (int size = 1; size <= 4; ++size) {
    a.push_back(size * 2);
    const auto actual = static_cast<double>(common_neighborhood(g, a).size());
    EXPECT_LE(std::abs(actual - 12.0), static_cast<double>(a.size()));
  }
  const auto scan = scan_coneighborhoods(
      g, 4, ExhaustiveScan{}, [](int) { return 12.0; }, [](int size, double) { return static_cast<double>(size); });
  EXPECT_TRUE(scan.passed());
  EXPECT_EQ(scan.sets_checked, 12u + 66u + 220u + 495u);
}

TEST(OrderExperiment, DeterministicAcrossThreadCounts) {
  OrderExperimentConfig cfg;
  cfg.trials = 12;
  cfg.threads = 1;
  const auto a = to_json(random_order_experiment(fano(), cfg));
  cfg.threads = 3;
  const auto b = to_json(random_order_experiment(fano(), cfg));
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(OrderExperiment, CheckpointPrefixes) {
  EXPECT_EQ(checkpoint_prefixes(10, 5), (std::vector<std::size_t>{0, 2, 4, 6, 8, 10}));
  EXPECT_EQ(checkpoint_prefixes(3, 20), (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(checkpoint_prefixes(0, 4), (std::vector<std::size_t>{0}));
}
