#pragma once

/**
 * Empirical check of the random-ordering concentration properties: for a
 * fixed decomposition with N cliques, take a uniformly random ordering and
 * look at G_m, the edges not covered by the first m cliques.
 *
 *   co-neighbourhood: | |cap_{w in A} N_{G_m}(w)| - (1 - m/N)^|A| n |
 *                       <= sqrt(n) log n + |A|
 *   window:           | #{k-cliques at positions m+1..m'} - s_k (m' - m)/N |
 *                       <= n log n
 *
 * The extra |A| in the first bound absorbs the literal-intersection effect
 * (A's own vertices never count). Windows are taken between consecutive
 * checkpoints only.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cliquedec/decomposition.hpp"
#include "cliquedec/parallel.hpp"
#include "cliquedec/rng.hpp"
#include "cliquedec/typicality.hpp"

namespace cliquedec {

struct OrderExperimentConfig {
  int trials = 100;
  int checkpoints = 20;
  int h = 3;
  std::uint64_t seed = 42;
  int k_samples = kDefaultSamplesPerSize;
  int threads = 0;
};

struct OrderExperimentReport {
  int trials = 0;
  int checkpoints = 0;
  int h = 0;
  std::uint64_t seed = 0;
  double coneighborhood_tolerance = 0.0;  // sqrt(n) log n, before the +|A| term
  double window_tolerance = 0.0;          // n log n
  double coneighborhood_pass_rate = 0.0;  // fraction of trials with every probe passing
  double window_pass_rate = 0.0;
  double worst_coneighborhood_excess = 0.0;  // max deviation / tolerance
  double worst_window_excess = 0.0;
  std::uint64_t sets_checked = 0;
};

struct OrderTrialOutcome {
  bool coneighborhood_passed = true;
  bool window_passed = true;
  double worst_coneighborhood_excess = 0.0;
  double worst_window_excess = 0.0;
  std::uint64_t sets_checked = 0;
};

// Checkpoint prefixes 0 = m_0 < m_1 < ... = N, evenly spaced.
inline auto checkpoint_prefixes(std::size_t total, int checkpoints) -> std::vector<std::size_t> {
  std::vector<std::size_t> out;
  for (int j = 0; j <= checkpoints; ++j) {
    const auto m = static_cast<std::size_t>(
        (static_cast<unsigned __int128>(total) * static_cast<unsigned>(j)) / static_cast<unsigned>(checkpoints));
    if (out.empty() || out.back() != m) out.push_back(m);
  }
  return out;
}

inline auto window_tolerance(int n) -> double {
  return n < 2 ? 0.0 : static_cast<double>(n) * std::log(static_cast<double>(n));
}

// One trial over a given ordering of the decomposition's cliques.
inline auto run_order_trial(const CliqueDecomposition& d, const std::vector<std::size_t>& order,
                            const OrderExperimentConfig& cfg, std::uint64_t trial_seed) -> OrderTrialOutcome {
  OrderTrialOutcome out;
  const int n = d.n;
  const std::size_t total = order.size();
  const int h = std::min(cfg.h, n);
  const double base_tol = coneighborhood_tolerance(n);
  const double win_tol = window_tolerance(n);

  const auto histogram = size_histogram(d);
  const auto prefixes = checkpoint_prefixes(total, cfg.checkpoints);

  auto g = DenseGraph::complete(n);
  std::size_t removed = 0;
  for (std::size_t c = 0; c < prefixes.size(); ++c) {
    const std::size_t m = prefixes[c];
    std::vector<std::int64_t> window_counts(histogram.size(), 0);
    for (; removed < m; ++removed) {
      const auto& clique = d.cliques[order[removed]];
      remove_clique_edges(g, clique.vertices());
      ++window_counts[static_cast<std::size_t>(clique.size())];
    }
    if (c > 0) {
      const double span = static_cast<double>(m - prefixes[c - 1]);
      for (std::size_t k = 2; k < histogram.size(); ++k) {
        const double expected = static_cast<double>(histogram[k]) * span / static_cast<double>(total);
        const double dev = std::abs(static_cast<double>(window_counts[k]) - expected);
        const double excess = detail::ratio(dev, win_tol);
        out.worst_window_excess = std::max(out.worst_window_excess, excess);
        if (excess > 1.0) out.window_passed = false;
      }
    }
    if (h >= 1) {
      const double keep = total == 0 ? 1.0 : 1.0 - static_cast<double>(m) / static_cast<double>(total);
      auto predict = [&](int s) { return std::pow(keep, s) * n; };
      auto tolerance = [&](int s, double) { return base_tol + s; };
      const auto mode = choose_scan_mode(n, h, cfg.k_samples, derive_seed(trial_seed, c));
      const auto scan = scan_coneighborhoods(g, h, mode, predict, tolerance);
      out.sets_checked += scan.sets_checked;
      out.worst_coneighborhood_excess = std::max(out.worst_coneighborhood_excess, scan.worst_excess);
      if (!scan.passed()) out.coneighborhood_passed = false;
    }
  }
  return out;
}

inline auto random_order_experiment(const CliqueDecomposition& d, const OrderExperimentConfig& cfg)
    -> OrderExperimentReport {
  if (cfg.trials < 1) throw std::invalid_argument("order experiment: trials must be >= 1");
  if (cfg.checkpoints < 1) throw std::invalid_argument("order experiment: checkpoints must be >= 1");
  if (cfg.h < 1) throw std::invalid_argument("order experiment: h must be >= 1");
  if (!validate(d)) throw std::invalid_argument("order experiment: decomposition is not valid");

  std::vector<OrderTrialOutcome> outcomes(static_cast<std::size_t>(cfg.trials));
  parallel_for(outcomes.size(), cfg.threads, [&](std::size_t t) {
    const auto trial_seed = derive_seed(cfg.seed, t);
    Rng rng(trial_seed);
    std::vector<std::size_t> order(d.cliques.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    rng.shuffle(std::span<std::size_t>(order));
    outcomes[t] = run_order_trial(d, order, cfg, rng.next());
  });

  OrderExperimentReport report;
  report.trials = cfg.trials;
  report.checkpoints = cfg.checkpoints;
  report.h = cfg.h;
  report.seed = cfg.seed;
  report.coneighborhood_tolerance = coneighborhood_tolerance(d.n);
  report.window_tolerance = window_tolerance(d.n);
  int co_pass = 0;
  int win_pass = 0;
  for (const auto& o : outcomes) {
    co_pass += o.coneighborhood_passed;
    win_pass += o.window_passed;
    report.worst_coneighborhood_excess = std::max(report.worst_coneighborhood_excess, o.worst_coneighborhood_excess);
    report.worst_window_excess = std::max(report.worst_window_excess, o.worst_window_excess);
    report.sets_checked += o.sets_checked;
  }
  report.coneighborhood_pass_rate = static_cast<double>(co_pass) / cfg.trials;
  report.window_pass_rate = static_cast<double>(win_pass) / cfg.trials;
  return report;
}

}  // namespace cliquedec
