#pragma once

/**
 * K_k-removal processes and the concatenated K_4-then-K_3 sampler.
 *
 * Starting from K_n, run s4 = floor(n^2 (2 - sqrt3)/12) steps of K_4 removal,
 * then s3 - floor(n^{2-c}) steps of K_3 removal with
 * s3 = floor(n^2 (sqrt3 - 1)/6), and call every leftover edge a 2-clique.
 * A run either aborts (no clique of the required size left) or yields a
 * decomposition with exactly those clique counts.
 */

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cliquedec/decomposition.hpp"
#include "cliquedec/graph.hpp"
#include "cliquedec/parallel.hpp"
#include "cliquedec/rng.hpp"
#include "cliquedec/typicality.hpp"

namespace cliquedec {

inline auto target_four_cliques(int n) -> std::int64_t {
  const long double nn = static_cast<long double>(n) * n;
  return static_cast<std::int64_t>(std::floor(nn * (2.0L - std::sqrt(3.0L)) / 12.0L));
}

inline auto target_triangles(int n) -> std::int64_t {
  const long double nn = static_cast<long double>(n) * n;
  return static_cast<std::int64_t>(std::floor(nn * (std::sqrt(3.0L) - 1.0L) / 6.0L));
}

inline auto triangle_truncation(int n, double c) -> std::int64_t {
  return static_cast<std::int64_t>(std::floor(std::pow(static_cast<long double>(n), 2.0L - c)));
}

struct PhaseSchedule {
  std::int64_t four_clique_steps = 0;
  std::int64_t triangle_steps = 0;
};

inline auto default_schedule(int n, double c) -> PhaseSchedule {
  return {target_four_cliques(n), target_triangles(n) - triangle_truncation(n, c)};
}

inline constexpr int kFourCliquePhase = 1;
inline constexpr int kTrianglePhase = 2;

struct RemovalConfig {
  int n = 200;
  double c = 0.4;
  std::uint64_t seed = 42;
  int checkpoint_every = 0;  // 0: about 20 checkpoints over the run
  // Relative epsilon per phase; phases without an entry use the additive
  // tolerance sqrt(n) log n.
  std::map<int, double> epsilon_schedule;
  double rejection_fallback_threshold = 1e-3;
  std::optional<PhaseSchedule> schedule_override;
  int k_samples = kDefaultSamplesPerSize;
};

struct TypicalityCheckpoint {
  int phase = 0;
  std::int64_t step = 0;
  TypicalityReport report;
};

struct Aborted {
  int phase = 0;
  std::int64_t step = 0;  // 1-based step at which no clique was available
};

struct CliqueCounts {
  std::int64_t four = 0;
  std::int64_t three = 0;
  std::int64_t two = 0;
};

struct RunResult {
  std::variant<CliqueDecomposition, Aborted> outcome;
  std::vector<TypicalityCheckpoint> typicality_trace;
  CliqueCounts clique_counts;
  std::uint64_t seed = 0;
  PhaseSchedule schedule;
  double final_density = 0.0;
  std::int64_t ledger_checks = 0;
  bool ledger_ok = true;
  std::uint64_t fallback_selections = 0;

  auto succeeded() const -> bool { return std::holds_alternative<CliqueDecomposition>(outcome); }
  auto decomposition() const -> const CliqueDecomposition& { return std::get<CliqueDecomposition>(outcome); }
};

// Uniform choice of a k-clique of the current graph. Draws uniform k-subsets
// and accepts cliques; conditioned on acceptance the pick is uniform over
// the k-cliques. When the estimated acceptance p^binom(k,2) is below the
// threshold, or rejection runs too long, it counts the cliques and picks one
// by index instead, which is also exactly uniform.
class CliqueSelector {
 public:
  CliqueSelector(int k, double fallback_threshold) : k_(k), threshold_(fallback_threshold) {
    if (k < 2) throw std::invalid_argument("clique selector: k must be >= 2");
    if (!(fallback_threshold > 0.0 && fallback_threshold <= 1.0))
      throw std::invalid_argument("clique selector: fallback threshold must be in (0, 1]");
    max_attempts_ = static_cast<std::uint64_t>(std::ceil(32.0 / threshold_));
  }

  auto pick(const DenseGraph& g, Rng& rng) -> std::optional<std::vector<Vertex>> {
    const int n = g.order();
    if (k_ > n) return std::nullopt;
    const double acceptance = std::pow(g.density(), static_cast<double>(pairs(k_)));
    if (acceptance >= threshold_) {
      for (std::uint64_t attempt = 0; attempt < max_attempts_; ++attempt) {
        auto candidate = rng.sample_subset(n, k_);
        if (is_clique(g, candidate)) return candidate;
      }
    }
    ++fallbacks_;
    return pick_by_enumeration(g, rng);
  }

  auto fallbacks() const -> std::uint64_t { return fallbacks_; }

 private:
  auto pick_by_enumeration(const DenseGraph& g, Rng& rng) -> std::optional<std::vector<Vertex>> {
    std::uint64_t total = 0;
    for_each_clique(g, k_, [&](std::span<const Vertex>) {
      ++total;
      return true;
    });
    if (total == 0) return std::nullopt;
    const auto target = rng.below(total);
    std::uint64_t index = 0;
    std::vector<Vertex> chosen;
    for_each_clique(g, k_, [&](std::span<const Vertex> c) {
      if (index++ == target) {
        chosen.assign(c.begin(), c.end());
        return false;
      }
      return true;
    });
    return chosen;
  }

  int k_;
  double threshold_;
  std::uint64_t max_attempts_ = 0;
  std::uint64_t fallbacks_ = 0;
};

struct KkRemovalResult {
  DenseGraph graph;
  std::vector<Clique> removed;
  std::optional<std::int64_t> aborted_at;
};

inline auto run_kk_removal(DenseGraph g, int k, std::int64_t steps, Rng& rng,
                           double fallback_threshold = 1e-3) -> KkRemovalResult {
  if (k != 3 && k != 4) throw std::invalid_argument("run_kk_removal: k must be 3 or 4");
  if (steps < 0) throw std::invalid_argument("run_kk_removal: steps must be >= 0");
  CliqueSelector selector(k, fallback_threshold);
  KkRemovalResult result;
  for (std::int64_t t = 1; t <= steps; ++t) {
    auto clique = selector.pick(g, rng);
    if (!clique) {
      result.aborted_at = t;
      break;
    }
    remove_clique_edges(g, *clique);
    result.removed.emplace_back(std::move(*clique));
  }
  result.graph = std::move(g);
  return result;
}

namespace detail {

inline auto validate_removal_config(const RemovalConfig& cfg) -> PhaseSchedule {
  if (cfg.n < 1 || cfg.n > kMaxVertices) throw std::invalid_argument("sampler: n out of range");
  if (!(cfg.c > 0.0 && cfg.c < 1.0)) throw std::invalid_argument("sampler: c must lie in (0, 1)");
  if (cfg.checkpoint_every < 0) throw std::invalid_argument("sampler: checkpoint_every must be >= 1 (or 0 for auto)");
  if (cfg.k_samples < 1) throw std::invalid_argument("sampler: k_samples must be >= 1");
  const auto schedule = cfg.schedule_override.value_or(default_schedule(cfg.n, cfg.c));
  if (!cfg.schedule_override && schedule.triangle_steps <= 0)
    throw std::invalid_argument("sampler: n too small for c (s3 - floor(n^(2-c)) = " +
                                std::to_string(schedule.triangle_steps) + " <= 0)");
  if (schedule.four_clique_steps < 0 || schedule.triangle_steps < 0)
    throw std::invalid_argument("sampler: negative step count");
  if (6 * schedule.four_clique_steps + 3 * schedule.triangle_steps > pairs(cfg.n))
    throw std::invalid_argument("sampler: schedule removes more edges than K_n has");
  return schedule;
}

}  // namespace detail

inline auto sample_gamma_c(const RemovalConfig& cfg) -> RunResult {
  const auto schedule = detail::validate_removal_config(cfg);
  const int n = cfg.n;
  const std::int64_t all_edges = pairs(n);
  const std::int64_t total_steps = schedule.four_clique_steps + schedule.triangle_steps;
  const std::int64_t every = cfg.checkpoint_every > 0 ? cfg.checkpoint_every : std::max<std::int64_t>(1, total_steps / 20);
  const double additive = coneighborhood_tolerance(n);

  RunResult result;
  result.seed = cfg.seed;
  result.schedule = schedule;

  Rng rng(cfg.seed);
  std::uint64_t checkpoint_index = 0;
  auto g = DenseGraph::complete(n);
  CliqueDecomposition decomposition{n, {}};

  auto checkpoint = [&](int phase, std::int64_t step) {
    const int h = std::min(phase == kFourCliquePhase ? 3 : 2, n);
    if (h < 1) return;
    // Monitoring draws from its own stream so it never perturbs the process.
    const auto mode = choose_scan_mode(n, h, cfg.k_samples, derive_seed(cfg.seed, 0x7E57'0000ULL + checkpoint_index++));
    const auto eps = cfg.epsilon_schedule.find(phase);
    auto report = eps != cfg.epsilon_schedule.end() ? is_typical(g, eps->second, h, mode)
                                                    : is_typical_additive(g, additive, h, mode);
    result.typicality_trace.push_back({phase, step, std::move(report)});
  };

  auto run_phase = [&](int phase, int k, std::int64_t steps, std::int64_t edges_before) -> bool {
    CliqueSelector selector(k, cfg.rejection_fallback_threshold);
    checkpoint(phase, 0);
    for (std::int64_t t = 1; t <= steps; ++t) {
      auto clique = selector.pick(g, rng);
      if (!clique) {
        result.outcome = Aborted{phase, t};
        result.fallback_selections += selector.fallbacks();
        return false;
      }
      remove_clique_edges(g, *clique);
      decomposition.cliques.emplace_back(std::move(*clique));
      (k == 4 ? result.clique_counts.four : result.clique_counts.three) += 1;

      const std::int64_t expected = edges_before - pairs(k) * t;
      ++result.ledger_checks;
      if (g.recount_edges() != expected || g.edge_count() != expected) result.ledger_ok = false;
      if (t % every == 0 || t == steps) checkpoint(phase, t);
    }
    result.fallback_selections += selector.fallbacks();
    return true;
  };

  const bool ok = run_phase(kFourCliquePhase, 4, schedule.four_clique_steps, all_edges) &&
                  run_phase(kTrianglePhase, 3, schedule.triangle_steps, all_edges - 6 * schedule.four_clique_steps);
  result.final_density = g.density();
  if (!ok) return result;

  for (auto [u, v] : g.edges()) decomposition.cliques.push_back(Clique{u, v});
  result.clique_counts.two = g.edge_count();
  result.outcome = std::move(decomposition);
  return result;
}

struct AbortRateReport {
  int trials = 0;
  int aborted = 0;
  double abort_rate = 0.0;
  std::map<int, int> aborted_by_phase;
  double mean_min_density = 0.0;
  std::int64_t checkpoints = 0;
  std::int64_t checkpoints_passed = 0;
  bool ledger_ok = true;
  std::uint64_t seed = 0;
};

// Per-trial seeds are derive_seed(cfg.seed, t) for t = 0..trials-1.
inline auto run_trials(const RemovalConfig& cfg, int trials, int threads) -> std::vector<RunResult> {
  if (trials < 1) throw std::invalid_argument("sampler: trials must be >= 1");
  detail::validate_removal_config(cfg);
  std::vector<RunResult> runs(static_cast<std::size_t>(trials));
  parallel_for(runs.size(), threads, [&](std::size_t t) {
    RemovalConfig trial = cfg;
    trial.seed = derive_seed(cfg.seed, t);
    runs[t] = sample_gamma_c(trial);
  });
  return runs;
}

inline auto summarize_runs(const std::vector<RunResult>& runs, std::uint64_t seed) -> AbortRateReport {
  AbortRateReport report;
  report.trials = static_cast<int>(runs.size());
  report.seed = seed;
  double density_sum = 0.0;
  for (const auto& r : runs) {
    if (!r.succeeded()) {
      ++report.aborted;
      ++report.aborted_by_phase[std::get<Aborted>(r.outcome).phase];
    }
    density_sum += r.final_density;
    report.ledger_ok = report.ledger_ok && r.ledger_ok;
    for (const auto& cp : r.typicality_trace) {
      ++report.checkpoints;
      report.checkpoints_passed += cp.report.passed;
    }
  }
  if (!runs.empty()) {
    report.abort_rate = static_cast<double>(report.aborted) / static_cast<double>(runs.size());
    report.mean_min_density = density_sum / static_cast<double>(runs.size());
  }
  return report;
}

inline auto estimate_abort_rate(const RemovalConfig& cfg, int trials, int threads = 0) -> AbortRateReport {
  return summarize_runs(run_trials(cfg, trials, threads), cfg.seed);
}

}  // namespace cliquedec
