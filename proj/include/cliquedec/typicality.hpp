#pragma once

/**
 * Co-neighbourhood deviation scans and the (epsilon, h)-typicality check.
 *
 * A graph G with density p is (epsilon, h)-typical when every vertex set A
 * with 1 <= |A| <= h has (1 +- epsilon) p^|A| n common neighbours. The
 * common neighbourhood is the literal intersection of adjacency rows, so for
 * K_n the count is n - |A| against a prediction of n.
 *
 * scan_coneighborhoods() is the shared engine: it walks the probed sets and
 * compares each intersection size against a caller-supplied prediction and
 * tolerance, both functions of |A| only.
 */

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "cliquedec/graph.hpp"
#include "cliquedec/rng.hpp"

namespace cliquedec {

struct ExhaustiveScan {};

// k_samples uniform sets per subset size. Sizes with at most k_samples
// subsets are enumerated in full instead.
struct SampledScan {
  int k_samples = 200;
  std::uint64_t seed = 0;
};

using ScanMode = std::variant<ExhaustiveScan, SampledScan>;

inline constexpr double kExhaustiveSetLimit = 1e5;
inline constexpr int kDefaultSamplesPerSize = 200;

// binom(n, k) as a double; exact for the magnitudes compared against limits.
inline auto binomial_double(int n, int k) -> double {
  if (k < 0 || k > n) return 0.0;
  double result = 1.0;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

// Exhaustive when binom(n, h) <= 1e5, sampled otherwise.
inline auto choose_scan_mode(int n, int h, int k_samples, std::uint64_t seed) -> ScanMode {
  if (binomial_double(n, h) <= kExhaustiveSetLimit) return ExhaustiveScan{};
  return SampledScan{k_samples, seed};
}

// sqrt(n) log n, the additive co-neighbourhood deviation allowed for
// quasirandom graphs arising from random orderings and removal processes.
inline auto coneighborhood_tolerance(int n) -> double {
  return n < 2 ? 0.0 : std::sqrt(static_cast<double>(n)) * std::log(static_cast<double>(n));
}

struct CoNeighborhoodScan {
  std::uint64_t sets_checked = 0;
  double worst_relative = 0.0;  // |actual - predicted| / predicted
  double worst_absolute = 0.0;  // |actual - predicted|
  double worst_excess = 0.0;    // |actual - predicted| / tolerance; <= 1 passes
  std::vector<Vertex> worst_relative_set;
  std::vector<Vertex> worst_absolute_set;
  std::vector<Vertex> worst_excess_set;
  bool exhaustive = false;

  auto passed() const -> bool { return worst_excess <= 1.0; }
};

namespace detail {

inline auto ratio(double deviation, double scale) -> double {
  if (deviation == 0.0) return 0.0;
  if (scale == 0.0) return std::numeric_limits<double>::infinity();
  return deviation / scale;
}

template <typename Predict, typename Tolerance>
class ScanAccumulator {
 public:
  ScanAccumulator(Predict& predict, Tolerance& tolerance, int h) : predict_(predict), tolerance_(tolerance) {
    for (int s = 0; s <= h; ++s) {
      const double p = predict_(s);
      predicted_.push_back(p);
      tolerances_.push_back(tolerance_(s, p));
    }
  }

  auto record(const std::vector<Vertex>& set, int actual) -> void {
    const auto s = set.size();
    const double predicted = predicted_[s];
    const double deviation = std::abs(static_cast<double>(actual) - predicted);
    const double relative = ratio(deviation, predicted);
    const double excess = ratio(deviation, tolerances_[s]);
    ++scan.sets_checked;
    if (relative > scan.worst_relative || scan.worst_relative_set.empty()) {
      scan.worst_relative = relative;
      scan.worst_relative_set = set;
    }
    if (deviation > scan.worst_absolute || scan.worst_absolute_set.empty()) {
      scan.worst_absolute = deviation;
      scan.worst_absolute_set = set;
    }
    if (excess > scan.worst_excess || scan.worst_excess_set.empty()) {
      scan.worst_excess = excess;
      scan.worst_excess_set = set;
    }
  }

  CoNeighborhoodScan scan;

 private:
  Predict& predict_;
  Tolerance& tolerance_;
  std::vector<double> predicted_;
  std::vector<double> tolerances_;
};

template <typename Acc>
auto scan_all_subsets(const DenseGraph& g, int min_size, int max_size, Acc& acc) -> void {
  const int n = g.order();
  std::vector<Vertex> set;
  auto recurse = [&](auto&& self, Vertex start, const Bitset* intersection) -> void {
    for (Vertex v = start; v < n; ++v) {
      Bitset next = intersection ? (*intersection & g.neighbors(v)) : g.neighbors(v);
      set.push_back(v);
      if (static_cast<int>(set.size()) >= min_size) acc.record(set, next.count());
      if (static_cast<int>(set.size()) < max_size) self(self, v + 1, &next);
      set.pop_back();
    }
  };
  recurse(recurse, 0, nullptr);
}

inline auto validate_scan_args(const DenseGraph& g, int h) -> void {
  if (h < 1) throw std::invalid_argument("typicality: h must be >= 1");
  if (h > g.order()) throw std::invalid_argument("typicality: h exceeds vertex count");
}

}  // namespace detail

// predict(s) gives the expected common-neighbourhood size of an s-set and
// tolerance(s, predicted) the allowed absolute deviation.
template <typename Predict, typename Tolerance>
auto scan_coneighborhoods(const DenseGraph& g, int h, const ScanMode& mode, Predict predict,
                          Tolerance tolerance) -> CoNeighborhoodScan {
  detail::validate_scan_args(g, h);
  detail::ScanAccumulator<Predict, Tolerance> acc(predict, tolerance, h);
  const int n = g.order();

  if (std::holds_alternative<ExhaustiveScan>(mode)) {
    detail::scan_all_subsets(g, 1, h, acc);
    acc.scan.exhaustive = true;
    return acc.scan;
  }

  const auto& sampled = std::get<SampledScan>(mode);
  if (sampled.k_samples < 1) throw std::invalid_argument("typicality: k_samples must be >= 1");
  Rng rng(sampled.seed);
  for (int s = 1; s <= h; ++s) {
    if (binomial_double(n, s) <= sampled.k_samples) {
      detail::scan_all_subsets(g, s, s, acc);
      continue;
    }
    for (int i = 0; i < sampled.k_samples; ++i) {
      const auto set = rng.sample_subset(n, s);
      acc.record(set, common_neighborhood_bits(g, set).count());
    }
  }
  return acc.scan;
}

struct TypicalityReport {
  double epsilon = 0.0;                       // relative tolerance (relative mode)
  std::optional<double> additive_tolerance;  // set in additive mode
  int h = 0;
  double density = 0.0;
  double worst_relative_deviation = 0.0;
  double worst_absolute_deviation = 0.0;
  std::vector<Vertex> worst_set;
  std::uint64_t sets_checked = 0;
  bool exhaustive = false;
  bool passed = false;
};

// Relative (epsilon, h)-typicality: a set passes when
// | |cap N(w)| - p^|A| n | <= epsilon p^|A| n.
inline auto is_typical(const DenseGraph& g, double epsilon, int h, const ScanMode& mode) -> TypicalityReport {
  if (!(epsilon >= 0.0)) throw std::invalid_argument("typicality: epsilon must be >= 0");
  const double p = g.density();
  const double n = g.order();
  auto predict = [&](int s) { return std::pow(p, s) * n; };
  auto tolerance = [&](int, double predicted) { return predicted == 0.0 ? 0.0 : epsilon * predicted; };
  const auto scan = scan_coneighborhoods(g, h, mode, predict, tolerance);

  TypicalityReport report;
  report.epsilon = epsilon;
  report.h = h;
  report.density = p;
  report.worst_relative_deviation = scan.worst_relative;
  report.worst_absolute_deviation = scan.worst_absolute;
  report.worst_set = scan.worst_relative_set;
  report.sets_checked = scan.sets_checked;
  report.exhaustive = scan.exhaustive;
  report.passed = scan.worst_relative <= epsilon;
  return report;
}

// Additive variant: a set passes when | |cap N(w)| - p^|A| n | <= tolerance.
inline auto is_typical_additive(const DenseGraph& g, double tolerance, int h, const ScanMode& mode)
    -> TypicalityReport {
  if (!(tolerance >= 0.0)) throw std::invalid_argument("typicality: tolerance must be >= 0");
  const double p = g.density();
  const double n = g.order();
  auto predict = [&](int s) { return std::pow(p, s) * n; };
  auto tol = [&](int, double) { return tolerance; };
  const auto scan = scan_coneighborhoods(g, h, mode, predict, tol);

  TypicalityReport report;
  // Equivalent relative tolerance at the smallest prediction, |A| = h.
  const double smallest = predict(h);
  report.epsilon = smallest > 0.0 ? tolerance / smallest : std::numeric_limits<double>::infinity();
  report.additive_tolerance = tolerance;
  report.h = h;
  report.density = p;
  report.worst_relative_deviation = scan.worst_relative;
  report.worst_absolute_deviation = scan.worst_absolute;
  report.worst_set = scan.worst_absolute_set;
  report.sets_checked = scan.sets_checked;
  report.exhaustive = scan.exhaustive;
  report.passed = scan.worst_absolute <= tolerance;
  return report;
}

}  // namespace cliquedec
