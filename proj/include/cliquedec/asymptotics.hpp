#pragma once

/**
 * Log-scale evaluation of the clique-decomposition counting bounds.
 *
 * Upper side: maximise
 *   f(s) = (1/5) s_2 log n + sum_k (s_k log C(n,k) - s_k log s_k + s_k) - C(n,2)
 * over s_k >= 0 with sum_k C(k,2) s_k = C(n,2). The stationary point is
 * s_k = C(n,k) exp(-C(k,2) lambda + tau(k)), tau(2) = (log n)/5 and
 * tau(k) = 0 otherwise, with lambda the root of the constraint.
 *
 * Lower side: sum_{k=3,4} s_k (log C(n,k) - log s_k + 1) - C(n,2) at the
 * integer counts s_3 = floor(n^2 (sqrt3 - 1)/6), s_4 = floor(n^2 (2 - sqrt3)/12).
 *
 * Binomials with real n use the falling factorial. All arithmetic is long
 * double (80-bit on x86-64) in log space.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "cliquedec/bigint.hpp"

namespace cliquedec {

using Real = long double;

inline constexpr int kMaxCutoff = 64;

namespace detail {
inline const Real kSqrt3 = std::sqrt(3.0L);
}

// log C(n, k) for real n; -inf when the falling factorial reaches zero.
inline auto log_binomial(Real n, int k) -> Real {
  if (k < 0) return -std::numeric_limits<Real>::infinity();
  Real result = 0.0L;
  for (int i = 0; i < k; ++i) {
    const Real factor = n - i;
    if (factor <= 0.0L) return -std::numeric_limits<Real>::infinity();
    result += std::log(factor) - std::log(static_cast<Real>(i + 1));
  }
  return result;
}

inline auto pair_count(int k) -> Real { return static_cast<Real>(k) * (k - 1) / 2.0L; }

inline auto tau(Real n, int k) -> Real { return k == 2 ? std::log(n) / 5.0L : 0.0L; }

// Left side of the multiplier equation divided by C(n,2):
//   [n^{1/5} C(n,2) e^{-lambda} + sum_{k=3}^L C(k,2) C(n,k) e^{-C(k,2) lambda}] / C(n,2)
// Strictly decreasing in lambda.
inline auto constraint_ratio(Real n, int cutoff, Real lambda) -> Real {
  const Real log_pairs = log_binomial(n, 2);
  Real total = 0.0L;
  for (int k = 2; k <= cutoff; ++k) {
    const Real log_term = std::log(pair_count(k)) + log_binomial(n, k) - pair_count(k) * lambda + tau(n, k) - log_pairs;
    total += std::exp(log_term);
  }
  return total;
}

inline auto check_asymptotic_args(Real n, int cutoff) -> void {
  if (!(n >= 3.0L)) throw std::invalid_argument("asymptotics: n must be >= 3");
  if (cutoff < 4 || cutoff > kMaxCutoff)
    throw std::invalid_argument("asymptotics: cutoff must lie in [4, " + std::to_string(kMaxCutoff) + "]");
}

// The unique lambda with constraint_ratio = 1, by bisection from the
// bracket (log n)/3 +- 1, widened by doubling if it fails to straddle.
inline auto solve_lambda(Real n, int cutoff) -> Real {
  check_asymptotic_args(n, cutoff);
  const Real centre = std::log(n) / 3.0L;
  Real half_width = 1.0L;
  Real lo = centre - half_width;
  Real hi = centre + half_width;
  for (int widen = 0; !(constraint_ratio(n, cutoff, lo) > 1.0L && constraint_ratio(n, cutoff, hi) < 1.0L); ++widen) {
    if (widen == 60) throw std::runtime_error("solve_lambda: could not bracket the root");
    half_width *= 2.0L;
    lo = centre - half_width;
    hi = centre + half_width;
  }
  for (int iter = 0; iter < 400; ++iter) {
    const Real mid = lo + (hi - lo) / 2.0L;
    if (mid <= lo || mid >= hi) break;
    (constraint_ratio(n, cutoff, mid) > 1.0L ? lo : hi) = mid;
  }
  const Real lam = std::abs(constraint_ratio(n, cutoff, lo) - 1.0L) <= std::abs(constraint_ratio(n, cutoff, hi) - 1.0L) ? lo : hi;
  if (std::abs(constraint_ratio(n, cutoff, lam) - 1.0L) > 1e-12L)
    throw std::runtime_error("solve_lambda: residual above 1e-12");
  return lam;
}

// s[k - 2] holds s_k. Zero entries contribute nothing (x log x -> 0).
inline auto upper_objective(Real n, std::span<const Real> s) -> Real {
  Real total = -std::exp(log_binomial(n, 2));
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int k = static_cast<int>(i) + 2;
    const Real sk = s[i];
    if (sk < 0.0L) throw std::invalid_argument("upper_objective: negative clique count");
    if (sk == 0.0L) continue;
    total += sk * (log_binomial(n, k) - std::log(sk) + 1.0L + tau(n, k));
  }
  return total;
}

struct OptimalProfile {
  Real n = 0;
  int cutoff = 0;
  Real lambda = 0;
  Real alpha = 0;  // lambda - (log n)/3
  std::vector<Real> s;  // s[k - 2] = s_k
  Real f_value = 0;

  auto count(int k) const -> Real { return k >= 2 && k <= cutoff ? s[static_cast<std::size_t>(k - 2)] : 0.0L; }
};

inline auto optimal_profile(Real n, int cutoff = 11) -> OptimalProfile {
  OptimalProfile p;
  p.n = n;
  p.cutoff = cutoff;
  p.lambda = solve_lambda(n, cutoff);
  p.alpha = p.lambda - std::log(n) / 3.0L;
  for (int k = 2; k <= cutoff; ++k) p.s.push_back(std::exp(log_binomial(n, k) - pair_count(k) * p.lambda + tau(n, k)));
  p.f_value = upper_objective(n, p.s);
  return p;
}

// Exact: int_0^x log(1 - t) dt = -(1 - x) log(1 - x) - x, for x <= 1.
inline auto integral_log_one_minus(Real x) -> Real {
  const Real rest = 1.0L - x;
  return (rest == 0.0L ? 0.0L : -rest * std::log(rest)) - x;
}

struct TelescopingCheck {
  Real a3 = 0;  // as evaluated; the triangle phase is clipped to a3 + a4 <= 1
  Real a4 = 0;
  Real a3_used = 0;
  Real four_phase = 0;      // 6 int_0^{a4/6} log(1 - 6t) dt, by quadrature
  Real triangle_phase = 0;  // 3 int_0^{a3/3} log(1 - a4 - 3t) dt, by quadrature
  Real exact = 0;           // int_0^{a3+a4} log(1 - t) dt, closed form
  auto quadrature_total() const -> Real { return four_phase + triangle_phase; }
  auto error() const -> Real { return std::abs(quadrature_total() - exact); }
};

template <typename F>
auto integrate(F f, Real a, Real b) -> Real {
  if (a == b) return 0.0L;
  boost::math::quadrature::tanh_sinh<Real> rule;
  return rule.integrate(f, a, b);
}

// a3 + a4 exceeds 1 by about 1/n at integer counts (C(n,2) < n^2/2), where
// log(1 - t) leaves its domain; a3 is clipped to 1 - a4 in that case.
// Both integrands are singular at their right end when a3 + a4 = 1, so each
// is integrated in the reflected variable u = b - t, whose integrand
// log(r + slope u) has the residual r computed exactly.
inline auto telescoping_check(Real a3, Real a4) -> TelescopingCheck {
  TelescopingCheck check;
  check.a3 = a3;
  check.a4 = a4;
  if (a4 < 0.0L || a4 > 1.0L || a3 < 0.0L) throw std::invalid_argument("telescoping_check: a3, a4 out of range");
  a3 = std::min(a3, 1.0L - a4);
  check.a3_used = a3;
  const Real four_end = a4 / 6.0L;
  const Real four_rest = 1.0L - a4;  // 1 - 6 * four_end
  check.four_phase = 6.0L * integrate([&](Real u) { return std::log(four_rest + 6.0L * u); }, 0.0L, four_end);
  const Real tri_end = a3 / 3.0L;
  const Real tri_rest = 1.0L - a4 - a3;  // 1 - a4 - 3 * tri_end
  check.triangle_phase = 3.0L * integrate([&](Real u) { return std::log(tri_rest + 3.0L * u); }, 0.0L, tri_end);
  check.exact = integral_log_one_minus(a3 + a4);
  return check;
}

struct LowerBound {
  Real n = 0;
  Real c = 0;
  Real s3 = 0;  // integer-valued
  Real s4 = 0;
  Real log_value = 0;
  Real truncated_triangles = 0;  // floor(n^{2-c}); enters only the o(n^2) slack
  TelescopingCheck telescoping;
};

inline auto lower_bound_log(Real n, Real c = 0.4L) -> LowerBound {
  if (!(n >= 10.0L)) throw std::invalid_argument("lower_bound_log: n must be >= 10");
  LowerBound lb;
  lb.n = n;
  lb.c = c;
  lb.s3 = std::floor(n * n * (detail::kSqrt3 - 1.0L) / 6.0L);
  lb.s4 = std::floor(n * n * (2.0L - detail::kSqrt3) / 12.0L);
  lb.truncated_triangles = std::floor(std::pow(n, 2.0L - c));
  const Real all_pairs = std::exp(log_binomial(n, 2));
  lb.log_value = lb.s3 * (log_binomial(n, 3) - std::log(lb.s3) + 1.0L) +
                 lb.s4 * (log_binomial(n, 4) - std::log(lb.s4) + 1.0L) - all_pairs;
  lb.telescoping = telescoping_check(3.0L * lb.s3 / all_pairs, 6.0L * lb.s4 / all_pairs);
  return lb;
}

// (1 + sqrt3)/2 * e^{sqrt3/2 - 3}, the base of the (c n)^{n^2/6} growth.
inline auto theorem_constant() -> Real {
  return (1.0L + detail::kSqrt3) / 2.0L * std::exp(detail::kSqrt3 / 2.0L - 3.0L);
}

inline auto theorem_log_constant() -> Real {
  return std::log((1.0L + detail::kSqrt3) / 2.0L) + detail::kSqrt3 / 2.0L - 3.0L;
}

struct BoundReport {
  Real n = 0;
  int cutoff = 0;
  Real upper_log = 0;
  Real lower_log = 0;
  Real leading_constant = 0;
  Real upper_constant = 0;  // exp(upper_log / (n^2/6)) / n
  Real lower_constant = 0;
  Real normalized_gap = 0;  // (upper - lower) / n^2
};

inline auto bound_report(Real n, int cutoff = 11, Real c = 0.4L) -> BoundReport {
  BoundReport r;
  r.n = n;
  r.cutoff = cutoff;
  r.upper_log = optimal_profile(n, cutoff).f_value;
  r.lower_log = lower_bound_log(n, c).log_value;
  r.leading_constant = theorem_constant();
  const Real scale = n * n / 6.0L;
  r.upper_constant = std::exp(r.upper_log / scale) / n;
  r.lower_constant = std::exp(r.lower_log / scale) / n;
  r.normalized_gap = (r.upper_log - r.lower_log) / (n * n);
  return r;
}

// b(0), ..., b(count - 1) from the Bell triangle.
inline auto bell_numbers(int count) -> std::vector<BigInt> {
  std::vector<BigInt> bell;
  if (count <= 0) return bell;
  bell.push_back(1);
  std::vector<BigInt> row{1};
  for (int m = 1; m < count; ++m) {
    std::vector<BigInt> next{row.back()};
    next.reserve(row.size() + 1);
    for (const auto& x : row) next.push_back(next.back() + x);
    bell.push_back(next.front());
    row = std::move(next);
  }
  return bell;
}

struct SmallRankCounts {
  int n = 0;
  BigInt m1 = 0;  // rank-1 matroids: 2^n - 1
  BigInt m2 = 0;  // rank-2 matroids: b(n+1) - 2^n
  std::vector<BigInt> bell;  // b(0), ..., b(n+1)
};

inline constexpr int kMaxIdentityN = 500;

inline auto small_rank_counts(int n) -> SmallRankCounts {
  if (n < 1 || n > kMaxIdentityN)
    throw std::invalid_argument("small_rank_counts: n must lie in [1, " + std::to_string(kMaxIdentityN) + "]");
  SmallRankCounts r;
  r.n = n;
  r.bell = bell_numbers(n + 2);
  const BigInt power = BigInt(1) << n;
  r.m1 = power - 1;
  r.m2 = r.bell[static_cast<std::size_t>(n + 1)] - power;
  return r;
}

}  // namespace cliquedec
