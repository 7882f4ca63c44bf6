#include <gtest/gtest.h>

#include <cmath>

#include "cliquedec/asymptotics.hpp"
#include "cliquedec/rng.hpp"
#include "oracles.hpp"

using namespace cliquedec;

namespace {

// Reference values from an independent 60-digit mpmath evaluation, L = 11.
struct Frozen {
  Real n, lambda, f, s2, s3, s4, lower;
};
const Frozen kFrozen[] = {
    {1e2L, 1.7822946218014214593L, 6824.872201437676155296L, 2092.0134846029168397L, 770.17224155267967777L,
     88.956450712512491972L, 4634.775792364184565063L},
    {1e3L, 2.511641842928920865L, 1017072.38919536440218L, 161340.46327997033793L, 88749.967037339752781L,
     11814.811272968618886L, 847609.0670919190766182L},
    {1e6L, 4.7484472484764125719L, 2068981934704.091866519L, 68666534924.07054498L, 108436161037.78783397L,
     17637601530.884309138L, 1998906886645.311807636L},
    {1e8L, 6.2650207989467532642L, 28046943835404234.25325L, 378534997115622.15987L, 1146190621534932.1838L,
     197062941134195.08236L, 27664352509865386.7478L},
};

auto rel(Real a, Real b) -> Real { return std::abs(a - b) / std::abs(b); }

auto lhs(Real n, int cutoff, Real lambda) -> Real { return constraint_ratio(n, cutoff, lambda); }

}  // namespace

TEST(Asymptotics, LogBinomial) {
  EXPECT_NEAR(static_cast<double>(log_binomial(10, 3)), std::log(120.0), 1e-14);
  EXPECT_NEAR(static_cast<double>(log_binomial(1e6L, 2)), std::log(499999500000.0), 1e-12);
  EXPECT_TRUE(std::isinf(log_binomial(3, 5)));
}

TEST(Asymptotics, FrozenValues) {
  for (const auto& f : kFrozen) {
    const auto p = optimal_profile(f.n, 11);
    EXPECT_LT(rel(p.lambda, f.lambda), 1e-14) << static_cast<double>(f.n);
    EXPECT_LT(rel(p.f_value, f.f), 1e-12);
    EXPECT_LT(rel(p.count(2), f.s2), 1e-12);
    EXPECT_LT(rel(p.count(3), f.s3), 1e-12);
    EXPECT_LT(rel(p.count(4), f.s4), 1e-12);
    EXPECT_LT(rel(lower_bound_log(f.n, 0.4L).log_value, f.lower), 1e-12);
  }
}

TEST(Asymptotics, ConstraintResidual) {
  for (Real n : {1e2L, 3e2L, 1e3L, 1e4L, 1e5L, 1e6L, 1e7L, 1e8L}) {
    const Real lambda = solve_lambda(n, 11);
    EXPECT_LE(std::abs(lhs(n, 11, lambda) - 1.0L), 1e-10L) << static_cast<double>(n);
    EXPECT_GT(lhs(n, 11, lambda - 0.1L), lhs(n, 11, lambda));
    EXPECT_GT(lhs(n, 11, lambda), lhs(n, 11, lambda + 0.1L));
    const auto p = optimal_profile(n, 11);
    Real covered = 0;
    for (int k = 2; k <= 11; ++k) covered += pair_count(k) * p.count(k);
    EXPECT_LE(rel(covered, n * (n - 1) / 2), 1e-10L);
  }
}

TEST(Asymptotics, CutoffBeyondElevenIsNegligible) {
  EXPECT_LE(rel(solve_lambda(1e3L, 20), solve_lambda(1e3L, 11)), 1e-6L);
  EXPECT_THROW(solve_lambda(1e3L, 3), std::invalid_argument);
  EXPECT_THROW(solve_lambda(2, 11), std::invalid_argument);
  EXPECT_THROW(solve_lambda(1e3L, 65), std::invalid_argument);
}

TEST(Asymptotics, Stationarity) {
  for (Real n : {1e3L, 1e6L}) {
    const auto p = optimal_profile(n, 11);
    for (int k = 2; k <= 11; ++k) {
      const Real v = (log_binomial(n, k) - std::log(p.count(k)) + tau(n, k)) / pair_count(k);
      EXPECT_NEAR(static_cast<double>(v), static_cast<double>(p.lambda), 1e-8) << k;
    }
  }
}

TEST(Asymptotics, PerturbationsDoNotImprove) {
  const Real n = 1e4L;
  const auto p = optimal_profile(n, 11);
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    // Move edge mass from size i to size j keeping sum C(k,2) s_k fixed.
    const int i = 2 + static_cast<int>(rng.below(4));
    int j = 2 + static_cast<int>(rng.below(4));
    if (j == i) j = i == 5 ? 2 : i + 1;
    auto s = p.s;
    const Real cap = std::min<Real>(1e-3L * n * n, s[i - 2]) * pair_count(i);
    const Real mass = cap * static_cast<Real>(rng.uniform01());
    s[i - 2] -= mass / pair_count(i);
    s[j - 2] += mass / pair_count(j);
    EXPECT_LE(upper_objective(n, s), p.f_value + 1e-9L * n * n);
  }
}

TEST(Asymptotics, AlphaWindow) {
  for (Real n : {1e2L, 1e3L, 1e4L, 1e6L, 1e8L, 1e12L}) EXPECT_LE(std::abs(optimal_profile(n, 11).alpha), 1.0L);
}

TEST(Asymptotics, TheoremConstant) {
  EXPECT_NEAR(static_cast<double>(theorem_constant()), 0.16169, 5e-6);
  EXPECT_NEAR(static_cast<double>(theorem_constant()), 0.1616908277251281667, 1e-17);
  EXPECT_LE(std::abs(std::log(theorem_constant()) - theorem_log_constant()), 1e-12L);
  EXPECT_NEAR(static_cast<double>(theorem_log_constant()), -1.822069238033126, 1e-12);
  EXPECT_GT(theorem_constant(), std::exp(-2.0L));
}

TEST(Asymptotics, Quadrature) {
  EXPECT_NEAR(static_cast<double>(integrate([](Real t) { return std::log1p(-t); }, 0.0L, 1.0L)), -1.0, 1e-8);
  EXPECT_NEAR(static_cast<double>(integral_log_one_minus(1.0L)), -1.0, 1e-18);
  const Real a4 = (2.0L - std::sqrt(3.0L)) / 2.0L;
  const auto check = telescoping_check(1.0L - a4, a4);
  EXPECT_LE(check.error(), 1e-12L);
  EXPECT_NEAR(static_cast<double>(check.exact), -1.0, 1e-15);
  const auto partial = telescoping_check(0.3L, 0.2L);
  EXPECT_LE(partial.error(), 1e-14L);
}

TEST(Asymptotics, LowerBoundFloors) {
  const auto lb = lower_bound_log(1e3L, 0.4L);
  EXPECT_EQ(lb.s3, 122008.0L);
  EXPECT_EQ(lb.s4, 22329.0L);
  // C(n,2) < n^2/2, so the phase fractions overshoot 1 by about 1/n.
  EXPECT_LE(std::abs(lb.telescoping.a3 + lb.telescoping.a4 - 1.0L), 2.0L / 1e3L);
  EXPECT_GE(lb.telescoping.a3 + lb.telescoping.a4, 1.0L);
  EXPECT_LE(lb.telescoping.error(), 1e-10L);
  EXPECT_THROW(lower_bound_log(9.0L), std::invalid_argument);
}

TEST(Asymptotics, BoundsAreCoherent) {
  Real previous = INFINITY;
  for (Real n : {1e3L, 1e4L, 1e5L, 1e6L}) {
    const auto r = bound_report(n, 11, 0.4L);
    EXPECT_GT(r.normalized_gap, 0.0L);
    EXPECT_LT(r.normalized_gap, previous);
    EXPECT_GE(r.upper_log, r.lower_log);
    previous = r.normalized_gap;
  }
}

TEST(Identities, HandValues) {
  EXPECT_EQ(small_rank_counts(1).m1, 1);
  EXPECT_EQ(small_rank_counts(1).m2, 0);
  EXPECT_EQ(small_rank_counts(3).m2, 7);
  EXPECT_EQ(small_rank_counts(4).m2, 36);
  EXPECT_THROW(small_rank_counts(0), std::invalid_argument);
  EXPECT_THROW(small_rank_counts(501), std::invalid_argument);
}

TEST(Identities, BellRecurrence) {
  const auto bell = bell_numbers(32);
  for (int m = 0; m <= 30; ++m) {
    BigInt sum = 0, binom = 1;
    for (int j = 0; j <= m; ++j) {
      sum += binom * bell[static_cast<std::size_t>(j)];
      binom = binom * (m - j) / (j + 1);
    }
    EXPECT_EQ(bell[static_cast<std::size_t>(m + 1)], sum) << m;
  }
  EXPECT_EQ(to_decimal(bell[30]), "846749014511809332450147");
}

TEST(Identities, BruteForceMatroids) {
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(small_rank_counts(n).m2, oracle::brute_matroid_count(n, 2)) << n;
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(small_rank_counts(n).m1, oracle::brute_matroid_count(n, 1)) << n;
  for (int n = 1; n <= 20; ++n) EXPECT_EQ(small_rank_counts(n).m1, (std::uint64_t{1} << n) - 1) << n;
}

TEST(Identities, LargeN) {
  const auto r = small_rank_counts(500);
  EXPECT_EQ(r.bell.size(), 502u);
  EXPECT_EQ(r.m1, (BigInt(1) << 500) - 1);
}
