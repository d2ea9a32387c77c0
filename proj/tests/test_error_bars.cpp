#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "pathsample/centered_sampler.hpp"
#include "pathsample/error_bars.hpp"
#include "pathsample/exact.hpp"
#include "pathsample/three_path_sampler.hpp"
#include "testutil.hpp"

using namespace pathsample;

TEST_CASE("Bernoulli relative entropy: fixed points and boundaries") {
  CHECK(kl_divergence(0.5, 0.5) == 0.0);
  CHECK(kl_divergence(0.123, 0.123) == 0.0);
  for (double b : {0.1, 0.37, 0.9})
    CHECK(kl_divergence(0.0, b) == doctest::Approx(std::log(1.0 / (1.0 - b))).epsilon(1e-14));
  CHECK(kl_divergence(0.1, 0.2) == doctest::Approx(0.0366900140347506).epsilon(1e-12));
  CHECK(std::isinf(kl_divergence(0.5, 0.0)));
  CHECK(std::isinf(kl_divergence(0.5, 1.0)));
  CHECK(kl_divergence(1.0, 0.25) == doctest::Approx(std::log(4.0)).epsilon(1e-14));
  CHECK_THROWS_AS(kl_divergence(-0.1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(kl_divergence(0.5, 1.5), std::invalid_argument);
}

TEST_CASE("Pinsker floor: kl >= 2 (a-b)^2") {
  for (double a = 0.0; a <= 1.0; a += 0.05)
    for (double b = 0.05; b < 1.0; b += 0.05)
      CHECK(kl_divergence(a, b) + 1e-15 >= 2.0 * (a - b) * (a - b));
}

TEST_CASE("zero successes use the closed form") {
  const ConfidenceInterval ci = invert_bounds({100, 0}, 0.01);
  CHECK(ci.lower == 0.0);
  CHECK(ci.upper == doctest::Approx(0.04500741397856406).epsilon(1e-12));
  // residual is exact: (1-p_u)^k == delta
  CHECK(std::pow(1.0 - ci.upper, 100) == doctest::Approx(0.01).epsilon(1e-12));

  const ConfidenceInterval full = invert_bounds({100, 100}, 0.01);
  CHECK(full.upper == 1.0);
  CHECK(full.lower == doctest::Approx(std::pow(0.01, 0.01)).epsilon(1e-12));
}

TEST_CASE("interior inversion at k = 200000") {
  const ConfidenceInterval ci = invert_bounds({200000, 20000}, 0.01);
  CHECK(ci.lower > 0.0975);
  CHECK(ci.lower < 0.0985);
  CHECK(ci.upper > 0.1015);
  CHECK(ci.upper < 0.1025);
  CHECK(ci.lower <= 0.1);
  CHECK(ci.upper >= 0.1);
  for (double p : {ci.lower, ci.upper})
    CHECK(std::abs(std::exp(-kl_divergence(0.1, p) * 200000.0) - 0.01) <= 1e-9);
}

TEST_CASE("delta near 1 collapses the interval toward alpha") {
  const ConfidenceInterval ci = invert_bounds({1000, 300}, 0.999999);
  CHECK(ci.upper - ci.lower < 1e-3);
  CHECK(ci.lower <= 0.3);
  CHECK(ci.upper >= 0.3);
}

TEST_CASE("endpoint residuals across a grid of observations") {
  for (std::uint64_t k : {100, 5000, 10000}) {
    for (double frac : {0.001, 0.02, 0.1, 0.5, 0.93}) {
      const auto r = (std::uint64_t)(frac * (double)k);
      if (r == 0 || r == k) continue;
      for (double delta : {0.05, 0.01}) {
        const double alpha = (double)r / (double)k;
        const ConfidenceInterval ci = invert_bounds({k, r}, delta);
        CHECK(std::abs(std::exp(-kl_divergence(alpha, ci.lower) * (double)k) - delta) <= 1e-9);
        CHECK(std::abs(std::exp(-kl_divergence(alpha, ci.upper) * (double)k) - delta) <= 1e-9);
        CHECK(ci.lower >= 0.0);
        CHECK(ci.lower <= alpha);
        CHECK(ci.upper >= alpha);
        CHECK(ci.upper <= 1.0);
      }
    }
  }
}

TEST_CASE("monotonicity in k and alpha") {
  double prev_upper = 1.0;
  for (std::uint64_t k : {100, 200, 400, 800, 1600}) {
    const ConfidenceInterval ci = invert_bounds({k, k / 10}, 0.01);
    CHECK(ci.upper <= prev_upper + 1e-12);
    prev_upper = ci.upper;
  }
  double prev = 0.0;
  for (std::uint64_t r : {10, 50, 100, 200, 400}) {
    const ConfidenceInterval ci = invert_bounds({1000, r}, 0.01);
    CHECK(ci.upper >= prev - 1e-12);
    prev = ci.upper;
  }
}

TEST_CASE("coverage across a (k, p) grid (smoke scale)") {
  // Count misses of the true p over simulated binomial draws.
  for (double delta : {0.05, 0.01}) {
    for (std::uint64_t k : {100, 2000}) {
      for (double p : {0.01, 0.3}) {
        RandomSource rng(900 + k + (std::uint64_t)(p * 1000) +
                         (std::uint64_t)(delta * 1000));
        const int sims = 2000;
        int covered = 0;
        for (int s = 0; s < sims; ++s) {
          std::uint64_t x = 0;
          for (std::uint64_t t = 0; t < k; ++t) x += rng.uniform() < p;
          const ConfidenceInterval ci = invert_bounds({k, x}, delta);
          covered += (p >= ci.lower && p <= ci.upper);
        }
        CHECK((double)covered / sims >= 1.0 - delta - 0.01);
      }
    }
  }
}

TEST_CASE("scaled intervals per motif") {
  const Graph k4 = testutil::make_graph(testutil::k4());
  CenteredSampler sampler(k4);
  const Estimate est = sampler.estimate(200000, 31);
  const ScaledInterval si = interval_for_motif(est, MotifId::four_clique, 0.01);
  CHECK(si.lower <= 1.0);
  CHECK(si.upper >= 1.0);  // true clique count of K4
  CHECK(si.lower <= si.point);
  CHECK(si.upper >= si.point);

  // zero successes: lower bound is zero
  const ScaledInterval zero = interval_for_motif(est, MotifId::four_cycle, 0.01);
  CHECK(zero.point == 0.0);
  CHECK(zero.lower == 0.0);
  CHECK(zero.upper > 0.0);

  // doubling k at fixed alpha strictly shrinks the interval
  ThreePathSampler basic(k4);
  const Estimate e1 = basic.estimate(1000, 5);
  Estimate e2 = e1;
  e2.samples *= 2;
  for (auto& c : e2.counts) c *= 2;
  const ScaledInterval w1 = interval_for_motif(e1, MotifId::four_clique, 0.01);
  const ScaledInterval w2 = interval_for_motif(e2, MotifId::four_clique, 0.01);
  CHECK(w2.upper - w2.lower < w1.upper - w1.lower);

  CHECK_THROWS_AS(interval_for_motif(est, MotifId::three_path, 0.01),
                  std::invalid_argument);
  CHECK_THROWS_AS(interval_for_motif(est, MotifId::three_star, 0.01),
                  std::invalid_argument);
}

TEST_CASE("3-star composition: provenance is enforced") {
  const auto raw = testutil::gnp(40, 0.25, 10);
  const Graph g = testutil::make_graph(raw);
  ThreePathSampler sampler(g);
  const Estimate est = sampler.estimate(5000, 3);
  const double d = 0.01;
  const auto i3 = interval_for_motif(est, MotifId::tailed_triangle, d);
  const auto i5 = interval_for_motif(est, MotifId::chordal_four_cycle, d);
  const auto i6 = interval_for_motif(est, MotifId::four_clique, d);
  const ScaledInterval c1 = interval_for_c1(est, i3, i5, i6, d);
  CHECK(c1.lower <= est.value(MotifId::three_star));
  CHECK(c1.upper >= est.value(MotifId::three_star));
  CHECK(c1.lower >= 0.0);

  // swapped motifs, mismatched k, mismatched delta all refuse
  CHECK_THROWS_AS(interval_for_c1(est, i5, i3, i6, d), std::invalid_argument);
  const Estimate other = sampler.estimate(6000, 3);
  const auto o3 = interval_for_motif(other, MotifId::tailed_triangle, d);
  CHECK_THROWS_AS(interval_for_c1(est, o3, i5, i6, d), std::invalid_argument);
  CHECK_THROWS_AS(interval_for_c1(est, i3, i5, i6, 0.05), std::invalid_argument);
  const Estimate cent = CenteredSampler(g).estimate(5000, 3);
  CHECK_THROWS_AS(
      interval_for_c1(cent, i3, i5, i6, d), std::invalid_argument);
}

TEST_CASE("3-star composition on the path graph") {
  // Deterministic run: the 3-star estimate is exactly 0; its bar keeps the
  // residual upper slack of the three zero-count component bars.
  const Graph p4 = testutil::make_graph(testutil::path_graph(4));
  ThreePathSampler sampler(p4);
  const std::uint64_t k = 1000;
  const double d = 0.01;
  const Estimate est = sampler.estimate(k, 9);
  CHECK(est.value(MotifId::three_star) == 0.0);
  const auto i3 = interval_for_motif(est, MotifId::tailed_triangle, d);
  const auto i5 = interval_for_motif(est, MotifId::chordal_four_cycle, d);
  const auto i6 = interval_for_motif(est, MotifId::four_clique, d);
  const ScaledInterval c1 = interval_for_c1(est, i3, i5, i6, d);
  CHECK(c1.lower == 0.0);
  const double slack = -std::expm1(std::log(d) / (double)k);  // 1 - d^(1/k)
  const double want = slack * (i3.scale + 2.0 * i5.scale + 4.0 * i6.scale);
  CHECK(c1.upper == doctest::Approx(want).epsilon(1e-9));
  CHECK(c1.upper >= 0.0);
}

TEST_CASE("3-star interval covers the truth in nearly all runs") {
  const auto raw = testutil::gnp(50, 0.2, 2024);
  const Graph g = testutil::make_graph(raw);
  const ExactCounts exact = brute_force_counts(g);
  const double truth = (double)exact.induced[MotifId::three_star];
  ThreePathSampler sampler(g);

  const int runs = 1000;
  const std::uint64_t k = 1000;
  const double d = 0.01;
  int covered = 0;
  for (int r = 0; r < runs; ++r) {
    const Estimate est = sampler.estimate(k, RandomSource::derive_seed(77, r));
    const auto i3 = interval_for_motif(est, MotifId::tailed_triangle, d);
    const auto i5 = interval_for_motif(est, MotifId::chordal_four_cycle, d);
    const auto i6 = interval_for_motif(est, MotifId::four_clique, d);
    const ScaledInterval c1 = interval_for_c1(est, i3, i5, i6, d);
    covered += (truth >= c1.lower && truth <= c1.upper);
  }
  CHECK((double)covered / runs >= 0.99);
}
