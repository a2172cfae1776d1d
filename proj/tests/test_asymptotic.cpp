#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "checks.hpp"
#include "oracles.hpp"
#include "prhr/asymptotic.hpp"
#include "prhr/errors.hpp"
#include "prhr/random.hpp"
#include "prhr/sample.hpp"
#include "prhr/tails.hpp"
#include "prhr/ustat.hpp"

using namespace prhr;

namespace {

// 64-point Gauss-Legendre rule on [0,1], nodes by Newton iteration on
// the Legendre recurrence. Test-only quadrature oracle.
struct GaussLegendre {
  std::array<double, 64> node{}, weight{};
  GaussLegendre() {
    constexpr int n = 64;
    for (int i = 0; i < n / 2; ++i) {
      double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      const double w = 2.0 / ((1.0 - x * x) * dp * dp);
      node[static_cast<std::size_t>(i)] = 0.5 * (1.0 - x);
      node[static_cast<std::size_t>(n - 1 - i)] = 0.5 * (1.0 + x);
      weight[static_cast<std::size_t>(i)] = 0.5 * w;
      weight[static_cast<std::size_t>(n - 1 - i)] = 0.5 * w;
    }
  }
};

// Conditional kernel mean given one comparison observation at cdf value
// v under the null with proportionality constant theta:
//   h(v) = (1/2) [ theta^2/((2+theta)(1+theta)) - v^(1/theta)
//                  + 4/(2+theta) v^(1+2/theta) ].
// Its variance over v ~ Uniform(0,1) is the sigma01 component; computed
// here by quadrature as an oracle independent of the closed form.
double sigma01_by_quadrature(double theta) {
  static const GaussLegendre gl;
  const double A = theta * theta / ((2.0 + theta) * (1.0 + theta));
  const double B = 4.0 / (2.0 + theta);
  double eh = 0.0, eh2 = 0.0;
  for (std::size_t i = 0; i < gl.node.size(); ++i) {
    double h;
    double w = gl.weight[i];
    if (theta >= 1.0) {
      // substitute v = t^theta so the integrand is smooth at 0
      const double t = gl.node[i];
      h = 0.5 * (A - t + B * std::pow(t, theta + 2.0));
      w *= theta * std::pow(t, theta - 1.0);
    } else {
      const double v = gl.node[i];
      h = 0.5 * (A - std::pow(v, 1.0 / theta) + B * std::pow(v, 1.0 + 2.0 / theta));
    }
    eh += w * h;
    eh2 += w * h * h;
  }
  return eh2 - eh * eh;
}

}  // namespace

TEST_CASE("tau counts concordant pairs") {
  CHECK(tau_hat(Sample::from_values({1, 2}), Sample::from_values({3, 4})) == 1.0);
  CHECK(tau_hat(Sample::from_values({3, 4}), Sample::from_values({1, 2})) == 0.0);
  CHECK(tau_hat(Sample::from_values({1, 3}), Sample::from_values({2, 4})) == 0.75);
  // ties are not concordant
  CHECK(tau_hat(Sample::from_values({1, 2}), Sample::from_values({2, 2})) == 0.5);
}

TEST_CASE("theta transform and its degenerate boundary") {
  CHECK(theta_hat(0.5) == doctest::Approx(1.0));
  CHECK(theta_hat(0.6) == doctest::Approx(1.5));
  CHECK(theta_hat(0.0) == 0.0);
  CHECK_THROWS_AS(theta_hat(1.0), DegenerateEstimateError);
  CHECK_THROWS_AS(theta_hat(1.5), DomainError);
  CHECK_FALSE(mw_estimate(Sample::from_values({1, 2}), Sample::from_values({3, 4}))
                  .theta.has_value());
}

TEST_CASE("variance components at hand-evaluated points") {
  // theta=1: (1/12)(1 - 1/12 - 8/5 + 16/21) = 11/1680
  CHECK(close_abs(sigma10_null(1.0), 11.0 / 1680.0, 1e-16));
  CHECK(close_abs(sigma01_null(1.0), 11.0 / 1680.0, 1e-16));
  CHECK(close_abs(sigma10_null(1.0), 0.00654762, 1e-6));
  // theta=2: (1/20)(1 - 1/45 - 2 + 64/55) = 7/990 and
  //          (1/8)(1 - 8/7 + 2/5 - 2/9) = 11/2520
  CHECK(close_abs(sigma10_null(2.0), 7.0 / 990.0, 1e-16));
  CHECK(close_abs(sigma01_null(2.0), 11.0 / 2520.0, 1e-16));
  CHECK_THROWS_AS(sigma10_null(0.0), DomainError);
  CHECK_THROWS_AS(sigma01_null(-1.0), DomainError);
}

TEST_CASE("variance components: reciprocal relation and positivity on a log grid") {
  for (int i = 0; i < 50; ++i) {
    const double theta = std::pow(10.0, -1.0 + 2.0 * i / 49.0);
    CHECK(close_abs(sigma10_null(theta), sigma01_null(1.0 / theta), 1e-12));
    CHECK(sigma10_null(theta) > 0.0);
    CHECK(sigma01_null(theta) > 0.0);
  }
  CHECK(close_abs(sigma10_null(1.0), sigma01_null(1.0), 1e-12));
}

TEST_CASE("sigma01 equals the variance of the conditional kernel mean") {
  for (double theta : {0.25, 0.5, 1.0, 2.0, 3.0, 6.0, 9.5}) {
    CAPTURE(theta);
    CHECK(close_abs(sigma01_null(theta), sigma01_by_quadrature(theta), 1e-10));
  }
}

TEST_CASE("normal and chi-squared tails reproduce reference p-values") {
  CHECK(close_abs(normal_upper_tail(1.214275), 0.1123214, 1e-5));
  CHECK(close_rel(normal_upper_tail(4.96845), 3.374503e-07, 1e-3));
  CHECK(close_abs(chisq1_upper_tail(1.43033), 0.2317105, 1e-5));
  // frozen high-precision evaluations of the same maps
  CHECK(close_rel(normal_upper_tail(1.214275), 0.11232136446853420, 1e-12));
  CHECK(close_rel(chisq1_upper_tail(62.93436), 2.1371132526448288e-15, 1e-9));
  CHECK(close_rel(chisq1_upper_tail(59.5923), 1.1669083937788481e-14, 1e-9));
  // symmetry and range
  CHECK(normal_upper_tail(0.0) == 0.5);
  CHECK(close_abs(normal_upper_tail(-3.0) + normal_upper_tail(3.0), 1.0, 1e-15));
  CHECK(chisq1_upper_tail(0.0) == 1.0);
  CHECK_THROWS_AS(chisq1_upper_tail(-0.5), DomainError);
}

TEST_CASE("normalized test computes statistic, tail and components") {
  RngStream rng(42, 0);
  const Sample x = sample_exponential(rng, 1.0, 60, "x");
  const Sample y = sample_ged(rng, 1.0, 2.0, 60, "y");
  const auto rep = umw_test(x, y, Alternative::increasing);
  const auto summary = u_statistic(x, y);
  const double theta = *mw_estimate(x, y).theta;
  const double scale = 2.0 * std::sqrt(sigma10_null(theta) / 60.0 + sigma01_null(theta) / 60.0);
  CHECK(rep.theta_used == doctest::Approx(theta));
  CHECK(rep.statistic == doctest::Approx(summary.u() / scale));
  CHECK(rep.p_value == doctest::Approx(normal_upper_tail(rep.statistic)));
  const auto dec = umw_test(x, y, Alternative::decreasing);
  CHECK(close_abs(dec.p_value, 1.0 - rep.p_value, 1e-12));
}

TEST_CASE("degenerate tau refuses the plug-in but accepts an override") {
  const Sample lo = Sample::from_values({1, 2, 3});
  const Sample hi = Sample::from_values({4, 5, 6});
  CHECK_THROWS_AS(umw_test(lo, hi, Alternative::increasing), DegenerateEstimateError);
  CHECK_THROWS_AS(umw_test(hi, lo, Alternative::increasing), DegenerateEstimateError);
  const auto rep = umw_test(lo, hi, Alternative::increasing, 2.0);
  CHECK(rep.theta_used == 2.0);
  CHECK(rep.p_value < 1.0);
  CHECK_THROWS_AS(umw_test(lo, hi, Alternative::increasing, -2.0), DomainError);
}

TEST_CASE("null simulation keeps the statistic unexceptional") {
  // m = n = 1000 is far beyond the enumeration's reach, so the total
  // comes from the straddle-count route (checked against enumeration in
  // the kernel tests) wrapped in a summary the test consumes directly.
  RngStream rng(2024, 0);
  const Sample x = sample_exponential(rng, 1.0, 1000, "x");
  const Sample y = sample_exponential(rng, 1.0, 1000, "y");
  UStatSummary summary;
  summary.m = x.size();
  summary.n = y.size();
  summary.total_quarters = straddle_total_quarters(x, y);
  summary.per_index_quarters = QuarterVec::Zero(2000);
  const auto rep = umw_test(summary, mw_estimate(x, y), Alternative::increasing);
  CHECK(std::abs(rep.statistic) < 4.0);
  CHECK(rep.p_value > 1e-4);
  CHECK(rep.p_value < 1.0 - 1e-4);
}

TEST_CASE("plug-in theta is biased upward at small samples") {
  // Convexity of t/(1-t) pushes the estimator's mean above the truth.
  const double theta = 2.0;
  double sum = 0.0;
  int used = 0;
  const int reps = 10000;
  for (int r = 0; r < reps; ++r) {
    RngStream rng(77, static_cast<std::uint64_t>(r));
    const Sample x = sample_exponential(rng, 1.0, 20, "x");
    const Sample y = sample_ged(rng, 1.0, theta, 20, "y");
    const double tau = tau_hat(x, y);
    if (tau == 1.0) continue;  // drop the rare degenerate draw
    sum += tau / (1.0 - tau);
    ++used;
  }
  CHECK(used > reps / 2);
  CHECK(sum / used > theta);
}
