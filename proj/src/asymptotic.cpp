#include "prhr/asymptotic.hpp"

#include <cmath>
#include <string>

#include "prhr/errors.hpp"
#include "prhr/tails.hpp"

namespace prhr {

std::string to_string(Alternative a) {
  return a == Alternative::increasing ? "increasing" : "decreasing";
}

Alternative alternative_from_string(const std::string& s) {
  if (s == "increasing") return Alternative::increasing;
  if (s == "decreasing") return Alternative::decreasing;
  throw DomainError("unknown alternative '" + s + "' (use increasing or decreasing)");
}

double tau_hat(const Sample& xs, const Sample& ys) {
  const auto& x = xs.values();
  const auto& y = ys.values();
  const Eigen::Index m = x.size();
  const Eigen::Index n = y.size();
  // Both sides sorted: one merge pass counts the concordant pairs.
  std::int64_t concordant = 0;
  Eigen::Index i = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    while (i < m && x(i) < y(j)) ++i;
    concordant += i;
  }
  return static_cast<double>(concordant) / (static_cast<double>(m) * static_cast<double>(n));
}

double theta_hat(double tau) {
  if (tau < 0.0 || tau > 1.0) {
    throw DomainError("tau must lie in [0,1]");
  }
  if (tau == 1.0) {
    throw DegenerateEstimateError("tau == 1: theta estimate is undefined");
  }
  return tau / (1.0 - tau);
}

MwEstimate mw_estimate(const Sample& x, const Sample& y) {
  MwEstimate est;
  est.tau = tau_hat(x, y);
  if (est.tau < 1.0) est.theta = est.tau / (1.0 - est.tau);
  return est;
}

double sigma10_null(double theta) {
  if (!(theta > 0.0)) {
    throw DomainError("sigma10_null requires theta > 0");
  }
  const double t = theta;
  const double tp1 = t + 1.0;
  return 1.0 / (4.0 * (2.0 * t + 1.0)) *
         (1.0 - 1.0 / ((2.0 * t + 1.0) * tp1 * tp1) - 8.0 * t / (3.0 * t + 2.0) +
          16.0 * t * t / ((4.0 * t + 3.0) * (2.0 * t + 1.0)));
}

double sigma01_null(double theta) {
  if (!(theta > 0.0)) {
    throw DomainError("sigma01_null requires theta > 0");
  }
  const double t = theta;
  const double tp1 = t + 1.0;
  return t / (4.0 * (2.0 + t)) *
         (1.0 - 8.0 / (3.0 + 2.0 * t) + 16.0 / ((4.0 + 3.0 * t) * (2.0 + t)) -
          t * t * t / ((2.0 + t) * tp1 * tp1));
}

UmwReport umw_test(const UStatSummary& summary, const MwEstimate& mw, Alternative alternative,
                   std::optional<double> theta_override) {
  double theta = 0.0;
  if (theta_override) {
    if (!(*theta_override > 0.0)) {
      throw DomainError("theta override must be positive");
    }
    theta = *theta_override;
  } else {
    if (!mw.theta.has_value() || mw.tau == 0.0) {
      throw DegenerateEstimateError(
          "tau is " + std::to_string(mw.tau) +
          ": the plug-in variance is undefined (samples fully separated)");
    }
    theta = *mw.theta;
  }

  UmwReport report;
  report.theta_used = theta;
  report.sigma10_sq = sigma10_null(theta);
  report.sigma01_sq = sigma01_null(theta);
  const double scale = 2.0 * std::sqrt(report.sigma10_sq / static_cast<double>(summary.m) +
                                       report.sigma01_sq / static_cast<double>(summary.n));
  report.statistic = summary.u() / scale;
  report.p_value = alternative == Alternative::increasing
                       ? normal_upper_tail(report.statistic)
                       : normal_lower_tail(report.statistic);
  return report;
}

UmwReport umw_test(const Sample& x, const Sample& y, Alternative alternative,
                   std::optional<double> theta_override) {
  return umw_test(u_statistic(x, y), mw_estimate(x, y), alternative, theta_override);
}

}  // namespace prhr
