#pragma once

#include <optional>

#include "prhr/alternative.hpp"
#include "prhr/sample.hpp"
#include "prhr/ustat.hpp"

namespace prhr {

// Mann-Whitney plug-in estimate of tau = P(X < Y) and of the
// reversed-hazard proportionality constant theta = tau / (1 - tau).
// theta is undefined (nullopt) when tau == 1.
struct MwEstimate {
  double tau = 0.0;
  std::optional<double> theta;
};

// (1/(mn)) sum_ij I(x_i < y_j), strict inequality.
double tau_hat(const Sample& x, const Sample& y);

// tau / (1 - tau); throws DegenerateEstimateError at tau == 1.
double theta_hat(double tau);

MwEstimate mw_estimate(const Sample& x, const Sample& y);

// Null variance components of the kernel's conditional expectations
// given one baseline (sigma10) or one comparison (sigma01) observation,
// as closed-form rational functions of theta. Both are strictly
// positive for finite theta > 0 and satisfy
// sigma10_null(theta) == sigma01_null(1/theta).
double sigma10_null(double theta);
double sigma01_null(double theta);

struct UmwReport {
  double statistic = 0.0;   // normalized U
  double p_value = 1.0;     // one-sided normal tail for the alternative
  double sigma10_sq = 0.0;  // variance components evaluated at theta_used
  double sigma01_sq = 0.0;
  double theta_used = 0.0;
};

// Normalized-statistic test: u / (2 sqrt(sigma10/m + sigma01/n)) with the
// variance components evaluated at theta_override when given, otherwise
// at the Mann-Whitney plug-in. Without an override, tau in {0,1} makes
// the plug-in degenerate and the test refuses to run.
UmwReport umw_test(const UStatSummary& summary, const MwEstimate& mw, Alternative alternative,
                   std::optional<double> theta_override = std::nullopt);

UmwReport umw_test(const Sample& x, const Sample& y, Alternative alternative,
                   std::optional<double> theta_override = std::nullopt);

}  // namespace prhr
