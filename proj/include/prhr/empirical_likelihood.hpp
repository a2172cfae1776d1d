#pragma once

#include <Eigen/Dense>
#include <string>

#include "prhr/sample.hpp"
#include "prhr/ustat.hpp"

namespace prhr {

// Solution of the constrained likelihood maximization over one set of
// centered values: multiplier, probability weights, and the resulting
// -2 log ratio.
struct ElSolution {
  double lambda = 0.0;
  Eigen::VectorXd weights;   // strictly positive, sums to 1
  double neg2logr = 0.0;     // >= 0
  bool converged = true;
};

// Finds the unique lambda in (-1/max(w), -1/min(w)) with
// sum_i w_i / (1 + lambda w_i) = 0 by bracketing bisection refined with
// safeguarded Newton steps; the objective is strictly decreasing on the
// interval. Requires min(w) < 0 < max(w) (throws HullViolationError
// otherwise) except for the all-zero vector, which solves trivially.
ElSolution solve_el_weights(Eigen::Ref<const Eigen::VectorXd> w);

enum class ElMethod { jel, ajel };

std::string to_string(ElMethod m);

struct ElReport {
  ElMethod method = ElMethod::jel;
  double statistic = 0.0;   // -2 log ratio at delta 0
  double p_value = 1.0;     // upper chi-squared(1) tail
  int direction_sign = 0;   // sign of u, orients one-sided decisions
};

// Likelihood-ratio test over the jackknife pseudo-values at delta 0.
// Throws HullViolationError when the pseudo-values are all of one sign
// (callers typically fall back to the adjusted variant).
ElReport jel_test(const UStatSummary& summary);
ElReport jel_test(const Sample& x, const Sample& y);

// Adjusted variant: augments the centered pseudo-values with
// -(a/N) * their sum, a = max(1, log(N)/2), which restores solvability
// on every sample. The chi-squared(1) calibration is unchanged.
ElReport ajel_test(const UStatSummary& summary);
ElReport ajel_test(const Sample& x, const Sample& y);

// Centered-constraint solve at a general hypothesized kernel mean; used
// by downstream consumers inverting the test into an interval. delta0
// enters through the expected pseudo-values.
ElSolution jel_solution_at(const UStatSummary& summary, double delta0);
ElSolution ajel_solution_at(const UStatSummary& summary, double delta0);

}  // namespace prhr
