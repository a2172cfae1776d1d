#include "prhr/empirical_likelihood.hpp"

#include <cmath>

#include "prhr/errors.hpp"
#include "prhr/tails.hpp"

namespace prhr {

namespace {

double objective(Eigen::Ref<const Eigen::VectorXd> w, double lambda) {
  return (w.array() / (1.0 + lambda * w.array())).sum();
}

double derivative(Eigen::Ref<const Eigen::VectorXd> w, double lambda) {
  return -(w.array().square() / (1.0 + lambda * w.array()).square()).sum();
}

ElSolution finish(Eigen::Ref<const Eigen::VectorXd> w, double lambda, bool converged) {
  ElSolution sol;
  sol.lambda = lambda;
  sol.converged = converged;
  // Proportional to 1/(1+lambda w); normalized explicitly so the weights
  // sum to one even when the residual tolerance leaves slack.
  sol.weights = (1.0 / (1.0 + lambda * w.array())).matrix();
  sol.weights /= sol.weights.sum();
  double r = 2.0 * (lambda * w.array()).log1p().sum();
  if (r < 0.0) {
    // The ratio statistic is nonnegative; roundoff near lambda = 0 can
    // leave a tiny negative residue.
    if (r < -1e-8) sol.converged = false;
    r = 0.0;
  }
  sol.neg2logr = r;
  return sol;
}

ElReport report_from(const UStatSummary& summary, ElMethod method, const ElSolution& sol) {
  if (!sol.converged) {
    throw ConvergenceError("empirical likelihood multiplier search did not converge");
  }
  ElReport rep;
  rep.method = method;
  rep.statistic = sol.neg2logr;
  rep.p_value = chisq1_upper_tail(sol.neg2logr);
  const std::int64_t tq = summary.total_quarters;
  rep.direction_sign = tq > 0 ? 1 : (tq < 0 ? -1 : 0);
  return rep;
}

Eigen::VectorXd ajel_augmented(Eigen::Ref<const Eigen::VectorXd> w) {
  const Eigen::Index N = w.size();
  const double a = std::max(1.0, 0.5 * std::log(static_cast<double>(N)));
  Eigen::VectorXd out(N + 1);
  out.head(N) = w;
  out(N) = -(a / static_cast<double>(N)) * w.sum();
  return out;
}

}  // namespace

std::string to_string(ElMethod m) { return m == ElMethod::jel ? "jel" : "ajel"; }

ElSolution solve_el_weights(Eigen::Ref<const Eigen::VectorXd> w) {
  const Eigen::Index N = w.size();
  if (N == 0) {
    throw InsufficientDataError("empirical likelihood needs at least one value");
  }
  const double wmax = w.maxCoeff();
  const double wmin = w.minCoeff();
  const double scale = std::max(std::abs(wmax), std::abs(wmin));
  if (scale == 0.0) {
    ElSolution sol;
    sol.weights = Eigen::VectorXd::Constant(N, 1.0 / static_cast<double>(N));
    return sol;
  }
  if (!(wmin < 0.0 && wmax > 0.0)) {
    throw HullViolationError("centered values are all of one sign; no feasible weights");
  }

  double lo = -1.0 / wmax;
  double hi = -1.0 / wmin;
  const double margin = 1e-12 * (hi - lo);
  lo += margin;
  hi -= margin;

  const double tol = 1e-10 * static_cast<double>(N) * scale;
  double lambda = 0.0;  // always interior: lo < 0 < hi
  double best_lambda = lambda;
  double best_residual = std::abs(objective(w, lambda));
  // Newton inside a shrinking bisection bracket; keep polishing past the
  // acceptance tolerance and return the smallest residual seen.
  for (int iter = 0; iter < 120 && best_residual != 0.0; ++iter) {
    const double g = objective(w, lambda);
    if (std::abs(g) <= best_residual) {
      best_residual = std::abs(g);
      best_lambda = lambda;
    }
    if (g > 0.0) {
      lo = lambda;  // objective decreases in lambda
    } else {
      hi = lambda;
    }
    if (hi - lo <= 1e-16 * std::max(std::abs(lo), std::abs(hi))) break;
    const double gp = derivative(w, lambda);
    const double newton = lambda - g / gp;
    lambda = (newton > lo && newton < hi) ? newton : 0.5 * (lo + hi);
  }
  return finish(w, best_lambda, best_residual <= tol);
}

ElSolution jel_solution_at(const UStatSummary& summary, double delta0) {
  return solve_el_weights(jackknife_pseudovalues(summary, delta0).centered());
}

ElSolution ajel_solution_at(const UStatSummary& summary, double delta0) {
  return solve_el_weights(
      ajel_augmented(jackknife_pseudovalues(summary, delta0).centered()));
}

ElReport jel_test(const UStatSummary& summary) {
  return report_from(summary, ElMethod::jel, jel_solution_at(summary, 0.0));
}

ElReport jel_test(const Sample& x, const Sample& y) { return jel_test(u_statistic(x, y)); }

ElReport ajel_test(const UStatSummary& summary) {
  return report_from(summary, ElMethod::ajel, ajel_solution_at(summary, 0.0));
}

ElReport ajel_test(const Sample& x, const Sample& y) { return ajel_test(u_statistic(x, y)); }

}  // namespace prhr
