#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "prhr/sample.hpp"

namespace prhr {

using QuarterVec = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

// Four-argument indicator kernel, strict inequalities throughout:
//   I(x1 < y1, y2 < x2 < y1) - I(y1 < x1, x2 < y2 < x1).
// Tied coordinates fail the strict comparisons and contribute 0.
int kernel_raw(double x1, double x2, double y1, double y2);

// 4 * symmetrized kernel: the sum of kernel_raw over the four
// arrangements obtained by swapping the pair orders on each side.
// Integer-valued in [-4, 4], so downstream sums stay exact.
int kernel_sym_quarters(double x1, double x2, double y1, double y2);

// Symmetrized kernel, the quarter-count divided by 4; in [-1, 1].
double kernel_sym(double x1, double x2, double y1, double y2);

// Exact (quarter-integer) totals of the symmetrized kernel over all
// C(m,2)*C(n,2) quadruples, plus for each pooled observation index the
// sum over the quadruples containing it. Floating point enters only in
// the accessors.
struct UStatSummary {
  std::int64_t total_quarters = 0;  // 4 * sum of the kernel over all quadruples
  QuarterVec per_index_quarters;    // length m+n; entry i is 4 * S_i
  Eigen::Index m = 0;
  Eigen::Index n = 0;

  std::int64_t quadruple_count() const;
  double total() const { return 0.25 * static_cast<double>(total_quarters); }
  double per_index(Eigen::Index i) const {
    return 0.25 * static_cast<double>(per_index_quarters(i));
  }
  double u() const {
    return total() / static_cast<double>(quadruple_count());
  }
};

// Single enumeration pass over all quadruples accumulating both the
// grand total and every per-index aggregate, so the full jackknife
// below costs the same O(m^2 n^2) kernel evaluations as one statistic.
UStatSummary u_statistic(const Sample& x, const Sample& y);

// Jackknife pseudo-values over the pooled sample, with their expected
// values at a hypothesized kernel mean delta0.
struct PseudoValues {
  Eigen::VectorXd v;   // length m+n
  Eigen::VectorXd ev;  // length m+n; zero vector when delta0 == 0
  double delta0 = 0.0;
  Eigen::Index m = 0;
  Eigen::Index n = 0;

  Eigen::VectorXd centered() const { return v - ev; }
};

// Pseudo-value i is (m+n) u - (m+n-1) T_i where T_i is the statistic
// recomputed without pooled observation i; the leave-one-out values come
// from the per-index aggregates, not from re-enumeration. Requires
// m >= 3, n >= 3 and m + n > 4.
PseudoValues jackknife_pseudovalues(const UStatSummary& summary, double delta0);

// Expected pseudo-value at hypothesized kernel mean delta0, for indices
// in the baseline (x) and comparison (y) halves of the pool. Both
// branches reduce to delta0 when m == n, and m of one plus n of the
// other telescope to (m+n) delta0. Requires m + n > 4.
double expected_pseudovalue_x(Eigen::Index m, Eigen::Index n, double delta0);
double expected_pseudovalue_y(Eigen::Index m, Eigen::Index n, double delta0);

}  // namespace prhr
