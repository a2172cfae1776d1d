#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace prhr {

// One group's observations, kept in nondecreasing sorted order.
// All values are finite; the sample is never empty. Immutable after
// construction, so instances can be shared across threads freely.
class Sample {
 public:
  Sample(Eigen::VectorXd values, std::string label);

  static Sample from_values(std::vector<double> values, std::string label = "");

  const Eigen::VectorXd& values() const { return values_; }
  const std::string& label() const { return label_; }
  Eigen::Index size() const { return values_.size(); }

  double min() const { return values_(0); }
  double max() const { return values_(values_.size() - 1); }
  bool has_negative() const { return values_(0) < 0.0; }

 private:
  Eigen::VectorXd values_;  // sorted ascending
  std::string label_;
};

// Empirical cdf F_m(t) = #{values <= t} / m; right-continuous step function.
double ecdf(const Sample& s, double t);

struct LogLogPoint {
  double t;  // observation value
  double v;  // log(-log(F_m(t)))
};

// Points of log(-log F_m) at the distinct observed values where the
// transform is finite, ordered by increasing t.
struct LogLogSeries {
  std::vector<LogLogPoint> points;
  std::string label;
};

// Evaluates log(-log(F_m(t))) at each distinct observed value. Values
// where F_m(t) = 1 (the sample maximum) are dropped rather than clamped;
// for a single-valued sample the series is empty.
LogLogSeries loglog_series(const Sample& s);

}  // namespace prhr
