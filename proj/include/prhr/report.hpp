#pragma once

#include <optional>
#include <string>

#include "prhr/alternative.hpp"
#include "prhr/sample.hpp"

namespace prhr {

struct TestOptions {
  Alternative alternative = Alternative::increasing;
  double alpha = 0.05;
  std::optional<double> theta_override;
};

// Outcome of one method on one data pair. Degenerate methods keep their
// slot (with a reason) so the report schema never changes shape.
struct MethodOutcome {
  bool degenerate = false;
  std::string reason;  // empty unless degenerate
  double statistic = 0.0;
  double p_value = 1.0;
  bool reject = false;
  int direction_sign = 0;
};

// All three procedures applied to one sample pair, plus the shared
// estimates they are built from.
struct TestReport {
  Eigen::Index m = 0;
  Eigen::Index n = 0;
  std::string x_label;
  std::string y_label;
  Alternative alternative = Alternative::increasing;
  double alpha = 0.05;
  double u = 0.0;
  double tau = 0.0;
  std::optional<double> theta;  // undefined at tau == 1

  MethodOutcome umw;
  // Variance components behind the normalized statistic; meaningful only
  // when umw ran.
  double sigma10_sq = 0.0;
  double sigma01_sq = 0.0;
  double theta_used = 0.0;

  MethodOutcome jel;
  MethodOutcome ajel;
};

// Runs all three tests on the pair. The decision for the normalized
// test is p <= alpha (its one-sided p-value already encodes the
// alternative); the likelihood-ratio decisions additionally require the
// sign of u to match the declared alternative.
TestReport run_all_tests(const Sample& x, const Sample& y, const TestOptions& options);

// Fixed-schema JSON, every key present on every run, numbers at 17
// significant digits; degenerate methods carry null statistic fields.
std::string to_json(const TestReport& report);

}  // namespace prhr
