#include "prhr/tails.hpp"

#include <cmath>

#include "prhr/errors.hpp"

namespace prhr {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

double normal_upper_tail(double z) { return 0.5 * std::erfc(z * kInvSqrt2); }

double normal_lower_tail(double z) { return 0.5 * std::erfc(-z * kInvSqrt2); }

double chisq1_upper_tail(double s) {
  if (std::isnan(s) || s < 0.0) {
    throw DomainError("chisq1_upper_tail: statistic must be nonnegative");
  }
  return std::erfc(std::sqrt(0.5 * s));
}

}  // namespace prhr
