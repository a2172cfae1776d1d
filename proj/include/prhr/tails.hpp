#pragma once

namespace prhr {

// P(Z > z) for standard normal Z, accurate over the whole double range.
double normal_upper_tail(double z);

// P(Z <= z) = normal_upper_tail(-z).
double normal_lower_tail(double z);

// P(X > s) for X chi-squared with one degree of freedom, s >= 0.
// Uses P(Z^2 > s) = 2 P(Z > sqrt(s)).
double chisq1_upper_tail(double s);

}  // namespace prhr
