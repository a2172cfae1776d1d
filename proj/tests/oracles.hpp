#pragma once

#include <algorithm>
#include <cstdint>

#include "prhr/sample.hpp"

// Test-only second route to the total quarter count, via order-statistic
// straddle counting instead of quadruple enumeration: for an ordered
// baseline pair (a <= b) the kernel's positive arrangements over all
// comparison pairs collapse to
//   above(b) * (below(a) + below(b))
// and the negative ones to
//   sum of sorted positions of comparison values inside (a, b)
//   + C(#inside, 2),
// all with strict comparisons. O(m^2 log n + n) per call, so it reaches
// sizes the enumeration cannot; its agreement with u_statistic is itself
// checked by a test.
inline std::int64_t straddle_total_quarters(const prhr::Sample& xs, const prhr::Sample& ys) {
  const auto& x = xs.values();
  const auto& y = ys.values();
  const Eigen::Index m = x.size(), n = y.size();

  auto below = [&](double t) {
    return static_cast<std::int64_t>(std::lower_bound(y.begin(), y.end(), t) - y.begin());
  };
  auto first_above = [&](double t) {
    return static_cast<std::int64_t>(std::upper_bound(y.begin(), y.end(), t) - y.begin());
  };

  std::int64_t total = 0;
  for (Eigen::Index i = 0; i + 1 < m; ++i) {
    for (Eigen::Index j = i + 1; j < m; ++j) {
      const double a = x(i), b = x(j);
      const std::int64_t above_b = n - first_above(b);
      total += above_b * (below(a) + below(b));
      // comparison values strictly inside (a, b) occupy a contiguous
      // index range [lo, hi)
      const std::int64_t lo = first_above(a);
      const std::int64_t hi = below(b);
      const std::int64_t inside = hi - lo;
      if (inside > 0) {
        total -= (lo + hi - 1) * inside / 2;  // sum of positions
        total -= inside * (inside - 1) / 2;
      }
    }
  }
  return total;
}
