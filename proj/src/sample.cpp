#include "prhr/sample.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "prhr/errors.hpp"

namespace prhr {

Sample::Sample(Eigen::VectorXd values, std::string label)
    : values_(std::move(values)), label_(std::move(label)) {
  if (values_.size() == 0) {
    throw InsufficientDataError("sample '" + label_ + "' is empty");
  }
  if (!values_.allFinite()) {
    throw DomainError("sample '" + label_ + "' contains a non-finite value");
  }
  std::sort(values_.begin(), values_.end());
}

Sample Sample::from_values(std::vector<double> values, std::string label) {
  return Sample(Eigen::Map<const Eigen::VectorXd>(values.data(),
                                                  static_cast<Eigen::Index>(values.size())),
                std::move(label));
}

double ecdf(const Sample& s, double t) {
  const auto& v = s.values();
  const auto leq = std::upper_bound(v.begin(), v.end(), t) - v.begin();
  return static_cast<double>(leq) / static_cast<double>(v.size());
}

LogLogSeries loglog_series(const Sample& s) {
  const auto& v = s.values();
  const Eigen::Index m = v.size();
  LogLogSeries series;
  series.label = s.label();
  for (Eigen::Index i = 0; i < m; ++i) {
    if (i + 1 < m && v(i + 1) == v(i)) continue;  // keep last of a tie run
    const double f = static_cast<double>(i + 1) / static_cast<double>(m);
    if (f >= 1.0) break;  // log(-log 1) is -inf; drop the maximum
    series.points.push_back({v(i), std::log(-std::log(f))});
  }
  return series;
}

}  // namespace prhr
