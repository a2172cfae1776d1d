#include "prhr/ustat.hpp"

#include <string>
#include <vector>

#include "prhr/errors.hpp"

namespace prhr {

namespace {

std::int64_t choose2(std::int64_t k) { return k * (k - 1) / 2; }

}  // namespace

int kernel_raw(double x1, double x2, double y1, double y2) {
  const int pos = (x1 < y1 && y2 < x2 && x2 < y1) ? 1 : 0;
  const int neg = (y1 < x1 && x2 < y2 && y2 < x1) ? 1 : 0;
  return pos - neg;
}

int kernel_sym_quarters(double x1, double x2, double y1, double y2) {
  return kernel_raw(x1, x2, y1, y2) + kernel_raw(x2, x1, y1, y2) +
         kernel_raw(x1, x2, y2, y1) + kernel_raw(x2, x1, y2, y1);
}

double kernel_sym(double x1, double x2, double y1, double y2) {
  return 0.25 * kernel_sym_quarters(x1, x2, y1, y2);
}

std::int64_t UStatSummary::quadruple_count() const {
  return choose2(m) * choose2(n);
}

UStatSummary u_statistic(const Sample& xs, const Sample& ys) {
  const Eigen::Index m = xs.size();
  const Eigen::Index n = ys.size();
  if (m < 2 || n < 2) {
    throw InsufficientDataError("u_statistic requires m >= 2 and n >= 2, got m=" +
                                std::to_string(m) + " n=" + std::to_string(n));
  }
  // The hot loop accumulates quarter counts in doubles; they stay exact
  // integers as long as the grand total is below 2^53. Sizes anywhere
  // near this bound are unreachable for the O(m^2 n^2) enumeration
  // anyway, so reject them outright.
  if (2.0 * static_cast<double>(choose2(m)) * static_cast<double>(choose2(n)) >= 0x1.0p53) {
    throw DomainError("sample too large for exact accumulation");
  }

  const auto& x = xs.values();
  const auto& y = ys.values();

  // Pair tables over the sorted values: for indices k < l the lower
  // element is y(k) and the upper y(l). Kept as flat arrays so the hot
  // loop streams them sequentially.
  const std::size_t yp = static_cast<std::size_t>(choose2(n));
  std::vector<double> lo(yp), hi(yp), col(yp, 0.0);
  std::vector<std::int32_t> lo_idx(yp), hi_idx(yp);
  {
    std::size_t t = 0;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
      for (Eigen::Index l = k + 1; l < n; ++l, ++t) {
        lo[t] = y(k);
        hi[t] = y(l);
        lo_idx[t] = static_cast<std::int32_t>(k);
        hi_idx[t] = static_cast<std::int32_t>(l);
      }
    }
  }

  UStatSummary out;
  out.m = m;
  out.n = n;
  out.per_index_quarters = QuarterVec::Zero(m + n);

  const double* lo_p = lo.data();
  const double* hi_p = hi.data();
  double* col_p = col.data();
  double total = 0.0;

  for (Eigen::Index i = 0; i + 1 < m; ++i) {
    for (Eigen::Index j = i + 1; j < m; ++j) {
      const double a = x(i);  // a <= b by sortedness
      const double b = x(j);
      double row = 0.0;
      for (std::size_t t = 0; t < yp; ++t) {
        const double c = lo_p[t];
        const double d = hi_p[t];
        // 4*phi for this quadruple: with each pair ordered, the eight
        // indicators of the symmetrized kernel collapse to
        //   (b<d) ? (c<b)+(c<a) : -( (d<b) ? (a<d)+(a<c) : 0 ).
        const double q = (b < d) ? static_cast<double>((c < b) + (c < a))
                                 : -static_cast<double>((d < b) * ((a < d) + (a < c)));
        row += q;
        col_p[t] += q;
      }
      total += row;
      const auto row_q = static_cast<std::int64_t>(row);
      out.per_index_quarters(i) += row_q;
      out.per_index_quarters(j) += row_q;
    }
  }
  out.total_quarters = static_cast<std::int64_t>(total);
  for (std::size_t t = 0; t < yp; ++t) {
    const auto col_q = static_cast<std::int64_t>(col[t]);
    out.per_index_quarters(m + lo_idx[t]) += col_q;
    out.per_index_quarters(m + hi_idx[t]) += col_q;
  }
  return out;
}

PseudoValues jackknife_pseudovalues(const UStatSummary& summary, double delta0) {
  const Eigen::Index m = summary.m;
  const Eigen::Index n = summary.n;
  const Eigen::Index N = m + n;
  if (m < 3 || n < 3 || N <= 4) {
    throw InsufficientDataError(
        "jackknife pseudo-values require m >= 3, n >= 3 and m + n > 4, got m=" +
        std::to_string(m) + " n=" + std::to_string(n));
  }

  const double u = summary.u();
  const double drop_x_pairs = static_cast<double>(choose2(m - 1) * choose2(n));
  const double drop_y_pairs = static_cast<double>(choose2(m) * choose2(n - 1));

  PseudoValues pv;
  pv.m = m;
  pv.n = n;
  pv.delta0 = delta0;
  pv.v.resize(N);
  pv.ev.resize(N);

  const double dN = static_cast<double>(N);
  for (Eigen::Index i = 0; i < N; ++i) {
    const double left_total =
        0.25 * static_cast<double>(summary.total_quarters - summary.per_index_quarters(i));
    const double t_minus = left_total / (i < m ? drop_x_pairs : drop_y_pairs);
    pv.v(i) = dN * u - (dN - 1.0) * t_minus;
  }

  pv.ev.head(m).setConstant(expected_pseudovalue_x(m, n, delta0));
  pv.ev.tail(n).setConstant(expected_pseudovalue_y(m, n, delta0));
  return pv;
}

double expected_pseudovalue_x(Eigen::Index m, Eigen::Index n, double delta0) {
  if (m + n <= 4) {
    throw InsufficientDataError("expected pseudo-values require m + n > 4");
  }
  const double dm = static_cast<double>(m), dn = static_cast<double>(n);
  return delta0 * (dm + dn) * (2.0 * dn - dm - 2.0) / ((dm + dn - 4.0) * dm);
}

double expected_pseudovalue_y(Eigen::Index m, Eigen::Index n, double delta0) {
  if (m + n <= 4) {
    throw InsufficientDataError("expected pseudo-values require m + n > 4");
  }
  const double dm = static_cast<double>(m), dn = static_cast<double>(n);
  return delta0 * (dm + dn) * (2.0 * dm - dn - 2.0) / ((dm + dn - 4.0) * dn);
}

}  // namespace prhr
