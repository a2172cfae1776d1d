#include "prhr/random.hpp"

#include <cmath>
#include <utility>

#include "prhr/errors.hpp"

namespace prhr {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) {
    throw DomainError(std::string(name) + " must be positive");
  }
}

void require_count(Eigen::Index k) {
  if (k < 1) {
    throw DomainError("sample size must be at least 1");
  }
}

template <typename Quantile>
Sample draw(RngStream& rng, Eigen::Index k, std::string label, Quantile&& q) {
  Eigen::VectorXd values(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    values(i) = q(rng.uniform_open01());
  }
  return Sample(std::move(values), std::move(label));
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream_id),
                    static_cast<std::uint32_t>(stream_id >> 32)};
  engine_.seed(seq);
}

double RngStream::uniform_open01() {
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double exponential_quantile(double u, double lambda) {
  return -std::log1p(-u) / lambda;
}

double ged_quantile(double u, double lambda, double theta) {
  const double root = theta == 1.0 ? u : std::pow(u, 1.0 / theta);
  return -std::log1p(-root) / lambda;
}

double frechet_quantile(double u, double alpha) {
  return std::pow(-std::log(u), -1.0 / alpha);
}

double gumbel_quantile(double u, double gamma) {
  return -std::log(-std::log(u)) / gamma;
}

Sample sample_exponential(RngStream& rng, double lambda, Eigen::Index k, std::string label) {
  require_positive(lambda, "lambda");
  require_count(k);
  return draw(rng, k, std::move(label),
              [lambda](double u) { return exponential_quantile(u, lambda); });
}

Sample sample_ged(RngStream& rng, double lambda, double theta, Eigen::Index k,
                  std::string label) {
  require_positive(lambda, "lambda");
  require_positive(theta, "theta");
  require_count(k);
  return draw(rng, k, std::move(label),
              [lambda, theta](double u) { return ged_quantile(u, lambda, theta); });
}

Sample sample_frechet(RngStream& rng, double alpha, Eigen::Index k, std::string label) {
  require_positive(alpha, "alpha");
  require_count(k);
  return draw(rng, k, std::move(label),
              [alpha](double u) { return frechet_quantile(u, alpha); });
}

Sample sample_gumbel(RngStream& rng, double gamma, Eigen::Index k, std::string label) {
  require_positive(gamma, "gamma");
  require_count(k);
  return draw(rng, k, std::move(label),
              [gamma](double u) { return gumbel_quantile(u, gamma); });
}

}  // namespace prhr
