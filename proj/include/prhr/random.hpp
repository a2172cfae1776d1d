#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "prhr/sample.hpp"

namespace prhr {

// Reproducible uniform stream: a fixed (seed, stream_id) pair yields a
// bit-identical variate sequence on every conforming platform, and
// distinct stream ids give independently usable streams. Each stream is
// meant to be owned by a single worker (one replication, one stream).
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  // Strictly inside (0,1): ((x >> 11) + 0.5) * 2^-53 from one engine word.
  double uniform_open01();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

// Closed-form quantile maps used by the samplers; pure functions of a
// uniform draw u in (0,1).
double exponential_quantile(double u, double lambda);
// F(t) = (1 - exp(-lambda t))^theta; theta == 1 reproduces the
// exponential map exactly, bit for bit.
double ged_quantile(double u, double lambda, double theta);
// F(x) = exp(-x^-alpha) on x > 0.
double frechet_quantile(double u, double alpha);
// F(x) = exp(-exp(-gamma x)) on all reals; gamma multiplies x.
double gumbel_quantile(double u, double gamma);

// k independent draws by inverse transform; parameters must be positive
// and k >= 1. Results are returned as canonical (sorted) samples.
Sample sample_exponential(RngStream& rng, double lambda, Eigen::Index k,
                          std::string label = "exponential");
Sample sample_ged(RngStream& rng, double lambda, double theta, Eigen::Index k,
                  std::string label = "ged");
Sample sample_frechet(RngStream& rng, double alpha, Eigen::Index k,
                      std::string label = "frechet");
Sample sample_gumbel(RngStream& rng, double gamma, Eigen::Index k,
                     std::string label = "gumbel");

}  // namespace prhr
