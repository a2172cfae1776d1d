#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "prhr/alternative.hpp"

namespace prhr {

// Data-generating scenarios for the size and power experiments.
//   null_ged: X ~ exponential(1), Y ~ GED(1, theta)          [null holds]
//   frechet:  X ~ Frechet(alpha2), Y ~ Frechet(1)            [increasing ratio]
//   gumbel:   X ~ exponential(1), Y ~ Gumbel with scale gamma
//             (cdf exp(-exp(-x/gamma)))                      [increasing ratio for gamma > 1]
enum class Scenario { null_ged, frechet, gumbel };

std::string to_string(Scenario s);
Scenario scenario_from_string(const std::string& s);

struct SimConfig {
  Scenario scenario = Scenario::null_ged;
  double param = 2.0;  // theta, alpha2, or gamma depending on scenario
  int m = 20;
  int n = 20;
  int reps = 10000;
  std::vector<double> alphas = {0.01, 0.05, 0.10};
  std::uint64_t seed = 0;
  Alternative alternative = Alternative::increasing;
  int threads = 0;  // 0 = hardware concurrency
};

struct SimRow {
  std::string method;  // UMW | JEL | AJEL
  double alpha = 0.0;
  double rejection_rate = 0.0;   // over the defined replications only
  double undefined_rate = 0.0;   // fraction of replications with no defined statistic
};

struct SimTable {
  SimConfig config;
  std::vector<SimRow> rows;
};

// Type-I error experiment; requires scenario == null_ged.
SimTable run_type1(const SimConfig& config);

// Power experiment; requires scenario == frechet or gumbel.
SimTable run_power(const SimConfig& config);

// Tab-separated output, one row per (method, alpha):
// scenario param m n method alpha rejection_rate undefined_rate reps seed.
// The header is written once for the whole batch.
void write_tsv(std::ostream& out, const std::vector<SimTable>& tables);

}  // namespace prhr
