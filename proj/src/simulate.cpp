#include "prhr/simulate.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

#include "prhr/asymptotic.hpp"
#include "prhr/empirical_likelihood.hpp"
#include "prhr/errors.hpp"
#include "prhr/random.hpp"
#include "prhr/ustat.hpp"

namespace prhr {

namespace {

struct RepOutcome {
  double p_umw = 1.0;
  double p_jel = 1.0;
  double p_ajel = 1.0;
  bool umw_defined = false;
  bool jel_defined = false;
  bool ajel_defined = false;
};

void validate(const SimConfig& cfg) {
  if (cfg.reps < 1) throw DomainError("reps must be at least 1");
  if (cfg.m < 3 || cfg.n < 3) throw DomainError("m and n must be at least 3");
  if (!(cfg.param > 0.0)) throw DomainError("scenario parameter must be positive");
  if (cfg.alphas.empty()) throw DomainError("at least one significance level is required");
  for (double a : cfg.alphas) {
    if (!(a > 0.0 && a < 1.0)) throw DomainError("significance levels must lie in (0,1)");
  }
}

RepOutcome run_one(const SimConfig& cfg, std::uint64_t rep) {
  RngStream rng(cfg.seed, rep);
  // X is drawn first, then Y, so the stream layout is fixed.
  Sample x = [&] {
    switch (cfg.scenario) {
      case Scenario::frechet:
        return sample_frechet(rng, cfg.param, cfg.m, "x");
      default:
        return sample_exponential(rng, 1.0, cfg.m, "x");
    }
  }();
  Sample y = [&] {
    switch (cfg.scenario) {
      case Scenario::null_ged:
        return sample_ged(rng, 1.0, cfg.param, cfg.n, "y");
      case Scenario::frechet:
        return sample_frechet(rng, 1.0, cfg.n, "y");
      default:
        // The scenario parameter is the Gumbel scale; the sampler takes
        // the rate that multiplies x in the exponent.
        return sample_gumbel(rng, 1.0 / cfg.param, cfg.n, "y");
    }
  }();

  const UStatSummary summary = u_statistic(x, y);
  RepOutcome out;
  try {
    out.p_umw = umw_test(summary, mw_estimate(x, y), cfg.alternative).p_value;
    out.umw_defined = true;
  } catch (const DegenerateEstimateError&) {
  }
  try {
    out.p_jel = jel_test(summary).p_value;
    out.jel_defined = true;
  } catch (const HullViolationError&) {
  }
  out.p_ajel = ajel_test(summary).p_value;
  out.ajel_defined = true;
  return out;
}

SimTable run(const SimConfig& cfg) {
  validate(cfg);

  std::vector<RepOutcome> outcomes(static_cast<std::size_t>(cfg.reps));
  unsigned workers = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                     : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(cfg.reps));

  // Replications are independent and land in their own slot, so the
  // result does not depend on the worker count.
  if (workers <= 1) {
    for (int r = 0; r < cfg.reps; ++r) {
      outcomes[static_cast<std::size_t>(r)] = run_one(cfg, static_cast<std::uint64_t>(r));
    }
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned wkr = 0; wkr < workers; ++wkr) {
      pool.emplace_back([&, wkr] {
        for (int r = static_cast<int>(wkr); r < cfg.reps; r += static_cast<int>(workers)) {
          outcomes[static_cast<std::size_t>(r)] = run_one(cfg, static_cast<std::uint64_t>(r));
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  SimTable table;
  table.config = cfg;
  const double dreps = static_cast<double>(cfg.reps);
  struct MethodView {
    const char* name;
    double RepOutcome::* p;
    bool RepOutcome::* defined;
  };
  const MethodView methods[] = {{"UMW", &RepOutcome::p_umw, &RepOutcome::umw_defined},
                                {"JEL", &RepOutcome::p_jel, &RepOutcome::jel_defined},
                                {"AJEL", &RepOutcome::p_ajel, &RepOutcome::ajel_defined}};
  for (const auto& method : methods) {
    std::int64_t defined = 0;
    for (const auto& o : outcomes) defined += (o.*method.defined) ? 1 : 0;
    for (double alpha : cfg.alphas) {
      std::int64_t rejections = 0;
      for (const auto& o : outcomes) {
        if ((o.*method.defined) && o.*method.p <= alpha) ++rejections;
      }
      SimRow row;
      row.method = method.name;
      row.alpha = alpha;
      row.rejection_rate =
          defined > 0 ? static_cast<double>(rejections) / static_cast<double>(defined) : 0.0;
      row.undefined_rate = static_cast<double>(cfg.reps - defined) / dreps;
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

void put_full(std::ostream& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out << buf;
}

}  // namespace

std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::null_ged:
      return "null-ged";
    case Scenario::frechet:
      return "frechet";
    default:
      return "gumbel";
  }
}

Scenario scenario_from_string(const std::string& s) {
  if (s == "null-ged") return Scenario::null_ged;
  if (s == "frechet") return Scenario::frechet;
  if (s == "gumbel") return Scenario::gumbel;
  throw DomainError("unknown scenario '" + s + "' (use null-ged, frechet or gumbel)");
}

SimTable run_type1(const SimConfig& config) {
  if (config.scenario != Scenario::null_ged) {
    throw DomainError("run_type1 requires the null-ged scenario");
  }
  return run(config);
}

SimTable run_power(const SimConfig& config) {
  if (config.scenario == Scenario::null_ged) {
    throw DomainError("run_power requires the frechet or gumbel scenario");
  }
  return run(config);
}

void write_tsv(std::ostream& out, const std::vector<SimTable>& tables) {
  out << "scenario\tparam\tm\tn\tmethod\talpha\trejection_rate\tundefined_rate\treps\tseed\n";
  for (const auto& table : tables) {
    const auto& cfg = table.config;
    for (const auto& row : table.rows) {
      out << to_string(cfg.scenario) << '\t';
      put_full(out, cfg.param);
      out << '\t' << cfg.m << '\t' << cfg.n << '\t' << row.method << '\t';
      put_full(out, row.alpha);
      out << '\t';
      put_full(out, row.rejection_rate);
      out << '\t';
      put_full(out, row.undefined_rate);
      out << '\t' << cfg.reps << '\t' << cfg.seed << '\n';
    }
  }
}

}  // namespace prhr
