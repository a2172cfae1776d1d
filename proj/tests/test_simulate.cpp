#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "prhr/errors.hpp"
#include "prhr/simulate.hpp"

using namespace prhr;

namespace {

SimConfig small_null() {
  SimConfig cfg;
  cfg.scenario = Scenario::null_ged;
  cfg.param = 2.0;
  cfg.m = 10;
  cfg.n = 10;
  cfg.reps = 200;
  cfg.seed = 7;
  return cfg;
}

double rate(const SimTable& t, const std::string& method, double alpha) {
  for (const auto& row : t.rows) {
    if (row.method == method && row.alpha == alpha) return row.rejection_rate;
  }
  FAIL("row not found");
  return -1.0;
}

}  // namespace

TEST_CASE("configuration is validated") {
  SimConfig cfg = small_null();
  cfg.reps = 0;
  CHECK_THROWS_AS(run_type1(cfg), DomainError);
  cfg = small_null();
  cfg.m = 2;
  CHECK_THROWS_AS(run_type1(cfg), DomainError);
  cfg = small_null();
  cfg.alphas = {1.5};
  CHECK_THROWS_AS(run_type1(cfg), DomainError);
  cfg = small_null();
  cfg.param = 0.0;
  CHECK_THROWS_AS(run_type1(cfg), DomainError);
  cfg = small_null();
  cfg.scenario = Scenario::frechet;
  CHECK_THROWS_AS(run_type1(cfg), DomainError);
  cfg = small_null();
  CHECK_THROWS_AS(run_power(cfg), DomainError);
}

TEST_CASE("scenario names round-trip") {
  for (auto s : {Scenario::null_ged, Scenario::frechet, Scenario::gumbel}) {
    CHECK(scenario_from_string(to_string(s)) == s);
  }
  CHECK_THROWS_AS(scenario_from_string("weird"), DomainError);
}

TEST_CASE("identical configs give identical tables regardless of workers") {
  SimConfig cfg = small_null();
  cfg.threads = 1;
  const SimTable t1 = run_type1(cfg);
  cfg.threads = 2;
  const SimTable t2 = run_type1(cfg);
  cfg.threads = 5;
  const SimTable t3 = run_type1(cfg);
  REQUIRE(t1.rows.size() == t2.rows.size());
  for (std::size_t i = 0; i < t1.rows.size(); ++i) {
    CHECK(t1.rows[i].rejection_rate == t2.rows[i].rejection_rate);
    CHECK(t1.rows[i].rejection_rate == t3.rows[i].rejection_rate);
    CHECK(t1.rows[i].undefined_rate == t2.rows[i].undefined_rate);
  }

  std::ostringstream tsv1, tsv2;
  write_tsv(tsv1, {t1});
  write_tsv(tsv2, {t2});
  CHECK(tsv1.str() == tsv2.str());
}

TEST_CASE("a single replication yields a 0/1 rate") {
  SimConfig cfg = small_null();
  cfg.reps = 1;
  const SimTable t = run_type1(cfg);
  for (const auto& row : t.rows) {
    CHECK((row.rejection_rate == 0.0 || row.rejection_rate == 1.0 ||
           row.undefined_rate == 1.0));
  }
}

TEST_CASE("rejection rates are nondecreasing in alpha") {
  SimConfig cfg = small_null();
  cfg.reps = 400;
  const SimTable t = run_type1(cfg);
  for (const std::string method : {"UMW", "JEL", "AJEL"}) {
    CHECK(rate(t, method, 0.01) <= rate(t, method, 0.05));
    CHECK(rate(t, method, 0.05) <= rate(t, method, 0.10));
  }
}

TEST_CASE("power grows with the effect size") {
  SimConfig cfg;
  cfg.scenario = Scenario::frechet;
  cfg.m = 10;
  cfg.n = 10;
  cfg.reps = 5000;
  cfg.seed = 99;
  cfg.alphas = {0.05};
  cfg.param = 3.0;
  const SimTable weak = run_power(cfg);
  cfg.param = 5.0;
  const SimTable strong = run_power(cfg);
  for (const std::string method : {"UMW", "JEL", "AJEL"}) {
    CHECK(rate(strong, method, 0.05) > rate(weak, method, 0.05));
  }
}

TEST_CASE("tsv output is stable and complete") {
  SimConfig cfg = small_null();
  cfg.reps = 50;
  const SimTable t = run_type1(cfg);
  std::ostringstream out;
  write_tsv(out, {t});
  const std::string text = out.str();
  CHECK(text.rfind("scenario\tparam\tm\tn\tmethod\talpha\t", 0) == 0);
  // header + 3 methods x 3 alphas
  CHECK(std::count(text.begin(), text.end(), '\n') == 10);
  CHECK(text.find("null-ged\t2\t10\t10\tUMW\t0.01") != std::string::npos);
  CHECK(text.find("AJEL") != std::string::npos);
}
