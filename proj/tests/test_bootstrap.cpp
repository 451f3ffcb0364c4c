#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "wgof/bootstrap.hpp"
#include "wgof/datasets.hpp"
#include "wgof/distributions.hpp"

using wgof::AlternativeSpec;
using wgof::RngStream;
using wgof::Sample;
using wgof::TestConfig;
using wgof::WeibullParams;
using wgof::WeightFamily;
using wgof::WeightSpec;

TEST_SUITE_BEGIN("bootstrap");

TEST_CASE("critical value follows the order-statistic rule") {
  std::vector<double> replicates(500);
  std::iota(replicates.begin(), replicates.end(), 1.0);  // 1..500
  // b(1-alpha) = 475 is an integer: the 475th order statistic
  CHECK(wgof::critical_value(replicates, 0.05) == 475.0);

  std::vector<double> ten(10);
  std::iota(ten.begin(), ten.end(), 1.0);
  // b(1-alpha) = 6.7: floor + 1 = 7th
  CHECK(wgof::critical_value(ten, 0.33) == 7.0);

  std::vector<double> four = {10.0, 20.0, 30.0, 40.0};
  // b(1-alpha) = 3 is an integer: the 3rd
  CHECK(wgof::critical_value(four, 0.25) == 30.0);
}

TEST_CASE("critical value input validation") {
  CHECK_THROWS_AS(wgof::critical_value({}, 0.05), wgof::EmptyReplicatesError);
  CHECK_THROWS_AS(wgof::critical_value({1.0, 0.5}, 0.05),
                  std::invalid_argument);
  CHECK_THROWS_AS(wgof::critical_value({1.0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(wgof::critical_value({1.0}, 1.0), std::invalid_argument);
}

TEST_CASE("critical value is nonincreasing in alpha") {
  RngStream rng(70, 0);
  std::vector<double> replicates(137);
  for (auto& r : replicates) r = rng.uniform01() * 3.0;
  std::sort(replicates.begin(), replicates.end());
  double previous = std::numeric_limits<double>::infinity();
  for (double alpha = 0.02; alpha < 1.0; alpha += 0.02) {
    const double c = wgof::critical_value(replicates, alpha);
    CHECK(c <= previous);
    previous = c;
  }
}

TEST_CASE("config validation") {
  TestConfig config;
  config.b = 0;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  config.b = 10;
  config.alpha = 1.0;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  config.alpha = 0.05;
  CHECK_NOTHROW(config.validate());
}

TEST_CASE("report is deterministic and thread-count independent") {
  RngStream rng(71, 0);
  const auto data = wgof::sample(AlternativeSpec::weibull(1.0, 1.5), 30, rng);
  TestConfig config;
  config.b = 80;
  config.seed = 4242;
  config.threads = 1;
  const auto first = wgof::run_test(data, config);
  config.threads = 4;
  const auto second = wgof::run_test(data, config);
  CHECK(first.statistic.value == second.statistic.value);
  CHECK(first.critical_value == second.critical_value);
  CHECK(first.p_value == second.p_value);
  CHECK(first.reject == second.reject);
  CHECK(first.replicate_summary.min == second.replicate_summary.min);
  CHECK(first.replicate_summary.median == second.replicate_summary.median);
  CHECK(first.replicate_summary.max == second.replicate_summary.max);
  CHECK(first.redraws == 0);
  CHECK(second.redraws == 0);
}

TEST_CASE("replicates follow the documented per-index recipe") {
  // recompute every replicate directly from its stream id and compare;
  // a permuted id order must give the same sorted set
  const WeibullParams fitted(1.3, 2.4);
  TestConfig config;
  config.b = 40;
  config.seed = 99;
  config.threads = 2;
  const auto replicates =
      wgof::bootstrap_replicates(fitted, 25, config, nullptr);

  std::vector<double> recomputed;
  std::vector<int> ids(config.b);
  std::iota(ids.begin(), ids.end(), 0);
  std::reverse(ids.begin(), ids.end());  // any order works
  for (int id : ids) {
    RngStream stream(config.seed, static_cast<std::uint64_t>(id));
    const auto replicate = wgof::sample_weibull(fitted, 25, stream);
    const auto refit = wgof::fit(replicate, config.estimator);
    recomputed.push_back(
        wgof::statistic_closed_form(replicate, refit, config.weight).value);
  }
  auto sorted_a = replicates;
  auto sorted_b = recomputed;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  REQUIRE(sorted_a.size() == sorted_b.size());
  for (std::size_t i = 0; i < sorted_a.size(); ++i) {
    CHECK(sorted_a[i] == sorted_b[i]);
  }
}

TEST_CASE("report internals are mutually consistent") {
  RngStream rng(72, 0);
  const auto data = wgof::sample(AlternativeSpec::gamma(2.0, 1.0), 40, rng);
  TestConfig config;
  config.b = 199;
  config.seed = 7;
  const auto report = wgof::run_test(data, config);
  CHECK(report.reject == (report.statistic.value > report.critical_value));
  CHECK(report.p_value >= 0.0);
  CHECK(report.p_value <= 1.0);
  CHECK(report.replicate_summary.min <= report.replicate_summary.median);
  CHECK(report.replicate_summary.median <= report.replicate_summary.max);
  CHECK(report.critical_value >= report.replicate_summary.min);
  CHECK(report.critical_value <= report.replicate_summary.max);
  CHECK(report.ties_at_critical >= 0);
  CHECK(report.fitted.lambda > 0.0);
  CHECK(report.fitted.k > 0.0);
}

TEST_CASE("p-values are roughly uniform under the null") {
  // repeated tests on null data; the empirical p-value law should sit
  // inside a Kolmogorov band around uniform. n = 50: at n = 20 the
  // parametric bootstrap still carries a visible mid-range finite-sample
  // deviation (KS ~ 0.09 regardless of b) even though the level at 0.05
  // stays near nominal.
  const int runs = 500;
  std::vector<double> p_values;
  p_values.reserve(runs);
  TestConfig config;
  config.b = 100;
  config.threads = 2;
  for (int run = 0; run < runs; ++run) {
    RngStream rng(5000 + run, 0);
    const auto data = wgof::sample(AlternativeSpec::weibull(1.0, 1.5), 50, rng);
    config.seed = 977u * static_cast<std::uint64_t>(run) + 13u;
    p_values.push_back(wgof::run_test(data, config).p_value);
  }
  std::sort(p_values.begin(), p_values.end());
  double ks = 0.0;
  for (int i = 0; i < runs; ++i) {
    ks = std::max(ks, std::abs(p_values[i] - (i + 1.0) / runs));
    ks = std::max(ks, std::abs(p_values[i] - static_cast<double>(i) / runs));
  }
  CHECK(ks <= 0.08);
}

TEST_CASE("smoke: the 10mm fiber stresses are rejected at the default level") {
  const auto data = wgof::ingest("fibers-10mm");
  TestConfig config;
  config.b = 500;
  config.seed = 3;
  const auto report = wgof::run_test(data.values, config);
  CHECK(report.p_value < 0.1);
  CHECK(report.reject);
}

TEST_SUITE_END();
