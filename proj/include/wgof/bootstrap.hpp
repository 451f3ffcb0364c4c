#pragma once

#include <cstdint>
#include <vector>

#include "wgof/estimators.hpp"
#include "wgof/sample.hpp"
#include "wgof/statistic.hpp"

namespace wgof {

/// Configuration of one bootstrap-calibrated test run.
struct TestConfig {
  WeightSpec weight{WeightFamily::Exponential, 5.0};
  EstimatorKind estimator = EstimatorKind::MaximumLikelihood;
  int b = 2000;         // bootstrap replicate count
  double alpha = 0.05;  // nominal level
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = GOF_THREADS / hardware

  void validate() const;
};

struct ReplicateSummary {
  double min = 0.0;
  double median = 0.0;
  double max = 0.0;
};

struct TestReport {
  StatisticValue statistic;
  double critical_value;
  double p_value;
  bool reject;
  WeibullParams fitted;
  TestConfig config;
  ReplicateSummary replicate_summary;
  int redraws = 0;           // replicates redrawn after a failed re-fit
  int ties_at_critical = 0;  // replicates exactly equal to the critical value
};

/// Empirical (1-alpha)-quantile of an ascending replicate list: the
/// order statistic of 1-based rank b(1-alpha) when that is an integer,
/// otherwise rank floor(b(1-alpha)) + 1.
double critical_value(const std::vector<double>& sorted_replicates,
                      double alpha);

/// The b bootstrap replicate statistics for samples of size n drawn from
/// the fitted Weibull law: replicate i draws from stream (config.seed, i),
/// re-fits, and evaluates the closed-form statistic at the re-fitted
/// parameters. Output is in replicate order (unsorted) and bit-identical
/// for any thread count. Re-fits that reject a constant sample are redrawn
/// from stream (config.seed, i + 2^32 * attempt) and counted.
std::vector<double> bootstrap_replicates(const WeibullParams& fitted,
                                         Eigen::Index n,
                                         const TestConfig& config,
                                         int* redraw_count = nullptr);

/// Full test: fit, evaluate the statistic, calibrate by parametric
/// bootstrap, and decide. Rejects when the statistic strictly exceeds the
/// critical value; the p-value is the fraction of replicates at or above
/// the observed statistic.
TestReport run_test(const Sample& sample, const TestConfig& config);

}  // namespace wgof
