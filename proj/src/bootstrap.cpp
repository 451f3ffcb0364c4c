#include "wgof/bootstrap.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>

#include "wgof/errors.hpp"
#include "wgof/parallel.hpp"
#include "wgof/rng.hpp"

namespace wgof {

void TestConfig::validate() const {
  if (b < 1) {
    throw std::invalid_argument("TestConfig: b must be at least 1");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("TestConfig: alpha must lie in (0, 1)");
  }
}

double critical_value(const std::vector<double>& sorted_replicates,
                      double alpha) {
  if (sorted_replicates.empty()) {
    throw EmptyReplicatesError("critical_value: empty replicate list");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("critical_value: alpha must lie in (0, 1)");
  }
  if (!std::is_sorted(sorted_replicates.begin(), sorted_replicates.end())) {
    throw std::invalid_argument("critical_value: replicates must be ascending");
  }
  const auto b = static_cast<double>(sorted_replicates.size());
  const double target = b * (1.0 - alpha);
  const double nearest = std::round(target);
  std::size_t rank;  // 1-based
  if (nearest >= 1.0 && std::abs(target - nearest) <= 1e-9 * b) {
    rank = static_cast<std::size_t>(nearest);
  } else {
    rank = static_cast<std::size_t>(std::floor(target)) + 1;
  }
  rank = std::min(rank, sorted_replicates.size());
  return sorted_replicates[rank - 1];
}

std::vector<double> bootstrap_replicates(const WeibullParams& fitted,
                                         Eigen::Index n,
                                         const TestConfig& config,
                                         int* redraw_count) {
  config.validate();
  std::vector<double> replicates(config.b);
  std::atomic<int> redraws{0};

  parallel_for(config.b, thread_budget(config.threads), [&](int i) {
    for (std::uint64_t attempt = 0;; ++attempt) {
      if (attempt > 64) {
        throw NoConvergenceError(
            "bootstrap_replicates: replicate re-fit kept failing");
      }
      RngStream stream(config.seed,
                       static_cast<std::uint64_t>(i) + (attempt << 32));
      const Sample replicate =
          sample_weibull(fitted, static_cast<int>(n), stream);
      try {
        const WeibullParams refit = fit(replicate, config.estimator);
        replicates[i] =
            statistic_closed_form(replicate, refit, config.weight).value;
        break;
      } catch (const ConstantSampleError&) {
        redraws.fetch_add(1, std::memory_order_relaxed);
      }
    }
  });

  if (redraw_count != nullptr) *redraw_count = redraws.load();
  return replicates;
}

TestReport run_test(const Sample& sample, const TestConfig& config) {
  config.validate();
  const WeibullParams fitted = fit(sample, config.estimator);
  const StatisticValue observed =
      statistic_closed_form(sample, fitted, config.weight);

  int redraws = 0;
  std::vector<double> replicates =
      bootstrap_replicates(fitted, sample.size(), config, &redraws);
  std::sort(replicates.begin(), replicates.end());

  const double critical = critical_value(replicates, config.alpha);
  const auto at_or_above = static_cast<double>(
      replicates.end() -
      std::lower_bound(replicates.begin(), replicates.end(), observed.value));
  const double p_value = at_or_above / static_cast<double>(config.b);

  ReplicateSummary summary;
  summary.min = replicates.front();
  summary.max = replicates.back();
  const std::size_t mid = replicates.size() / 2;
  summary.median = (replicates.size() % 2 == 1)
                       ? replicates[mid]
                       : 0.5 * (replicates[mid - 1] + replicates[mid]);

  const auto ties = std::count(replicates.begin(), replicates.end(), critical);

  return TestReport{observed,
                    critical,
                    p_value,
                    observed.value > critical,
                    fitted,
                    config,
                    summary,
                    redraws,
                    static_cast<int>(ties) - 1};
}

}  // namespace wgof
