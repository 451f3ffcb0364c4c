#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wgof/bootstrap.hpp"
#include "wgof/distributions.hpp"

namespace wgof {

/// One statistic column of the study: a weight family plus tuning value.
struct TestSpec {
  WeightSpec weight;
  std::string label;
};

/// A study row: either a concrete data-generating distribution or a
/// placeholder that must be reported as unavailable.
struct StudyAlternative {
  std::string token;  // command-line name
  std::string label;
  std::optional<AlternativeSpec> spec;
  std::string note;  // set when spec is absent
};

struct StudyConfig {
  std::vector<StudyAlternative> alternatives;
  std::vector<int> sample_sizes{20, 50};
  std::vector<TestSpec> tests;
  int replications = 1000;
  int bootstrap_b = 200;
  double alpha = 0.05;
  EstimatorKind estimator = EstimatorKind::MaximumLikelihood;
  std::uint64_t master_seed = 0;
  int threads = 0;

  void validate() const;
};

struct RateEstimate {
  double rate = 0.0;       // rejection fraction in [0, 1]
  double std_error = 0.0;  // binomial, sqrt(rate (1 - rate) / effective n)
  int skipped = 0;         // replications lost to estimator errors
};

struct PowerRow {
  std::string alternative;
  int n = 0;
  std::string test;
  bool available = false;
  RateEstimate estimate;
  std::string note;
};

struct PowerTable {
  std::vector<PowerRow> rows;
  StudyConfig config;
};

/// Rejection rate of the configured test over independent samples of
/// size n from the given law. Deterministic in the stream; replication j
/// draws its data from substream 2j and seeds its bootstrap from the key
/// derived at 2j+1. Aborts once skipped replications exceed 0.1%.
RateEstimate estimate_rejection_rate(const AlternativeSpec& spec, int n,
                                     const TestConfig& test_template,
                                     int replications, RngStream rng);

/// Full cross product of alternatives x sample sizes x tests. Row r uses
/// stream (master_seed, r), so appending rows never changes earlier ones.
/// Failing rows are marked and do not abort the table.
PowerTable run_table(const StudyConfig& config);

void write_power_csv(const PowerTable& table, std::ostream& os);
void write_power_text(const PowerTable& table, std::ostream& os);

/// The twenty study rows: four Weibull null laws plus the alternatives
/// (the second additive-Weibull row carries no usable parameters and is
/// kept only as an unavailable placeholder).
const std::vector<StudyAlternative>& study_catalog();

/// The six reported statistics: exponential and Gaussian weights with
/// a = 1, 2, 5.
std::vector<TestSpec> default_tests();

/// Expands comma-separated tokens (catalog entries, family groups,
/// "weibull-null", "alternatives", "all") into study rows.
std::vector<StudyAlternative> resolve_alternatives(const std::string& tokens);

/// Looks up tests by token ("t1-a5", "t2-a1", ...).
std::vector<TestSpec> resolve_tests(const std::string& tokens);

}  // namespace wgof
