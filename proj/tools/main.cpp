// Command-line front end: bootstrap-calibrated Weibull goodness-of-fit
// tests, Monte Carlo power studies, and the bundled fiber-stress data.
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wgof/bootstrap.hpp"
#include "wgof/datasets.hpp"
#include "wgof/power.hpp"

namespace {

using nlohmann::json;

struct CommonFlags {
  std::string weight = "exp";
  double a = 5.0;
  std::string estimator = "mle";
  int b = 2000;
  double alpha = 0.05;
  std::uint64_t seed = 0;
  bool as_json = false;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--weight", flags.weight, "weight family")
      ->check(CLI::IsMember({"exp", "gauss"}));
  cmd->add_option("--a", flags.a, "weight tuning parameter (> 0)");
  cmd->add_option("--estimator", flags.estimator, "parameter estimator")
      ->check(CLI::IsMember({"mle", "moments"}));
  cmd->add_option("--b", flags.b, "bootstrap replicates");
  cmd->add_option("--alpha", flags.alpha, "nominal level in (0,1)");
  cmd->add_option("--seed", flags.seed, "random seed");
  cmd->add_flag("--json", flags.as_json, "machine-readable output");
}

wgof::TestConfig to_test_config(const CommonFlags& flags) {
  wgof::TestConfig config;
  config.weight = wgof::WeightSpec(flags.weight == "exp"
                                       ? wgof::WeightFamily::Exponential
                                       : wgof::WeightFamily::Gaussian,
                                   flags.a);
  config.estimator = flags.estimator == "mle"
                         ? wgof::EstimatorKind::MaximumLikelihood
                         : wgof::EstimatorKind::Moments;
  config.b = flags.b;
  config.alpha = flags.alpha;
  config.seed = flags.seed;
  config.validate();
  return config;
}

json report_to_json(const wgof::TestReport& report, Eigen::Index n) {
  return json{{"statistic", report.statistic.value},
              {"weight_family",
               wgof::weight_family_name(report.config.weight.family)},
              {"tuning_a", report.config.weight.a},
              {"estimator", wgof::estimator_name(report.config.estimator)},
              {"n", n},
              {"b", report.config.b},
              {"alpha", report.config.alpha},
              {"critical_value", report.critical_value},
              {"p_value", report.p_value},
              {"reject", report.reject},
              {"lambda_hat", report.fitted.lambda},
              {"k_hat", report.fitted.k},
              {"seed", report.config.seed},
              {"redraws", report.redraws}};
}

void print_report(const wgof::InputDataset& dataset,
                  const wgof::TestReport& report) {
  const auto& config = report.config;
  std::printf("dataset: %s (n = %d, skipped lines = %d)\n",
              dataset.source.c_str(), dataset.parsed, dataset.skipped_lines);
  std::printf("statistic: %s weight, a = %g, estimator = %s\n",
              wgof::weight_family_name(config.weight.family), config.weight.a,
              wgof::estimator_name(config.estimator));
  std::printf("fitted: lambda = %.6g, k = %.6g\n", report.fitted.lambda,
              report.fitted.k);
  std::printf("T = %.8g\n", report.statistic.value);
  std::printf("bootstrap: b = %d, seed = %llu, redraws = %d\n", config.b,
              static_cast<unsigned long long>(config.seed), report.redraws);
  std::printf("replicates: min = %.6g, median = %.6g, max = %.6g\n",
              report.replicate_summary.min, report.replicate_summary.median,
              report.replicate_summary.max);
  std::printf("critical value (alpha = %g): %.8g\n", config.alpha,
              report.critical_value);
  std::printf("p-value: %.6g\n", report.p_value);
  std::printf("decision: %s\n", report.reject ? "reject" : "do not reject");
}

int cmd_test(const std::string& data_arg, const CommonFlags& flags) {
  const auto dataset = wgof::ingest(data_arg);
  const auto config = to_test_config(flags);
  const auto report = wgof::run_test(dataset.values, config);
  if (flags.as_json) {
    std::cout << report_to_json(report, dataset.values.size()).dump(2)
              << std::endl;
  } else {
    print_report(dataset, report);
  }
  return report.reject ? 1 : 0;
}

std::vector<double> parse_double_list(const std::string& arg) {
  std::vector<double> out;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  return out;
}

int cmd_critical_values(const std::string& data_arg, const CommonFlags& flags,
                        const std::string& alphas_arg) {
  const auto dataset = wgof::ingest(data_arg);
  const auto config = to_test_config(flags);
  const auto alphas = parse_double_list(alphas_arg);
  const auto fitted = wgof::fit(dataset.values, config.estimator);
  int redraws = 0;
  auto replicates = wgof::bootstrap_replicates(fitted, dataset.values.size(),
                                               config, &redraws);
  std::sort(replicates.begin(), replicates.end());
  json out = json::array();
  if (!flags.as_json) {
    std::printf("dataset: %s (n = %d), %s weight, a = %g, b = %d\n",
                dataset.source.c_str(), dataset.parsed,
                wgof::weight_family_name(config.weight.family),
                config.weight.a, config.b);
    std::printf("%8s  %14s\n", "alpha", "critical value");
  }
  for (double alpha : alphas) {
    const double c = wgof::critical_value(replicates, alpha);
    if (flags.as_json) {
      out.push_back(json{{"alpha", alpha}, {"critical_value", c}});
    } else {
      std::printf("%8.4f  %14.8g\n", alpha, c);
    }
  }
  if (flags.as_json) std::cout << out.dump(2) << std::endl;
  return 0;
}

int cmd_fibers(const CommonFlags& flags) {
  auto config = to_test_config(flags);
  const std::vector<std::pair<std::string, wgof::WeightFamily>> tests = {
      {"T1", wgof::WeightFamily::Exponential},
      {"T2", wgof::WeightFamily::Gaussian}};
  json out = json::array();
  const auto& names = wgof::builtin_dataset_names();
  std::vector<std::vector<double>> p_values(tests.size(),
                                            std::vector<double>(names.size()));
  for (std::size_t d = 0; d < names.size(); ++d) {
    const auto dataset = wgof::ingest(names[d]);
    for (std::size_t t = 0; t < tests.size(); ++t) {
      config.weight = wgof::WeightSpec(tests[t].second, flags.a);
      const auto report = wgof::run_test(dataset.values, config);
      p_values[t][d] = report.p_value;
      if (flags.as_json) {
        auto entry = report_to_json(report, dataset.values.size());
        entry["dataset"] = dataset.source;
        out.push_back(entry);
      }
    }
  }
  if (flags.as_json) {
    std::cout << out.dump(2) << std::endl;
    return 0;
  }
  std::printf(
      "p-values of the fiber failure stresses (a = %g, b = %d, estimator = "
      "%s, seed = %llu)\n",
      flags.a, config.b, wgof::estimator_name(config.estimator),
      static_cast<unsigned long long>(config.seed));
  std::printf("%-10s", "");
  for (const auto& name : names) std::printf("%10s", name.substr(7).c_str());
  std::printf("\n");
  for (std::size_t t = 0; t < tests.size(); ++t) {
    std::printf("%-10s", tests[t].first.c_str());
    for (double p : p_values[t]) std::printf("%10.3f", p);
    std::printf("\n");
  }
  return 0;
}

struct PowerFlags {
  std::string alts = "all";
  std::string sizes = "20,50";
  std::string tests;
  int replications = 1000;
  bool full = false;
  bool quick = false;
  std::string out = "power";
};

int cmd_power(const CommonFlags& flags, const PowerFlags& power,
              bool b_given, bool reps_given) {
  wgof::StudyConfig study;
  study.alternatives = wgof::resolve_alternatives(power.alts);
  study.tests = power.tests.empty() ? wgof::default_tests()
                                    : wgof::resolve_tests(power.tests);
  study.sample_sizes.clear();
  for (double n : parse_double_list(power.sizes)) {
    study.sample_sizes.push_back(static_cast<int>(n));
  }
  study.replications = 1000;
  study.bootstrap_b = 200;
  if (power.full) {
    study.replications = 5000;
    study.bootstrap_b = 500;
  }
  if (reps_given) study.replications = power.replications;
  if (b_given) study.bootstrap_b = flags.b;
  study.alpha = flags.alpha;
  study.estimator = flags.estimator == "mle"
                        ? wgof::EstimatorKind::MaximumLikelihood
                        : wgof::EstimatorKind::Moments;
  study.master_seed = flags.seed;
  study.validate();

  const auto table = wgof::run_table(study);

  const std::string csv_path = power.out + ".csv";
  const std::string text_path = power.out + ".txt";
  std::ofstream csv(csv_path);
  wgof::write_power_csv(table, csv);
  std::ofstream text(text_path);
  wgof::write_power_text(table, text);
  wgof::write_power_text(table, std::cout);
  std::printf("wrote %s and %s\n", csv_path.c_str(), text_path.c_str());

  int succeeded = 0;
  for (const auto& row : table.rows) succeeded += row.available ? 1 : 0;
  return succeeded > 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Goodness-of-fit tests for the two-parameter Weibull family"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string data_arg;
  std::string alphas_arg = "0.10,0.05,0.01";
  PowerFlags power;

  auto* test_cmd =
      app.add_subcommand("test", "test a dataset against the Weibull family");
  test_cmd->add_option("data", data_arg,
                       "file of positive decimals or builtin name")
      ->required();
  add_common_flags(test_cmd, flags);

  auto* cv_cmd = app.add_subcommand("critical-values",
                                    "bootstrap critical values for a dataset");
  cv_cmd->add_option("data", data_arg, "file or builtin name")->required();
  cv_cmd->add_option("--alphas", alphas_arg, "comma-separated levels");
  add_common_flags(cv_cmd, flags);

  auto* fibers_cmd = app.add_subcommand(
      "fibers", "test the four bundled carbon-fiber datasets");
  add_common_flags(fibers_cmd, flags);

  auto* power_cmd =
      app.add_subcommand("power", "Monte Carlo rejection-rate study");
  power_cmd->add_option("--alts", power.alts,
                        "alternatives (tokens or groups, comma-separated)");
  power_cmd->add_option("--n", power.sizes, "sample sizes, comma-separated");
  power_cmd->add_option("--tests", power.tests,
                        "statistics to run (t1-a5,...; default all six)");
  auto* reps_opt = power_cmd->add_option("--reps", power.replications,
                                         "Monte Carlo replications");
  power_cmd->add_flag("--full", power.full, "5000 replications with b = 500");
  power_cmd->add_flag("--quick", power.quick,
                      "1000 replications with b = 200 (the default scale)");
  power_cmd->add_option("--out", power.out, "output path prefix");
  add_common_flags(power_cmd, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (test_cmd->parsed()) return cmd_test(data_arg, flags);
    if (cv_cmd->parsed()) {
      return cmd_critical_values(data_arg, flags, alphas_arg);
    }
    if (fibers_cmd->parsed()) return cmd_fibers(flags);
    if (power_cmd->parsed()) {
      const bool b_given = power_cmd->count("--b") > 0;
      return cmd_power(flags, power, b_given, reps_opt->count() > 0);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
