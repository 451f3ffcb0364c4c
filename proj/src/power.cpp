#include "wgof/power.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "wgof/errors.hpp"
#include "wgof/parallel.hpp"

namespace wgof {

void StudyConfig::validate() const {
  if (replications < 1) {
    throw std::invalid_argument("StudyConfig: replications must be >= 1");
  }
  if (bootstrap_b < 1) {
    throw std::invalid_argument("StudyConfig: bootstrap_b must be >= 1");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("StudyConfig: alpha must lie in (0, 1)");
  }
  for (int n : sample_sizes) {
    if (n < 2) {
      throw std::invalid_argument("StudyConfig: sample sizes must be >= 2");
    }
  }
}

RateEstimate estimate_rejection_rate(const AlternativeSpec& spec, int n,
                                     const TestConfig& test_template,
                                     int replications, RngStream rng) {
  if (replications < 1) {
    throw std::invalid_argument(
        "estimate_rejection_rate: replications must be >= 1");
  }
  test_template.validate();

  // 0 = skip, 1 = keep, 2 = reject
  std::vector<unsigned char> outcome(replications, 0);
  parallel_for(replications, thread_budget(test_template.threads), [&](int j) {
    const auto idx = static_cast<std::uint64_t>(j);
    RngStream data_stream = rng.substream(2 * idx);
    TestConfig config = test_template;
    config.seed = rng.derive_seed(2 * idx + 1);
    config.threads = 1;  // parallelism lives at the replication level
    try {
      const Sample data = sample(spec, n, data_stream);
      outcome[j] = run_test(data, config).reject ? 2 : 1;
    } catch (const Error&) {
      outcome[j] = 0;
    }
  });

  int skipped = 0;
  int rejected = 0;
  for (unsigned char o : outcome) {
    if (o == 0) ++skipped;
    if (o == 2) ++rejected;
  }
  if (skipped * 1000 > replications) {
    throw NoConvergenceError(
        "estimate_rejection_rate: more than 0.1% of replications skipped");
  }
  const double effective = static_cast<double>(replications - skipped);
  RateEstimate est;
  est.rate = rejected / effective;
  est.std_error = std::sqrt(est.rate * (1.0 - est.rate) / effective);
  est.skipped = skipped;
  return est;
}

PowerTable run_table(const StudyConfig& config) {
  config.validate();
  PowerTable table;
  table.config = config;

  TestConfig base;
  base.estimator = config.estimator;
  base.b = config.bootstrap_b;
  base.alpha = config.alpha;
  base.threads = config.threads;

  std::uint64_t row_index = 0;
  for (const auto& alt : config.alternatives) {
    for (int n : config.sample_sizes) {
      for (const auto& test : config.tests) {
        PowerRow row;
        row.alternative = alt.label;
        row.n = n;
        row.test = test.label;
        const std::uint64_t r = row_index++;
        if (!alt.spec.has_value()) {
          row.available = false;
          row.note = alt.note.empty()
                         ? "unavailable: parameters missing from source"
                         : alt.note;
        } else {
          TestConfig cell = base;
          cell.weight = test.weight;
          try {
            row.estimate = estimate_rejection_rate(
                *alt.spec, n, cell, config.replications,
                RngStream(config.master_seed, r));
            row.available = true;
          } catch (const std::exception& e) {
            row.available = false;
            row.note = std::string("failed: ") + e.what();
          }
        }
        table.rows.push_back(std::move(row));
      }
    }
  }
  return table;
}

namespace {

std::string format_rate(const PowerRow& row) {
  char buf[64];
  if (!row.available) return "-";
  std::snprintf(buf, sizeof(buf), "%.1f", 100.0 * row.estimate.rate);
  return buf;
}

}  // namespace

void write_power_csv(const PowerTable& table, std::ostream& os) {
  os << "alternative,n,test,rate,se,note\n";
  char buf[128];
  for (const auto& row : table.rows) {
    if (row.available) {
      std::snprintf(buf, sizeof(buf), "%.4f,%.4f", 100.0 * row.estimate.rate,
                    100.0 * row.estimate.std_error);
      os << row.alternative << ',' << row.n << ',' << row.test << ',' << buf
         << ",\n";
    } else {
      os << row.alternative << ',' << row.n << ',' << row.test << ",,,"
         << row.note << "\n";
    }
  }
}

void write_power_text(const PowerTable& table, std::ostream& os) {
  // one block per sample size, alternatives as rows, tests as columns
  std::vector<int> sizes;
  std::vector<std::string> tests;
  std::vector<std::string> alts;
  for (const auto& row : table.rows) {
    if (std::find(sizes.begin(), sizes.end(), row.n) == sizes.end()) {
      sizes.push_back(row.n);
    }
    if (std::find(tests.begin(), tests.end(), row.test) == tests.end()) {
      tests.push_back(row.test);
    }
    if (std::find(alts.begin(), alts.end(), row.alternative) == alts.end()) {
      alts.push_back(row.alternative);
    }
  }
  std::map<std::tuple<std::string, int, std::string>, const PowerRow*> cells;
  for (const auto& row : table.rows) {
    cells[{row.alternative, row.n, row.test}] = &row;
  }
  for (int n : sizes) {
    os << "rejection percentages, n = " << n
       << " (replications = " << table.config.replications
       << ", b = " << table.config.bootstrap_b
       << ", alpha = " << table.config.alpha << ")\n";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%-16s", "alternative");
    os << buf;
    for (const auto& t : tests) {
      std::snprintf(buf, sizeof(buf), "%10s", t.c_str());
      os << buf;
    }
    os << '\n';
    for (const auto& a : alts) {
      std::snprintf(buf, sizeof(buf), "%-16s", a.c_str());
      os << buf;
      for (const auto& t : tests) {
        auto it = cells.find({a, n, t});
        std::snprintf(buf, sizeof(buf), "%10s",
                      it == cells.end() ? "" : format_rate(*it->second).c_str());
        os << buf;
      }
      os << '\n';
    }
    os << '\n';
  }
}

const std::vector<StudyAlternative>& study_catalog() {
  static const std::vector<StudyAlternative> catalog = [] {
    std::vector<StudyAlternative> rows;
    auto add = [&rows](const std::string& token, const std::string& label,
                       AlternativeSpec spec) {
      rows.push_back(StudyAlternative{token, label, spec, ""});
    };
    add("w-1-0.9", "W(1,0.9)", AlternativeSpec::weibull(1.0, 0.9));
    add("w-1-1.5", "W(1,1.5)", AlternativeSpec::weibull(1.0, 1.5));
    add("w-1-3", "W(1,3)", AlternativeSpec::weibull(1.0, 3.0));
    add("w-0.25-1", "W(1/4,1)", AlternativeSpec::weibull(0.25, 1.0));
    add("gamma-8-1", "Gamma(8,1)", AlternativeSpec::gamma(8.0, 1.0));
    add("gamma-2-1", "Gamma(2,1)", AlternativeSpec::gamma(2.0, 1.0));
    add("gamma-0.2-1", "Gamma(0.2,1)", AlternativeSpec::gamma(0.2, 1.0));
    add("ln-0-0.5", "LN(0,0.5)", AlternativeSpec::log_normal(0.0, 0.5));
    add("ln-0-0.8", "LN(0,0.8)", AlternativeSpec::log_normal(0.0, 0.8));
    add("ln-0-1.2", "LN(0,1.2)", AlternativeSpec::log_normal(0.0, 1.2));
    add("igamma-3-1", "iGamma(3,1)", AlternativeSpec::inverse_gamma(3.0, 1.0));
    add("igamma-1.5-1", "iGamma(1.5,1)",
        AlternativeSpec::inverse_gamma(1.5, 1.0));
    add("gg1", "GG1", AlternativeSpec::generalized_gamma(0.6, 0.9, 1.4));
    add("gg2", "GG2", AlternativeSpec::generalized_gamma(10.0, 0.0001, 0.2));
    add("addw1", "AddW1", AlternativeSpec::additive_weibull(7.0, 5.0, 0.9, 0.9));
    rows.push_back(StudyAlternative{
        "addw2", "AddW2", std::nullopt,
        "unavailable: parameters missing from source"});
    add("pareto-0.5-2", "P(0.5,2)", AlternativeSpec::pareto(0.5, 2.0));
    add("pareto-1.5-2.5", "P(1.5,2.5)", AlternativeSpec::pareto(1.5, 2.5));
    add("ig-1-1", "IG(1,1)", AlternativeSpec::inverse_gaussian(1.0, 1.0));
    add("ig-1-2", "IG(1,2)", AlternativeSpec::inverse_gaussian(1.0, 2.0));
    return rows;
  }();
  return catalog;
}

std::vector<TestSpec> default_tests() {
  std::vector<TestSpec> tests;
  for (double a : {1.0, 2.0, 5.0}) {
    char label[32];
    std::snprintf(label, sizeof(label), "T1_a%g", a);
    tests.push_back({WeightSpec(WeightFamily::Exponential, a), label});
  }
  for (double a : {1.0, 2.0, 5.0}) {
    char label[32];
    std::snprintf(label, sizeof(label), "T2_a%g", a);
    tests.push_back({WeightSpec(WeightFamily::Gaussian, a), label});
  }
  return tests;
}

namespace {

std::vector<std::string> split_tokens(const std::string& tokens) {
  std::vector<std::string> out;
  std::stringstream ss(tokens);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

bool in_group(const StudyAlternative& alt, const std::string& group) {
  using Family = AlternativeSpec::Family;
  if (group == "all") return true;
  const bool is_null =
      alt.spec.has_value() && alt.spec->family() == Family::Weibull;
  if (group == "weibull-null" || group == "null") return is_null;
  if (group == "alternatives") return !is_null;
  if (!alt.spec.has_value()) {
    return group == "addweibull";  // the placeholder row
  }
  switch (alt.spec->family()) {
    case Family::Gamma:
      return group == "gamma";
    case Family::LogNormal:
      return group == "lognormal";
    case Family::InverseGamma:
      return group == "igamma";
    case Family::GeneralizedGamma:
      return group == "gengamma";
    case Family::AdditiveWeibull:
      return group == "addweibull";
    case Family::Pareto:
      return group == "pareto";
    case Family::InverseGaussian:
      return group == "igauss";
    default:
      return false;
  }
}

}  // namespace

std::vector<StudyAlternative> resolve_alternatives(const std::string& tokens) {
  static const std::vector<std::string> groups = {
      "all",      "weibull-null", "null",   "alternatives", "gamma",
      "lognormal", "igamma",      "gengamma", "addweibull",  "pareto",
      "igauss"};
  std::vector<StudyAlternative> out;
  auto add_unique = [&out](const StudyAlternative& alt) {
    for (const auto& existing : out) {
      if (existing.token == alt.token) return;
    }
    out.push_back(alt);
  };
  for (const auto& token : split_tokens(tokens)) {
    bool matched = false;
    if (std::find(groups.begin(), groups.end(), token) != groups.end()) {
      for (const auto& alt : study_catalog()) {
        if (in_group(alt, token)) {
          add_unique(alt);
          matched = true;
        }
      }
    } else {
      for (const auto& alt : study_catalog()) {
        if (alt.token == token) {
          add_unique(alt);
          matched = true;
          break;
        }
      }
    }
    if (!matched) {
      throw std::invalid_argument("unknown alternative token: " + token);
    }
  }
  return out;
}

std::vector<TestSpec> resolve_tests(const std::string& tokens) {
  std::vector<TestSpec> out;
  for (const auto& token : split_tokens(tokens)) {
    bool matched = false;
    for (const auto& test : default_tests()) {
      std::string canon = test.label;  // "T1_a5" -> "t1-a5"
      for (auto& ch : canon) ch = static_cast<char>(std::tolower(ch));
      std::replace(canon.begin(), canon.end(), '_', '-');
      if (token == canon) {
        out.push_back(test);
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw std::invalid_argument("unknown test token: " + token);
    }
  }
  return out;
}

}  // namespace wgof
