#include "wgof/estimators.hpp"

#include <cmath>
#include <stdexcept>

#include "wgof/errors.hpp"

namespace wgof {

const char* estimator_name(EstimatorKind kind) {
  return kind == EstimatorKind::MaximumLikelihood ? "mle" : "moments";
}

namespace {

constexpr double kEulerGamma = 0.5772156649015329;
constexpr double kPiOverSqrt6 = 1.2825498301618641;

// Shape profile g(k) = 1/k + mean(log X) - sum(X^k log X)/sum(X^k),
// strictly decreasing with a unique root for non-constant samples. The
// power sums are formed from exp(k (log X_i - max log X)).
struct ShapeProfile {
  Eigen::ArrayXd logs;
  double mean_log;
  double max_log;

  explicit ShapeProfile(const Sample& sample)
      : logs(sample.values().log()),
        mean_log(logs.mean()),
        max_log(logs.maxCoeff()) {}

  double operator()(double k) const {
    const Eigen::ArrayXd w = (k * (logs - max_log)).exp();
    return 1.0 / k + mean_log - (w * logs).sum() / w.sum();
  }

  // log lambda at the profiled shape
  double log_scale(double k) const {
    const Eigen::ArrayXd w = (k * (logs - max_log)).exp();
    return max_log +
           std::log(w.sum() / static_cast<double>(logs.size())) / k;
  }
};

}  // namespace

MleFit fit_mle(const Sample& sample) {
  const auto n = sample.size();
  if (n < 2) {
    throw std::invalid_argument("fit_mle: need at least two observations");
  }
  const ShapeProfile profile(sample);
  if (profile.logs.maxCoeff() == profile.logs.minCoeff()) {
    throw ConstantSampleError(
        "fit_mle: constant sample, shape equation has no root");
  }

  FitDiagnostics diag;

  // locate a sign change, expanding geometrically from [0.05, 50]
  double lo = 0.05, hi = 50.0;
  double g_lo = profile(lo), g_hi = profile(hi);
  ++diag.iterations, ++diag.iterations;
  while (g_lo <= 0.0 && lo > 1e-4) {
    lo = std::max(lo / 8.0, 1e-4);
    g_lo = profile(lo);
    ++diag.iterations;
  }
  while (g_hi >= 0.0 && hi < 1e4) {
    hi = std::min(hi * 8.0, 1e4);
    g_hi = profile(hi);
    ++diag.iterations;
  }
  if (!(g_lo > 0.0 && g_hi < 0.0)) {
    throw NoConvergenceError(
        "fit_mle: no sign change of the shape profile in [1e-4, 1e4]");
  }
  diag.bracket_low = lo;
  diag.bracket_high = hi;

  // Illinois false-position iteration
  double a = lo, fa = g_lo, b = hi, fb = g_hi;
  double root = b, f_root = fb;
  for (int iter = 0; iter < 200; ++iter) {
    double c = b - fb * (b - a) / (fb - fa);
    if (!(c > std::min(a, b) && c < std::max(a, b))) {
      c = 0.5 * (a + b);
    }
    const double fc = profile(c);
    ++diag.iterations;
    root = c;
    f_root = fc;
    if (std::abs(fc) < 1e-12 || std::abs(b - a) < 1e-13 * c) break;
    if (fb * fc < 0.0) {
      a = b;
      fa = fb;
    } else {
      fa *= 0.5;
    }
    b = c;
    fb = fc;
  }

  diag.residual = std::abs(f_root) * static_cast<double>(n);
  const double k_hat = root;
  const double lambda_hat = std::exp(profile.log_scale(k_hat));
  return MleFit{WeibullParams(lambda_hat, k_hat), diag};
}

WeibullParams fit_moments(const Sample& sample) {
  const auto n = sample.size();
  if (n < 2) {
    throw std::invalid_argument("fit_moments: need at least two observations");
  }
  const Eigen::ArrayXd logs = sample.values().log();
  const double mean_log = logs.mean();
  const double var_log =
      (logs - mean_log).square().sum() / static_cast<double>(n - 1);
  if (!(var_log > 0.0)) {
    throw ConstantSampleError("fit_moments: constant sample, zero variance");
  }
  const double k_hat = kPiOverSqrt6 / std::sqrt(var_log);
  const double lambda_hat = std::exp(mean_log + kEulerGamma / k_hat);
  return WeibullParams(lambda_hat, k_hat);
}

WeibullParams fit(const Sample& sample, EstimatorKind kind) {
  if (kind == EstimatorKind::MaximumLikelihood) {
    return fit_mle(sample).params;
  }
  return fit_moments(sample);
}

}  // namespace wgof
