#pragma once

#include "wgof/distributions.hpp"
#include "wgof/sample.hpp"

namespace wgof {

enum class EstimatorKind { MaximumLikelihood, Moments };

const char* estimator_name(EstimatorKind kind);

/// Numerical record of a maximum-likelihood fit.
struct FitDiagnostics {
  int iterations = 0;
  double residual = 0.0;  // n-scaled shape-equation residual at the root
  double bracket_low = 0.0;
  double bracket_high = 0.0;
};

struct MleFit {
  WeibullParams params;
  FitDiagnostics diagnostics;
};

/// Maximum-likelihood estimate.
///
/// The shape solves
///   n/k + sum log X_i = n * sum X_i^k log X_i / sum X_i^k
/// by bracketed root finding (the left side minus the right is strictly
/// decreasing in k), then lambda = (mean X_i^k)^(1/k). Power sums are
/// accumulated through shifted exponentials of k*log X_i, so bracket
/// expansion up to k ~ 1e4 cannot overflow.
///
/// Requires n >= 2. A constant sample has no root and is rejected rather
/// than clamped; NoConvergenceError signals an exhausted bracket
/// expansion.
MleFit fit_mle(const Sample& sample);

/// Moment estimate: k = (pi/sqrt 6) / sd(log X) with the (n-1)-denominator
/// standard deviation, lambda = exp(mean(log X) + gamma/k) with the
/// Euler-Mascheroni constant. Requires n >= 2 and a non-constant sample.
WeibullParams fit_moments(const Sample& sample);

/// Dispatch on the estimator kind (MLE fits drop their diagnostics).
WeibullParams fit(const Sample& sample, EstimatorKind kind);

}  // namespace wgof
