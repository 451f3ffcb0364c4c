#pragma once

#include "wgof/distributions.hpp"
#include "wgof/rng.hpp"
#include "wgof/sample.hpp"

namespace wgof {

enum class WeightFamily {
  Exponential,  // w_a(t) = exp(-a t)
  Gaussian,     // w_a(t) = exp(-a t^2)
};

const char* weight_family_name(WeightFamily family);

/// Weight function of the weighted-L2 statistic; both families are
/// integrable against (t^4 + 1) dt for every a > 0.
struct WeightSpec {
  WeightFamily family;
  double a;  // decay rate

  WeightSpec(WeightFamily family_in, double a_in);

  double operator()(double t) const;
};

/// A statistic evaluation together with the inputs that produced it.
struct StatisticValue {
  double value;  // clamped to 0 when within 1e-12 below zero
  Eigen::Index n;
  WeightSpec weight;
  WeibullParams params_used;
};

/// r(x) = x^(-1) (k (x/lambda)^k - k + 1), the score-type factor of the
/// Laplace-transform characterization.
double r_term(double x, const WeibullParams& params);

/// Empirical process V(t) = n^(-1/2) sum_j [ r(X_j)(1 - e^(-t X_j))
/// - t e^(-t X_j) ]; the statistic is the weighted L2 norm of V squared.
double vn_at(const Sample& sample, const WeibullParams& params, double t);

/// Closed-form evaluation of the statistic as an O(n^2) double sum, one
/// form per weight family. Every factor exp(z^2/(4a))(1 - erf(z/(2 sqrt a)))
/// of the Gaussian-weight form is evaluated as erfcx(z/(2 sqrt a)); the
/// naive product overflows once (X_i+X_j)^2/(4a) passes ~700. Sums are
/// Kahan-compensated.
StatisticValue statistic_closed_form(const Sample& sample,
                                     const WeibullParams& params,
                                     const WeightSpec& weight);

/// Direct adaptive quadrature of integral of V(t)^2 w(t) dt, the
/// independent route used to cross-check the closed forms. The domain is
/// truncated where the weight has decayed below 1e-18 of its peak (and
/// extended further while the integrand is still visible), then handled
/// by adaptive Gauss-Kronrod; rel_tol must lie in (1e-12, 1e-2).
StatisticValue statistic_quadrature(const Sample& sample,
                                    const WeibullParams& params,
                                    const WeightSpec& weight, double rel_tol);

/// Monte Carlo estimate of the population-level weighted-L2 discrepancy
///   integral of (E[r(X)(1 - e^(-tX))] - E[t e^(-tX)])^2 w(t) dt
/// between data_spec and the Weibull law with the given parameters. Zero
/// exactly when data_spec is that Weibull law; strictly positive off the
/// family. The squared mean is estimated by its unbiased cross-moment
/// form (m_hat^2 minus s^2/draws), so the returned value is free of the
/// 1/draws plug-in bias and can dip slightly below zero under the null.
double characterization_gap(const WeibullParams& params,
                            const AlternativeSpec& data_spec,
                            const WeightSpec& weight, int mc_draws,
                            RngStream& rng);

}  // namespace wgof
