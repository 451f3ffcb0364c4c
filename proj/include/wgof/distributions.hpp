#pragma once

#include <Eigen/Core>
#include <array>
#include <string>

#include "wgof/rng.hpp"
#include "wgof/sample.hpp"

namespace wgof {

/// Scale-shape parameter pair of the two-parameter Weibull family.
struct WeibullParams {
  double lambda;  // scale, same units as the data
  double k;       // shape, dimensionless

  WeibullParams(double lambda_in, double k_in);
};

/// Density f(x) = (k / lambda^k) x^(k-1) exp(-(x/lambda)^k), x > 0.
double weibull_pdf(const WeibullParams& params, double x);
double weibull_log_pdf(const WeibullParams& params, double x);

/// One Weibull draw by inversion, lambda * (-log U)^(1/k). Extreme shapes
/// can push the power outside double range; draws are clamped to the
/// representable positive interval so samples stay strictly positive.
double weibull_draw(const WeibullParams& params, RngStream& rng);
Sample sample_weibull(const WeibullParams& params, int n, RngStream& rng);

/// A data-generating distribution for the power study: either a Weibull
/// null or one of the positive-line alternatives.
class AlternativeSpec {
 public:
  enum class Family {
    Weibull,           // (lambda, k)
    Gamma,             // (shape a, scale s)
    LogNormal,         // (mu, sigma)
    InverseGamma,      // (shape alpha, scale beta)
    GeneralizedGamma,  // (m, s, g); density ~ x^(gs-1) exp(-(x s / m)^g)
    AdditiveWeibull,   // (a, b, c, d); survival exp(-(x/a)^b - (x/c)^d)
    Pareto,            // (m, s), s > 1; mean m
    InverseGaussian,   // (mean m, dispersion s)
  };

  static AlternativeSpec weibull(double lambda, double k);
  static AlternativeSpec gamma(double shape, double scale);
  static AlternativeSpec log_normal(double mu, double sigma);
  static AlternativeSpec inverse_gamma(double shape, double scale);
  static AlternativeSpec generalized_gamma(double m, double s, double g);
  static AlternativeSpec additive_weibull(double a, double b, double c,
                                          double d);
  static AlternativeSpec pareto(double m, double s);
  static AlternativeSpec inverse_gaussian(double m, double s);

  Family family() const { return family_; }
  const std::array<double, 4>& params() const { return params_; }
  std::string label() const;

 private:
  AlternativeSpec(Family family, std::array<double, 4> params);

  Family family_;
  std::array<double, 4> params_;
};

/// Density of the given family at x > 0.
double alternative_pdf(const AlternativeSpec& spec, double x);
double alternative_log_pdf(const AlternativeSpec& spec, double x);

/// n i.i.d. draws. Equal (seed, stream_id, spec, n) give bit-identical
/// samples.
Sample sample(const AlternativeSpec& spec, int n, RngStream& rng);

/// log of the draws that sample() would produce from the same stream
/// state. For the generalized gamma this is the native computation and
/// stays finite even where the draw itself underflows double range.
Eigen::ArrayXd sample_log(const AlternativeSpec& spec, int n, RngStream& rng);

/// Gamma(shape, 1) draw via the Marsaglia-Tsang squeeze method; valid for
/// every shape > 0 (shape < 1 via the boost G(a) = G(a+1) U^(1/a)).
double gamma_draw(double shape, RngStream& rng);

/// log of a Gamma(shape, 1) draw, computed without underflow; at tiny
/// shapes the draw itself is far below double range while its log is a
/// moderate negative number.
double log_gamma_draw(double shape, RngStream& rng);

}  // namespace wgof
