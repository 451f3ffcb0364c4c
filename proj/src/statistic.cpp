#include "wgof/statistic.hpp"

#include <cmath>
#include <stdexcept>

#include "wgof/errors.hpp"
#include "wgof/quadrature.hpp"
#include "wgof/special.hpp"

namespace wgof {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double v) {
    const double y = v - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

double clamp_near_zero(double v) {
  return (v < 0.0 && v >= -1e-12) ? 0.0 : v;
}

Eigen::ArrayXd r_terms(const Sample& sample, const WeibullParams& params) {
  const Eigen::ArrayXd& x = sample.values();
  return ((x / params.lambda).pow(params.k) * params.k - params.k + 1.0) / x;
}

// sum over ordered pairs (i,j) of
//   r_i r_j (1/a - 1/(a+X_i) - 1/(a+X_j) + 1/(a+X_i+X_j))
//   - 2 r_j (1/(a+X_i)^2 - 1/(a+X_i+X_j)^2)
//   + 2/(a+X_i+X_j)^3
// folded over i <= j; the parenthesised differences are expanded to
// cancellation-free products.
double exp_weight_sum(const Eigen::ArrayXd& x, const Eigen::ArrayXd& r,
                      double a) {
  const auto n = x.size();
  KahanSum total;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double xi = x[i], ri = r[i];
    const double api = a + xi;
    for (Eigen::Index j = i; j < n; ++j) {
      const double xj = x[j], rj = r[j];
      const double s = xi + xj;
      const double aps = a + s;
      const double apj = a + xj;
      const double quad = xi * xj * (2.0 * a + s) / (a * api * apj * aps);
      const double cross_ij = xj * (2.0 * api + xj) / (api * api * aps * aps);
      const double cube = 2.0 / (aps * aps * aps);
      if (i == j) {
        total.add(ri * rj * quad - 2.0 * rj * cross_ij + cube);
      } else {
        const double cross_ji = xi * (2.0 * apj + xi) / (apj * apj * aps * aps);
        total.add(2.0 * ri * rj * quad -
                  2.0 * (rj * cross_ij + ri * cross_ji) + 2.0 * cube);
      }
    }
  }
  return total.sum;
}

// Gaussian-weight analogue; E(z) = erfcx(z / (2 sqrt a)) carries every
// exp(z^2/(4a)) (1 - erf(.)) factor. The combinations are arranged
// around erfcx - 1: the raw prints (1 - E_i - E_j + E_s and s E_s -
// x_i E_i) shrink like x_i x_j and meet r factors growing like 1/x, so
// plain-erfcx rounding noise would be amplified without bound on samples
// with tiny observations.
double gauss_weight_sum(const Eigen::ArrayXd& x, const Eigen::ArrayXd& r,
                        double a) {
  const auto n = x.size();
  const double sqrt_a = std::sqrt(a);
  const double inv_2sqrt_a = 0.5 / sqrt_a;
  const double c1 = 0.5 * kSqrtPi / sqrt_a;
  const double c2 = kSqrtPi / (4.0 * a * sqrt_a);
  const double c3 = 1.0 / (8.0 * a * a * sqrt_a);

  Eigen::ArrayXd em1(n);  // E_i - 1
  for (Eigen::Index i = 0; i < n; ++i) em1[i] = erfcx_m1(x[i] * inv_2sqrt_a);

  // Observations below the linear regime of erfcx (argument < 1e-7) meet
  // r factors of order 1/x; there the combinations are replaced by their
  // exact first-order limits,
  //   1 - E_i - E_j + E_s      ->  x_i x_j E_s / (2a)
  //   x_v + s E_s - x_u E_u    ->  x_v (E_s + s E'(s))        (x_v small)
  // with E'(z) = (2 z E(z) / (4a) - 1/sqrt(pi a)).
  const double tiny_cut = 1e-7 / inv_2sqrt_a;
  const double two_c2_sq = 2.0 * inv_2sqrt_a * inv_2sqrt_a;  // 1/(2a)

  KahanSum total;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double xi = x[i], ri = r[i], mi = em1[i];
    for (Eigen::Index j = i; j < n; ++j) {
      const double xj = x[j], rj = r[j], mj = em1[j];
      const double s = xi + xj;
      const double ms = erfcx_m1(s * inv_2sqrt_a);
      const double es = 1.0 + ms;
      const double eprime_s =
          inv_2sqrt_a * (2.0 * (s * inv_2sqrt_a) * es - 2.0 / kSqrtPi);
      const bool i_tiny = xi < tiny_cut;
      const bool j_tiny = xj < tiny_cut;

      // 1 - E_i - E_j + E_s
      const double quad = c1 * ((i_tiny || j_tiny) ? two_c2_sq * xi * xj * es
                                                   : ms - mi - mj);
      // s E_s - x_i E_i
      const double cross_ij = j_tiny ? xj * (es + s * eprime_s)
                                     : xj + (s * ms - xi * mi);
      const double tail =
          c3 * (-2.0 * sqrt_a * s + kSqrtPi * (2.0 * a + s * s) * es);
      if (i == j) {
        total.add(ri * rj * quad - 2.0 * rj * c2 * cross_ij + tail);
      } else {
        const double cross_ji = i_tiny ? xi * (es + s * eprime_s)
                                       : xi + (s * ms - xj * mj);
        total.add(2.0 * ri * rj * quad -
                  2.0 * c2 * (rj * cross_ij + ri * cross_ji) + 2.0 * tail);
      }
    }
  }
  return total.sum;
}

// Domain cutoff for integrals damped by the weight: start where the
// weight has fallen below 1e-18 and stretch while the integrand is still
// visible next to its peak.
template <class F>
double truncation_point(const WeightSpec& weight, F& integrand) {
  const double log_cut = 18.0 * 2.302585092994046;  // -log(1e-18)
  double t_end = weight.family == WeightFamily::Exponential
                     ? log_cut / weight.a
                     : std::sqrt(log_cut / weight.a);
  double peak = 0.0;
  for (int i = 0; i <= 32; ++i) {
    peak = std::max(peak, std::abs(integrand(t_end * i / 32.0)));
  }
  const double floor = 1e-16 * (peak + 1e-300);
  int doublings = 0;
  while (std::abs(integrand(t_end)) > floor && doublings++ < 6) {
    t_end *= 2.0;
  }
  return t_end;
}

}  // namespace

const char* weight_family_name(WeightFamily family) {
  return family == WeightFamily::Exponential ? "exp" : "gauss";
}

WeightSpec::WeightSpec(WeightFamily family_in, double a_in)
    : family(family_in), a(a_in) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw std::invalid_argument("WeightSpec: a must be positive");
  }
}

double WeightSpec::operator()(double t) const {
  return family == WeightFamily::Exponential ? std::exp(-a * std::abs(t))
                                             : std::exp(-a * t * t);
}

double r_term(double x, const WeibullParams& params) {
  if (!(x > 0.0)) {
    throw std::domain_error("r_term: x must be positive");
  }
  return (params.k * std::pow(x / params.lambda, params.k) - params.k + 1.0) /
         x;
}

double vn_at(const Sample& sample, const WeibullParams& params, double t) {
  if (!(t >= 0.0)) {
    throw std::domain_error("vn_at: t must be nonnegative");
  }
  const Eigen::ArrayXd& x = sample.values();
  const Eigen::ArrayXd r = r_terms(sample, params);
  // r (1 - e^(-tx)) via expm1: r grows like 1/x for small x, where plain
  // 1 - e^(-tx) only has absolute accuracy
  const Eigen::ArrayXd em =
      (-t * x).unaryExpr([](double z) { return std::expm1(z); });
  return (-r * em - t * (1.0 + em)).sum() /
         std::sqrt(static_cast<double>(sample.size()));
}

StatisticValue statistic_closed_form(const Sample& sample,
                                     const WeibullParams& params,
                                     const WeightSpec& weight) {
  const Eigen::ArrayXd& x = sample.values();
  const Eigen::ArrayXd r = r_terms(sample, params);
  const double raw = (weight.family == WeightFamily::Exponential
                          ? exp_weight_sum(x, r, weight.a)
                          : gauss_weight_sum(x, r, weight.a)) /
                     static_cast<double>(sample.size());
  return StatisticValue{clamp_near_zero(raw), sample.size(), weight, params};
}

StatisticValue statistic_quadrature(const Sample& sample,
                                    const WeibullParams& params,
                                    const WeightSpec& weight, double rel_tol) {
  if (!(rel_tol > 1e-12 && rel_tol < 1e-2)) {
    throw std::invalid_argument(
        "statistic_quadrature: rel_tol outside (1e-12, 1e-2)");
  }
  auto integrand = [&](double t) {
    const double v = vn_at(sample, params, t);
    return v * v * weight(t);
  };
  const double t_end = truncation_point(weight, integrand);
  QuadratureResult q;
  try {
    q = integrate_gk15(integrand, 0.0, t_end, rel_tol, 0.0, 20000);
  } catch (const QuadratureError&) {
    throw QuadratureError("statistic_quadrature: did not converge");
  }
  return StatisticValue{clamp_near_zero(q.value), sample.size(), weight,
                        params};
}

double characterization_gap(const WeibullParams& params,
                            const AlternativeSpec& data_spec,
                            const WeightSpec& weight, int mc_draws,
                            RngStream& rng) {
  if (mc_draws < 1000) {
    throw std::invalid_argument("characterization_gap: need >= 1000 draws");
  }
  const Sample draws = sample(data_spec, mc_draws, rng);
  const Eigen::ArrayXd& x = draws.values();
  const Eigen::ArrayXd r = r_terms(draws, params);
  const double m = static_cast<double>(mc_draws);

  auto integrand = [&](double t) {
    const Eigen::ArrayXd em =
        (-t * x).unaryExpr([](double v) { return std::expm1(v); });
    const Eigen::ArrayXd z = -r * em - t * (1.0 + em);
    const double mean = z.mean();
    const double var = (z - mean).square().sum() / (m - 1.0);
    return (mean * mean - var / m) * weight(t);
  };

  const double t_end = truncation_point(weight, integrand);
  double peak = 0.0;
  for (int i = 0; i <= 32; ++i) {
    peak = std::max(peak, std::abs(integrand(t_end * i / 32.0)));
  }
  // absolute floor: under the null the integral is genuinely ~0 and a
  // purely relative target would never be met
  const double abs_tol = 1e-9 * peak * t_end + 1e-300;
  const auto q = integrate_gk15(integrand, 0.0, t_end, 1e-7, abs_tol, 20000);
  return q.value;
}

}  // namespace wgof
