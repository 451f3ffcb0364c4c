#include "wgof/special.hpp"

#include <cmath>
#include <stdexcept>

namespace wgof {

double erf(double x) { return std::erf(x); }

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

// Laplace continued fraction
//   erfcx(x) = 1/sqrt(pi) * 1/(x + 1/(2x + 2/(x + 3/(2x + ...))))
// evaluated with the modified Lentz algorithm. Converges fast for x >= 4.
double erfcx_continued_fraction(double x) {
  constexpr double tiny = 1e-300;
  double f = x;
  double c = x;
  double d = 0.0;
  for (int n = 1; n < 200; ++n) {
    const double a = static_cast<double>(n);
    const double b = (n % 2 == 0) ? x : 2.0 * x;
    d = b + a * d;
    if (d == 0.0) d = tiny;
    c = b + a / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-17) break;
  }
  return 1.0 / (kSqrtPi * f);
}

}  // namespace

double erfcx(double x) {
  if (!(x >= 0.0)) {
    throw std::domain_error("erfcx: argument must be nonnegative");
  }
  // Below the crossover erfc(x) is far from underflow and the direct
  // product loses nothing; above it the continued fraction takes over.
  if (x < 4.0) {
    return std::exp(x * x) * std::erfc(x);
  }
  return erfcx_continued_fraction(x);
}

double erfcx_m1(double x) {
  if (!(x >= 0.0)) {
    throw std::domain_error("erfcx_m1: argument must be nonnegative");
  }
  if (x >= 1.0) {
    return erfcx(x) - 1.0;  // no cancellation, erfcx(1) ~ 0.43
  }
  // erfcx - 1 = expm1(x^2) - exp(x^2) erf(x); the two parts carry the
  // x^2 and x leading orders separately, so neither subtraction cancels
  const double x2 = x * x;
  return std::expm1(x2) - std::exp(x2) * std::erf(x);
}

}  // namespace wgof
