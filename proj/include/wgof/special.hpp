#pragma once

namespace wgof {

/// Error function, 2/sqrt(pi) * integral of exp(-t^2) over [0, x].
/// Odd in x; absolute error below 1e-14 across the real line.
double erf(double x);

/// Scaled complementary error function exp(x^2) * (1 - erf(x)) for x >= 0.
///
/// Evaluates the factor exp(z^2/(4a)) * (1 - erf(z/(2 sqrt a))) appearing in
/// the Gaussian-weight statistic without overflow; exp(x^2) alone leaves
/// double range already for x > 26.6. Relative error below 1e-12 up to at
/// least x = 1e6. Negative arguments are rejected.
double erfcx(double x);

/// erfcx(x) - 1 with full relative accuracy near zero, where erfcx(x)
/// rounds to 1 and the difference would otherwise drown in rounding. The
/// Gaussian-weight sums combine these differences against factors growing
/// like 1/x, so absolute error in the plain form is amplified without
/// bound.
double erfcx_m1(double x);

}  // namespace wgof
