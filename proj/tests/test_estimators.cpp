#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "wgof/distributions.hpp"
#include "wgof/estimators.hpp"

using wgof::AlternativeSpec;
using wgof::RngStream;
using wgof::Sample;

TEST_SUITE_BEGIN("estimators");

TEST_CASE("moment estimator reproduces the {1, e} hand computation") {
  const auto fit = wgof::fit_moments(Sample::from_vector({1.0, std::exp(1.0)}));
  // k = pi/sqrt(3), lambda = exp(1/2 + gamma sqrt(3)/pi)
  CHECK(fit.k == doctest::Approx(1.8137993642342179).epsilon(1e-12));
  CHECK(fit.lambda == doctest::Approx(2.2664974695710017).epsilon(1e-12));
}

TEST_CASE("moment estimator is exactly scale equivariant") {
  const std::vector<double> base = {0.31, 0.77, 1.2, 2.9, 3.3, 0.05};
  const double c = 3.7;
  std::vector<double> scaled = base;
  for (auto& v : scaled) v *= c;
  const auto f0 = wgof::fit_moments(Sample::from_vector(base));
  const auto f1 = wgof::fit_moments(Sample::from_vector(scaled));
  CHECK(f1.k == doctest::Approx(f0.k).epsilon(1e-12));
  CHECK(f1.lambda == doctest::Approx(c * f0.lambda).epsilon(1e-12));
}

TEST_CASE("two-point likelihood fit matches the grid-bisection oracle") {
  const std::vector<double> data = {1.0, 2.0};
  const auto fit = wgof::fit_mle(Sample::from_vector(data));
  CHECK(fit.params.k == doctest::Approx(3.4615408499204947).epsilon(1e-8));
  CHECK(fit.params.lambda ==
        doctest::Approx(1.6786774138155321).epsilon(1e-8));
  const double oracle_k = oracles::mle_shape_grid_bisection(data);
  CHECK(fit.params.k == doctest::Approx(oracle_k).epsilon(1e-8));
}

TEST_CASE("likelihood fit matches the grid oracle on random samples") {
  RngStream rng(5, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const auto xs = wgof::sample(
        AlternativeSpec::weibull(0.5 + trial * 0.3, 0.4 + trial * 0.45), 25,
        rng);
    std::vector<double> data(xs.values().data(),
                             xs.values().data() + xs.size());
    const auto fit = wgof::fit_mle(xs);
    CHECK(fit.params.k ==
          doctest::Approx(oracles::mle_shape_grid_bisection(data))
              .epsilon(1e-8));
  }
}

TEST_CASE("likelihood fit is scale equivariant") {
  RngStream rng(6, 0);
  const auto xs = wgof::sample(AlternativeSpec::weibull(1.3, 2.2), 60, rng);
  const double c = 3.7;
  const auto f0 = wgof::fit_mle(xs);
  const auto f1 = wgof::fit_mle(xs.scaled(c));
  CHECK(f1.params.k == doctest::Approx(f0.params.k).epsilon(1e-9));
  CHECK(f1.params.lambda ==
        doctest::Approx(c * f0.params.lambda).epsilon(1e-9));
}

TEST_CASE("likelihood diagnostics") {
  RngStream rng(7, 0);
  const auto xs = wgof::sample(AlternativeSpec::weibull(1.0, 1.7), 200, rng);
  const auto fit = wgof::fit_mle(xs);
  CHECK(fit.diagnostics.residual <=
        1e-10 * static_cast<double>(xs.size()));
  CHECK(fit.diagnostics.bracket_low < fit.params.k);
  CHECK(fit.diagnostics.bracket_high > fit.params.k);
  CHECK(fit.diagnostics.iterations > 0);
}

TEST_CASE("unit-exponential data recovers shape one") {
  RngStream rng(8, 0);
  const auto xs = wgof::sample(AlternativeSpec::weibull(1.0, 1.0), 10000, rng);
  const auto fit = wgof::fit_mle(xs);
  CHECK(std::abs(fit.params.k - 1.0) < 0.05);
  CHECK(std::abs(fit.params.lambda - 1.0) < 0.05);
}

TEST_CASE("moment estimator recovers shape two at large n") {
  RngStream rng(9, 0);
  const auto xs = wgof::sample(AlternativeSpec::weibull(1.0, 2.0), 100000, rng);
  const auto fit = wgof::fit_moments(xs);
  CHECK(std::abs(fit.k - 2.0) < 0.05);
  CHECK(std::abs(fit.lambda - 1.0) < 0.05);
}

TEST_CASE("degenerate inputs are rejected") {
  CHECK_THROWS_AS(wgof::fit_mle(Sample::from_vector({2.0, 2.0, 2.0})),
                  wgof::ConstantSampleError);
  CHECK_THROWS_AS(wgof::fit_moments(Sample::from_vector({2.0, 2.0})),
                  wgof::ConstantSampleError);
  CHECK_THROWS_AS(wgof::fit_mle(Sample::from_vector({1.0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(wgof::fit_moments(Sample::from_vector({1.0})),
                  std::invalid_argument);
}

TEST_CASE("both estimators tighten by a factor five from n=100 to n=10000") {
  const double lambda0 = 1.4, k0 = 2.1;
  const auto spec = AlternativeSpec::weibull(lambda0, k0);
  for (const auto kind : {wgof::EstimatorKind::MaximumLikelihood,
                          wgof::EstimatorKind::Moments}) {
    std::vector<double> err_small, err_large;
    for (std::uint64_t seed_index = 0; seed_index < 50; ++seed_index) {
      RngStream small_rng(100 + seed_index, 0), large_rng(100 + seed_index, 1);
      const auto fit_small =
          wgof::fit(wgof::sample(spec, 100, small_rng), kind);
      const auto fit_large =
          wgof::fit(wgof::sample(spec, 10000, large_rng), kind);
      err_small.push_back(std::abs(fit_small.k - k0) +
                          std::abs(fit_small.lambda - lambda0));
      err_large.push_back(std::abs(fit_large.k - k0) +
                          std::abs(fit_large.lambda - lambda0));
    }
    auto median = [](std::vector<double> v) {
      std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
      return v[v.size() / 2];
    };
    CHECK(median(err_large) < median(err_small) / 5.0);
  }
}

TEST_SUITE_END();
