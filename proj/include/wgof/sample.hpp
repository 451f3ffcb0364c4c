#pragma once

#include <Eigen/Core>
#include <cmath>
#include <utility>
#include <vector>

#include "wgof/errors.hpp"

namespace wgof {

/// A nonempty collection of strictly positive, finite observations.
class Sample {
 public:
  explicit Sample(Eigen::ArrayXd values) : values_(std::move(values)) {
    if (values_.size() == 0) {
      throw NonPositiveDataError("Sample: empty");
    }
    for (Eigen::Index i = 0; i < values_.size(); ++i) {
      const double v = values_[i];
      if (!(v > 0.0) || !std::isfinite(v)) {
        throw NonPositiveDataError(
            "Sample: observations must be positive and finite");
      }
    }
  }

  static Sample from_vector(const std::vector<double>& v) {
    return Sample(Eigen::Map<const Eigen::ArrayXd>(v.data(),
                                                   static_cast<Eigen::Index>(v.size())));
  }

  const Eigen::ArrayXd& values() const { return values_; }
  Eigen::Index size() const { return values_.size(); }
  double operator[](Eigen::Index i) const { return values_[i]; }

  /// Same observations scaled by c > 0 (scale-equivariance checks).
  Sample scaled(double c) const { return Sample(values_ * c); }

 private:
  Eigen::ArrayXd values_;
};

}  // namespace wgof
