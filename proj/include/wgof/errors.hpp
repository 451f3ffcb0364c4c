#pragma once

#include <stdexcept>
#include <string>

namespace wgof {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A sample whose observations are all equal; the shape profile equation
/// has no root and the log-variance is zero.
struct ConstantSampleError : Error {
  using Error::Error;
};

/// Data containing non-positive or non-finite values.
struct NonPositiveDataError : Error {
  using Error::Error;
};

/// Root bracketing exhausted its expansion range without a sign change.
struct NoConvergenceError : Error {
  using Error::Error;
};

/// Adaptive quadrature failed to reach the requested tolerance.
struct QuadratureError : Error {
  using Error::Error;
};

/// Empty replicate set passed where at least one value is required.
struct EmptyReplicatesError : Error {
  using Error::Error;
};

/// Input file could not be opened.
struct FileNotFoundError : Error {
  using Error::Error;
};

/// Parsed input contained no usable positive values.
struct NoPositiveValuesError : Error {
  using Error::Error;
};

/// A token in the input could not be parsed as a decimal number.
struct MalformedNumberError : Error {
  MalformedNumberError(const std::string& what, int line)
      : Error(what), line_number(line) {}
  int line_number;
};

}  // namespace wgof
