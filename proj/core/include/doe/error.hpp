#pragma once

#include <stdexcept>
#include <string>

namespace doe {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Pairwise metric requested on a design with fewer than two points.
class UndefinedMetricError : public Error {
 public:
  using Error::Error;
};

/// phi_p evaluated on a design containing coincident points; the raw value
/// would overflow, so the condition is reported instead of returning inf.
class CoincidentPointsError : public Error {
 public:
  using Error::Error;
};

/// Malformed design file or config file. Messages carry the line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A coordinate fell outside its Bounds interval.
class OutOfBoundsError : public Error {
 public:
  using Error::Error;
};

/// Metamodel training failure (singular covariance, solver non-convergence).
class FitError : public Error {
 public:
  explicit FitError(const std::string& what, double residual = 0.0)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Sequential sampler state does not match the design it was handed.
class StateError : public Error {
 public:
  using Error::Error;
};

/// Requested dimension exceeds the embedded direction-number table.
class UnsupportedDimensionError : public Error {
 public:
  using Error::Error;
};

/// Invalid experiment configuration; messages name the offending key.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace doe
