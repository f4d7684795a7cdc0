#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cutreg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration object (tolerances, node counts, schemes).
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at a point where the function is singular.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// A multi-index scheme violates the support constraint.
class ConstraintViolation : public Error {
 public:
  ConstraintViolation(const std::string& what, std::size_t index)
      : Error(what), index_(index) {}

  /// Position of the offending entry in the scheme.
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Iterative method stopped before meeting its tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double partial_value,
                   double error_estimate)
      : Error(what), partial_value_(partial_value),
        error_estimate_(error_estimate) {}

  double partial_value() const noexcept { return partial_value_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double partial_value_;
  double error_estimate_;
};

/// No retained series term is small enough to certify strict positivity.
class CertificateUnavailable : public Error {
 public:
  using Error::Error;
};

}  // namespace cutreg
