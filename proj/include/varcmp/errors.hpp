#pragma once

#include <stdexcept>
#include <string>

namespace varcmp {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A moment (mean or variance) that does not exist for the requested parameters.
class MomentUndefinedError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An iterative method hit its iteration cap before reaching the requested accuracy.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature could not certify the requested tolerance.
/// The best available estimate is attached.
class QuadratureError : public ConvergenceError {
 public:
  QuadratureError(const std::string& what, double best_value, double error_bound)
      : ConvergenceError(what), best_value_(best_value), error_bound_(error_bound) {}

  double best_value() const noexcept { return best_value_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double best_value_;
  double error_bound_;
};

}  // namespace varcmp
