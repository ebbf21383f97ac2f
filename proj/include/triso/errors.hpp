#pragma once

#include <stdexcept>
#include <string>

namespace triso {

/// Input that violates a documented precondition (non-orthogonal matrix,
/// asymmetric array, non-unit vector, bad counts).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative method failed to reach its tolerance.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

}  // namespace triso
