#pragma once

#include <stdexcept>
#include <string>

namespace stfd {

// Argument outside the mathematical domain of an operation.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The requested value is a genuine point mass (Dirac distribution), not a
// finite density value; callers must branch on this rather than receive a
// large spike.
struct DiracLimitError : std::domain_error {
  using std::domain_error::domain_error;
};

// Adaptive quadrature exhausted its subdivision budget. Carries the best
// value obtained so far and the error estimate actually achieved.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double achieved, double value)
      : std::runtime_error(what), achieved_(achieved), value_(value) {}
  double achieved_error() const { return achieved_; }
  double best_value() const { return value_; }

 private:
  double achieved_;
  double value_;
};

}  // namespace stfd
