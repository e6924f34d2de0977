#pragma once

#include <stdexcept>
#include <string>

namespace fraclap {

/// Argument sits on a pole of Gamma (non-positive integer).
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input outside the domain where a formula is stated (|x| >= 1, alpha not in (0,2), ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Series or quadrature did not reach its tolerance within the work cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Eigensolver failure, e.g. a mass matrix that is not numerically positive definite.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double pivot_ratio)
      : std::runtime_error(what), pivot_ratio_(pivot_ratio) {}
  double pivot_ratio() const noexcept { return pivot_ratio_; }

 private:
  double pivot_ratio_;
};

}  // namespace fraclap
