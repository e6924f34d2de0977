#pragma once

#include <cmath>
#include <limits>

#include "fraclap/errors.hpp"

namespace fraclap {

/// A real number stored as sign * exp(log_abs).
///
/// Gamma and beta products over- or underflow long before their ratios do, so
/// constants are multiplied in log space and exponentiated once at the end.
/// A sign of 0 means the value is exactly zero and log_abs carries no meaning.
class SignedLogValue {
 public:
  constexpr SignedLogValue() = default;

  static SignedLogValue from_value(double x) {
    if (x == 0.0) return {};
    return {std::log(std::fabs(x)), x > 0 ? 1 : -1};
  }
  static constexpr SignedLogValue from_log(double log_abs, int sign) {
    if (sign == 0) return {};
    return {log_abs, sign > 0 ? 1 : -1};
  }
  static constexpr SignedLogValue zero() { return {}; }

  constexpr double log_abs() const { return log_abs_; }
  constexpr int sign() const { return sign_; }
  constexpr bool is_zero() const { return sign_ == 0; }

  double value() const { return sign_ == 0 ? 0.0 : sign_ * std::exp(log_abs_); }

  friend SignedLogValue operator*(SignedLogValue a, SignedLogValue b) {
    if (a.is_zero() || b.is_zero()) return {};
    return {a.log_abs_ + b.log_abs_, a.sign_ * b.sign_};
  }
  friend SignedLogValue operator/(SignedLogValue a, SignedLogValue b) {
    if (b.is_zero()) throw DomainError("SignedLogValue: division by zero");
    if (a.is_zero()) return {};
    return {a.log_abs_ - b.log_abs_, a.sign_ * b.sign_};
  }
  SignedLogValue operator-() const { return {log_abs_, -sign_}; }

  /// |v|^e with the sign dropped; zero stays zero for e > 0.
  SignedLogValue abs_pow(double e) const {
    if (is_zero()) {
      if (e > 0) return {};
      throw DomainError("SignedLogValue: non-positive power of zero");
    }
    return {log_abs_ * e, 1};
  }

 private:
  constexpr SignedLogValue(double log_abs, int sign) : log_abs_(log_abs), sign_(sign) {}

  double log_abs_ = 0.0;
  int sign_ = 0;
};

}  // namespace fraclap
