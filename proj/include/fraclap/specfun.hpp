#pragma once

#include <cstdint>

#include "fraclap/signed_log.hpp"

namespace fraclap::specfun {

/// Distance from an integer below which a non-positive argument is treated as a Gamma pole.
inline constexpr double kPoleTolerance = 1e-12;

bool is_nonpositive_integer(double x);

/// Gamma(x) as sign and log magnitude. Negative arguments go through the
/// reflection formula against Gamma(1 - x). Throws PoleError at 0, -1, -2, ...
SignedLogValue log_gamma_signed(double x);

/// 1 / Gamma(x); exactly 0 at the poles of Gamma.
double rgamma(double x);

/// Gamma(a) Gamma(b) / Gamma(a + b). Zero when a + b is a pole; PoleError when a or b is.
SignedLogValue beta_signed(double a, double b);

/// Rising factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.
double pochhammer(double a, unsigned k);

/// Same recurrence in any field type (used with the extended-precision scalar).
template <class T>
T pochhammer_t(const T& a, unsigned k) {
  T r = 1;
  for (unsigned i = 0; i < k; ++i) r *= a + T(i);
  return r;
}

enum class Hyp2F1Method {
  Auto,            ///< polynomial if truncating, otherwise pick a transform by z
  Series,          ///< plain Gauss series at z
  EulerTransform,  ///< (1-z)^(c-a-b) 2F1(c-a, c-b; c; z)
  Polynomial,      ///< exact finite sum; requires a truncating job
};

/// Parameters of one 2F1(a, b; c; z) evaluation.
///
/// The function is symmetric in (a, b); a job whose `a` is a non-positive
/// integer is normalised so that `b` carries the truncation.
struct Hyp2F1Job {
  double a = 0;
  double b = 0;
  double c = 1;
  double z = 0;
  Hyp2F1Method method = Hyp2F1Method::Auto;

  bool truncating() const;
  /// Polynomial degree -b of a truncating job.
  unsigned degree() const;
};

struct Hyp2F1Result {
  double value = 0;
  std::int64_t terms = 0;
  Hyp2F1Method method_used = Hyp2F1Method::Series;
  bool pfaff = false;
};

inline constexpr double kSeriesTolerance = 1e-13;
inline constexpr std::int64_t kSeriesTermCap = 1'000'000;

Hyp2F1Result hyp2f1_eval(const Hyp2F1Job& job);

inline double hyp2f1(const Hyp2F1Job& job) { return hyp2f1_eval(job).value; }
inline double hyp2f1(double a, double b, double c, double z) {
  return hyp2f1_eval({a, b, c, z}).value;
}

}  // namespace fraclap::specfun
