#pragma once

#include <span>
#include <vector>

#include "fraclap/signed_log.hpp"
#include "fraclap/specfun.hpp"

namespace fraclap {

enum class Parity {
  Symmetric,      ///< u_p(x) = (1 - |x|^2)_+^p
  Antisymmetric,  ///< v_p(x) = x_d (1 - |x|^2)_+^p
};

/// Identifies one power function on the unit ball of R^d.
struct PowerProfile {
  int d = 1;
  double alpha = 1.0;
  double p = 0.0;
  Parity parity = Parity::Symmetric;

  /// Throws DomainError unless d >= 1, 0 < alpha < 2 and p > -1.
  void validate() const;
};

/// Polynomial in s = |x|^2: scale * sum_k coeffs[k] s^k.
///
/// Coefficients are normalised so that coeffs[0] == 1; all of the constant
/// lives in `scale`.
struct PolyInS {
  std::vector<double> coeffs;
  SignedLogValue scale;

  double operator()(double s) const;
  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  /// scale * coeffs[k], i.e. the coefficients of the plain polynomial.
  std::vector<double> expanded() const;
};

struct PhiConstant {
  SignedLogValue value;
};

/// The normalising constant of the fractional Laplacian in R^d (always positive).
SignedLogValue a_const(int d, double alpha);

/// Constant in front of the hypergeometric factor.
///
/// Symmetric: A_{d,-alpha} B(-alpha/2, p+1) pi^{d/2} / Gamma(d/2).
/// Antisymmetric: the same times (alpha+d)/d, which is the dimension d+2
/// constant rewritten with A taken at dimension d.
PhiConstant phi_constant(const PowerProfile& profile);

/// Symmetric constant evaluated literally at dimension d + 2. Equal to
/// phi_constant() of the antisymmetric profile; kept for cross-checks.
PhiConstant phi_constant_shifted(const PowerProfile& profile);

/// -2^alpha Gamma((alpha+d)/2) Gamma(p+1) / (Gamma(p+1-alpha/2) Gamma(d/2)),
/// the simplified symmetric constant, built with 1/Gamma so that p = alpha/2 - 1 gives 0.
double phi_constant_simplified(int d, double alpha, double p);

/// The function itself: u_p or v_p, zero outside the open unit ball.
double profile_value(const PowerProfile& profile, std::span<const double> x);

/// Fractional Laplacian of u_p at |x| < 1 (profile parity must be Symmetric).
double frac_lap_u(const PowerProfile& profile, std::span<const double> x);

/// Fractional Laplacian of v_p at |x| < 1 (profile parity must be Antisymmetric).
double frac_lap_v(const PowerProfile& profile, std::span<const double> x);

/// Dispatches on profile.parity.
double frac_lap(const PowerProfile& profile, std::span<const double> x);

/// Fractional Laplacian of v_p as x_d times the symmetric formula at dimension d + 2,
/// constant included. Second route for the dimension-shift identity.
double frac_lap_v_via_shift(const PowerProfile& profile, std::span<const double> x);

/// Coefficients c_k = ((alpha+d)/2)_k (-n)_k / ((d/2)_k k!) of the truncated series.
template <class T>
std::vector<T> poly_u_coefficients(int d, const T& alpha, unsigned n) {
  std::vector<T> c(n + 1);
  const T a = (alpha + T(d)) / T(2);
  const T c0 = T(d) / T(2);
  c[0] = 1;
  for (unsigned k = 0; k < n; ++k) {
    c[k + 1] = c[k] * (a + T(k)) * (T(k) - T(n)) / ((c0 + T(k)) * T(k + 1));
  }
  return c;
}

/// Coefficients of the antisymmetric polynomial: ((alpha+d+2)/2)_k (-n)_k / ((1+d/2)_k k!).
template <class T>
std::vector<T> poly_v_coefficients(int d, const T& alpha, unsigned n) {
  std::vector<T> c(n + 1);
  const T a = (alpha + T(d) + T(2)) / T(2);
  const T c0 = T(1) + T(d) / T(2);
  c[0] = 1;
  for (unsigned k = 0; k < n; ++k) {
    c[k + 1] = c[k] * (a + T(k)) * (T(k) - T(n)) / ((c0 + T(k)) * T(k + 1));
  }
  return c;
}

/// Fractional Laplacian of u_{n+alpha/2} as a degree-n polynomial in |x|^2.
PolyInS poly_u(int d, double alpha, unsigned n);

/// q with fractional Laplacian of v_{n+alpha/2} = x_d q(|x|^2); degree n.
PolyInS poly_v(int d, double alpha, unsigned n);

/// Closed form of the 1-d principal value integral
///   p.v. int_{-1}^{1} ((1 - t x)^{alpha - m - 2p} - 1) |t|^{-1-alpha} (1 - t^2)^p dt,  m in {1, 2}:
/// B(-alpha/2, p+1) (2F1(-alpha/2, p + m - 1/2 - alpha/2; 1/2; x^2) - 1).
double lemma21_closed(int m, double p, double alpha, double x);

/// 1-d fractional Laplacian of u_p in the factored form
/// A_{1,-alpha} B(-alpha/2,p+1) 2F1(-alpha/2, p+1/2-alpha/2; 1/2; x^2) (1-x^2)^{p-alpha}.
double frac_lap_u_1d_factored(double alpha, double p, double x);

/// 1-d fractional Laplacian of v_p(x) = x (1-x^2)_+^p in the factored form
/// A_{1,-alpha} B(-alpha/2,p+1) (alpha+1) 2F1(-alpha/2, p+3/2-alpha/2; 3/2; x^2) x (1-x^2)^{p-alpha}.
double frac_lap_v_1d_factored(double alpha, double p, double x);

}  // namespace fraclap
