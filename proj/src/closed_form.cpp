#include "fraclap/closed_form.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "fraclap/errors.hpp"

namespace fraclap {

using specfun::beta_signed;
using specfun::hyp2f1;
using specfun::log_gamma_signed;

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 2.0)) throw DomainError("alpha must lie in (0, 2), got " + fmt(alpha));
}

void check_dim(int d) {
  if (d < 1) throw DomainError("dimension must be >= 1, got " + std::to_string(d));
}

double squared_norm_inside_ball(const PowerProfile& profile, std::span<const double> x) {
  if (static_cast<int>(x.size()) != profile.d)
    throw DomainError("point has " + std::to_string(x.size()) + " coordinates, dimension is " +
                      std::to_string(profile.d));
  double s = 0.0;
  for (double xi : x) s += xi * xi;
  if (!(s < 1.0)) throw DomainError("closed forms require |x| < 1, got |x|^2 = " + fmt(s));
  return s;
}

SignedLogValue pi_pow(double e) { return SignedLogValue::from_log(e * std::log(std::numbers::pi), 1); }

SignedLogValue symmetric_constant(int d, double alpha, double p) {
  return a_const(d, alpha) * beta_signed(-alpha / 2.0, p + 1.0) * pi_pow(d / 2.0) / log_gamma_signed(d / 2.0);
}

}  // namespace

void PowerProfile::validate() const {
  check_dim(d);
  check_alpha(alpha);
  if (!(p > -1.0)) throw DomainError("p must exceed -1, got " + fmt(p));
}

double PolyInS::operator()(double s) const {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * s + *it;
  return scale.value() * acc;
}

std::vector<double> PolyInS::expanded() const {
  const double k = scale.value();
  std::vector<double> out(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) out[i] = k * coeffs[i];
  return out;
}

SignedLogValue a_const(int d, double alpha) {
  check_dim(d);
  check_alpha(alpha);
  const SignedLogValue num = SignedLogValue::from_log(alpha * std::numbers::ln2, 1) *
                             log_gamma_signed((alpha + d) / 2.0);
  const SignedLogValue den = pi_pow(d / 2.0) * log_gamma_signed(-alpha / 2.0).abs_pow(1.0);
  return num / den;
}

PhiConstant phi_constant(const PowerProfile& profile) {
  profile.validate();
  const int d = profile.d;
  SignedLogValue c = symmetric_constant(d, profile.alpha, profile.p);
  if (profile.parity == Parity::Antisymmetric)
    c = c * SignedLogValue::from_value((profile.alpha + d) / static_cast<double>(d));
  return {c};
}

PhiConstant phi_constant_shifted(const PowerProfile& profile) {
  profile.validate();
  return {symmetric_constant(profile.d + 2, profile.alpha, profile.p)};
}

double phi_constant_simplified(int d, double alpha, double p) {
  check_dim(d);
  check_alpha(alpha);
  const double r = specfun::rgamma(p + 1.0 - alpha / 2.0);
  if (r == 0.0) return 0.0;
  const SignedLogValue mag = SignedLogValue::from_log(alpha * std::numbers::ln2, 1) *
                             log_gamma_signed((alpha + d) / 2.0) * log_gamma_signed(p + 1.0) /
                             log_gamma_signed(d / 2.0);
  return -mag.value() * r;
}

double profile_value(const PowerProfile& profile, std::span<const double> x) {
  if (static_cast<int>(x.size()) != profile.d) throw DomainError("point dimension mismatch");
  double s = 0.0;
  for (double xi : x) s += xi * xi;
  if (!(s < 1.0)) return 0.0;
  const double u = std::pow(1.0 - s, profile.p);
  return profile.parity == Parity::Symmetric ? u : x.back() * u;
}

double frac_lap_u(const PowerProfile& profile, std::span<const double> x) {
  if (profile.parity != Parity::Symmetric) throw DomainError("frac_lap_u expects a symmetric profile");
  const SignedLogValue c = phi_constant(profile).value;
  const double s = squared_norm_inside_ball(profile, x);
  if (c.is_zero()) return 0.0;
  const double a = (profile.alpha + profile.d) / 2.0;
  return c.value() * hyp2f1(a, profile.alpha / 2.0 - profile.p, profile.d / 2.0, s);
}

double frac_lap_v(const PowerProfile& profile, std::span<const double> x) {
  if (profile.parity != Parity::Antisymmetric) throw DomainError("frac_lap_v expects an antisymmetric profile");
  const SignedLogValue c = phi_constant(profile).value;
  const double s = squared_norm_inside_ball(profile, x);
  if (c.is_zero() || x.back() == 0.0) return 0.0;
  const double a = (profile.alpha + profile.d + 2) / 2.0;
  return x.back() * c.value() * hyp2f1(a, profile.alpha / 2.0 - profile.p, 1.0 + profile.d / 2.0, s);
}

double frac_lap(const PowerProfile& profile, std::span<const double> x) {
  return profile.parity == Parity::Symmetric ? frac_lap_u(profile, x) : frac_lap_v(profile, x);
}

double frac_lap_v_via_shift(const PowerProfile& profile, std::span<const double> x) {
  const SignedLogValue c = phi_constant_shifted(profile).value;
  const double s = squared_norm_inside_ball(profile, x);
  if (c.is_zero() || x.back() == 0.0) return 0.0;
  const int d2 = profile.d + 2;
  return x.back() * c.value() * hyp2f1((profile.alpha + d2) / 2.0, profile.alpha / 2.0 - profile.p, d2 / 2.0, s);
}

PolyInS poly_u(int d, double alpha, unsigned n) {
  const PowerProfile profile{d, alpha, n + alpha / 2.0, Parity::Symmetric};
  return {poly_u_coefficients<double>(d, alpha, n), phi_constant(profile).value};
}

PolyInS poly_v(int d, double alpha, unsigned n) {
  const PowerProfile profile{d, alpha, n + alpha / 2.0, Parity::Antisymmetric};
  return {poly_v_coefficients<double>(d, alpha, n), phi_constant(profile).value};
}

double lemma21_closed(int m, double p, double alpha, double x) {
  if (m != 1 && m != 2) throw DomainError("lemma21_closed: m must be 1 or 2");
  check_alpha(alpha);
  if (!(p > -1.0)) throw DomainError("lemma21_closed: p must exceed -1");
  if (!(std::fabs(x) < 1.0)) throw DomainError("lemma21_closed: x must lie in (-1, 1)");
  const SignedLogValue b = beta_signed(-alpha / 2.0, p + 1.0);
  if (b.is_zero()) return 0.0;
  const double f = hyp2f1(-alpha / 2.0, p + m - 0.5 - alpha / 2.0, 0.5, x * x);
  return b.value() * (f - 1.0);
}

double frac_lap_u_1d_factored(double alpha, double p, double x) {
  PowerProfile{1, alpha, p, Parity::Symmetric}.validate();
  if (!(std::fabs(x) < 1.0)) throw DomainError("frac_lap_u_1d_factored: |x| must be < 1");
  const SignedLogValue c = a_const(1, alpha) * beta_signed(-alpha / 2.0, p + 1.0);
  if (c.is_zero()) return 0.0;
  const double z = x * x;
  return c.value() * hyp2f1(-alpha / 2.0, p + 0.5 - alpha / 2.0, 0.5, z) * std::pow(1.0 - z, p - alpha);
}

double frac_lap_v_1d_factored(double alpha, double p, double x) {
  PowerProfile{1, alpha, p, Parity::Antisymmetric}.validate();
  if (!(std::fabs(x) < 1.0)) throw DomainError("frac_lap_v_1d_factored: |x| must be < 1");
  const SignedLogValue c = a_const(1, alpha) * beta_signed(-alpha / 2.0, p + 1.0);
  if (c.is_zero() || x == 0.0) return 0.0;
  const double z = x * x;
  return c.value() * (alpha + 1.0) * hyp2f1(-alpha / 2.0, p + 1.5 - alpha / 2.0, 1.5, z) * x *
         std::pow(1.0 - z, p - alpha);
}

}  // namespace fraclap
