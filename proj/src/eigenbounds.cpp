#include "fraclap/eigenbounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "fraclap/closed_form.hpp"
#include "fraclap/errors.hpp"
#include "fraclap/specfun.hpp"

namespace fraclap::bounds {

namespace {

using Quad = boost::multiprecision::cpp_bin_float_quad;
using specfun::log_gamma_signed;

void check(int d, double alpha) { PowerProfile{d, alpha, 0.0, Parity::Symmetric}.validate(); }

void check_index(int i, int j) {
  if (i < 0 || j < 0) throw DomainError("basis indices must be nonnegative");
}

void check_size(int n) {
  if (n < 1 || n > kMaxRitzSize)
    throw DomainError("basis size must lie in [1, " + std::to_string(kMaxRitzSize) + "], got " + std::to_string(n));
}

// Every entry is kappa * (rational function of alpha and d). The scalar
// factors are pulled out so the ill-conditioned part can be formed in quad
// precision from short Pochhammer products.
//
// shift = 0 is the radial basis; shift = 1 the antisymmetric one, whose
// integrals reduce via x_d^2 -> |x|^2 / d to moments with one extra |x|^2.
struct Scaling {
  double kappa_stiffness;
  double kappa_mass;
};

int shift_of(Basis b) { return b == Basis::Antisymmetric ? 1 : 0; }

Scaling scaling(int d, double alpha, Basis basis) {
  const Parity parity = basis == Basis::Antisymmetric ? Parity::Antisymmetric : Parity::Symmetric;
  const double c0 = phi_constant({d, alpha, alpha / 2.0, parity}).value.value();
  const int s = 2 * shift_of(basis);
  const double norm = basis == Basis::Antisymmetric ? 1.0 / d : 1.0;
  return {-c0 * norm * moment_integral(d, s, alpha / 2.0), norm * moment_integral(d, s, alpha)};
}

// moment(d, 2*shift, t0 + m) / moment(d, 2*shift, t0) = (t0+1)_m / (h + t0 + 1)_m, h = d/2 + shift.
Quad moment_step(const Quad& h, const Quad& t0, int m) {
  Quad r = 1;
  for (int k = 0; k < m; ++k) r *= (t0 + 1 + k) / (h + t0 + 1 + k);
  return r;
}

// moment(d, 2*shift + 2k, t) / moment(d, 2*shift, t) = (h)_k / (h + t + 1)_k.
Quad moment_power_step(const Quad& h, const Quad& t, int k) {
  Quad r = 1;
  for (int q = 0; q < k; ++q) r *= (h + q) / (h + t + 1 + q);
  return r;
}

Quad mass_scaled(int d, const Quad& alpha, Basis basis, int i, int j) {
  const Quad h = Quad(d) / 2 + shift_of(basis);
  return moment_step(h, alpha, i + j);
}

Quad stiffness_scaled(int d, const Quad& alpha, Basis basis, int i, int j) {
  const Quad h = Quad(d) / 2 + shift_of(basis);
  const Quad half = alpha / 2;
  // C(j + alpha/2) / C(alpha/2) = (alpha/2 + 1)_j / j!
  Quad cj = 1;
  for (int k = 0; k < j; ++k) cj *= (half + 1 + k) / (k + 1);
  const std::vector<Quad> c = basis == Basis::Antisymmetric
                                  ? poly_v_coefficients<Quad>(d, alpha, static_cast<unsigned>(j))
                                  : poly_u_coefficients<Quad>(d, alpha, static_cast<unsigned>(j));
  const Quad ti = half + i;
  Quad sum = 0;
  for (int k = 0; k <= j; ++k) sum += c[k] * moment_power_step(h, ti, k);
  return cj * moment_step(h, half, i) * sum;
}

}  // namespace

double moment_integral(int d, double s, double t) {
  if (d < 1) throw DomainError("dimension must be >= 1");
  if (!(s > -d)) throw DomainError("moment exponent s must exceed -d");
  if (!(t > -1.0)) throw DomainError("moment exponent t must exceed -1");
  const double a = (s + d) / 2.0;
  const double lg = d / 2.0 * std::log(std::numbers::pi) + log_gamma_signed(a).log_abs() +
                    log_gamma_signed(t + 1.0).log_abs() - log_gamma_signed(d / 2.0).log_abs() -
                    log_gamma_signed(a + t + 1.0).log_abs();
  return std::exp(lg);
}

double mu_lower(int d, double alpha) {
  check(d, alpha);
  const double lg = alpha * std::numbers::ln2 + log_gamma_signed(alpha / 2.0 + 1.0).log_abs() +
                    log_gamma_signed((alpha + d) / 2.0).log_abs() - log_gamma_signed(d / 2.0).log_abs();
  return std::exp(lg) * (alpha + 2.0) * (alpha + d) * (6.0 - alpha) / (12.0 * d + (16.0 - 2.0 * d) * alpha);
}

double lambda_star_lower(int d, double alpha) { return mu_lower(d + 2, alpha); }

double eta_lemma(int d, double alpha) {
  check(d, alpha);
  return (6.0 * d - 4.0 + (4.0 - d) * alpha - alpha * alpha) / ((alpha + 2.0) * (alpha + 2.0));
}

PsiProfile lemma_profile(int d, double alpha) { return {d, alpha, eta_lemma(d, alpha)}; }

double fitzsimmons_ratio(const PsiProfile& profile, double r2) {
  check(profile.d, profile.alpha);
  if (!std::isfinite(profile.eta)) throw DomainError("eta must be finite");
  if (!(r2 >= 0.0 && r2 < 1.0)) throw DomainError("r2 must lie in [0, 1)");
  const double w = 1.0 - r2;
  const double psi = std::pow(w, profile.alpha / 2.0) * (1.0 + profile.eta * w);
  if (!(psi > 0.0)) throw DomainError("psi is not positive at r2 = " + std::to_string(r2));
  const double lap = poly_u(profile.d, profile.alpha, 0)(r2) + profile.eta * poly_u(profile.d, profile.alpha, 1)(r2);
  return -lap / psi;
}

double stiffness_entry(int d, double alpha, int i, int j) {
  check(d, alpha);
  check_index(i, j);
  const Scaling k = scaling(d, alpha, Basis::Radial);
  return k.kappa_stiffness * static_cast<double>(stiffness_scaled(d, Quad(alpha), Basis::Radial, i, j));
}

double mass_entry(int d, double alpha, int i, int j) {
  check(d, alpha);
  check_index(i, j);
  return moment_integral(d, 0.0, i + j + alpha);
}

RitzSystem assemble_ritz(int d, double alpha, int n, Basis basis) {
  check(d, alpha);
  check_size(n);
  const Scaling k = scaling(d, alpha, basis);
  const Quad a(alpha);
  RitzSystem sys{d, alpha, n, basis, linalg::Matrix<double>(n), linalg::Matrix<double>(n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      sys.stiffness(i, j) = k.kappa_stiffness * static_cast<double>(stiffness_scaled(d, a, basis, i, j));
      sys.mass(i, j) = k.kappa_mass * static_cast<double>(mass_scaled(d, a, basis, i, j));
    }
  return sys;
}

RitzResult ritz_solve(int d, double alpha, int n, Basis basis) {
  check(d, alpha);
  check_size(n);
  const Quad a(alpha);
  linalg::Matrix<Quad> ks(n), ms(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ks(i, j) = stiffness_scaled(d, a, basis, i, j);
      ms(i, j) = mass_scaled(d, a, basis, i, j);
    }
  // The form is symmetric; use the average of both computed triangles.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Quad m = (ks(i, j) + ks(j, i)) / 2;
      ks(i, j) = m;
      ks(j, i) = m;
    }
  const linalg::Cholesky<Quad> chol = linalg::cholesky(ms);
  linalg::JacobiInfo info;
  const std::vector<Quad> ev =
      linalg::jacobi_eigenvalues(linalg::congruence_by_inverse(ks, chol.lower), 1e-13, &info);
  const Quad lo = *std::min_element(ev.begin(), ev.end());
  if (!(lo > 0)) throw SolverError("stiffness matrix is not positive definite", chol.pivot_ratio);
  const Scaling k = scaling(d, alpha, basis);
  return {k.kappa_stiffness / k.kappa_mass * static_cast<double>(lo), chol.pivot_ratio, info.sweeps};
}

double two_term_quotient(int d, double alpha, double eta) {
  const double k00 = stiffness_entry(d, alpha, 0, 0);
  const double k01 = stiffness_entry(d, alpha, 0, 1);
  const double k11 = stiffness_entry(d, alpha, 1, 1);
  const double m00 = mass_entry(d, alpha, 0, 0);
  const double m01 = mass_entry(d, alpha, 0, 1);
  const double m11 = mass_entry(d, alpha, 1, 1);
  return (k00 + 2.0 * eta * k01 + eta * eta * k11) / (m00 + 2.0 * eta * m01 + eta * eta * m11);
}

double two_term_eta_min(int d, double alpha) {
  check(d, alpha);
  const double a = alpha;
  const double dd = d;
  const double w = std::pow(dd, 4) + 4 * a * std::pow(dd, 3) + 8 * std::pow(dd, 3) + 8 * a * a * dd * dd +
                   32 * a * dd * dd + 28 * dd * dd + 8 * std::pow(a, 3) * dd + 48 * a * a * dd + 88 * a * dd +
                   48 * dd + 4 * std::pow(a, 4) + 24 * std::pow(a, 3) + 52 * a * a + 48 * a + 16;
  if (w < 0.0) throw DomainError("negative discriminant in the two-term minimiser");
  return (std::sqrt(w) + dd * dd + 2 * dd - 2 * a * a - 6 * a - 4) / (4 * a * a + 12 * a + 8);
}

double two_term_upper(int d, double alpha) { return two_term_quotient(d, alpha, two_term_eta_min(d, alpha)); }

RitzResult lambda_star_upper(int d, double alpha, int n) {
  check(d, alpha);
  return ritz_solve(d + 2, alpha, n, Basis::Radial);
}

RitzResult lambda_star_upper_antisymmetric(int d, double alpha, int n) {
  return ritz_solve(d, alpha, n, Basis::Antisymmetric);
}

IdentityCheck utov_identity_check(int d, double t) {
  // Polar coordinates give |S^{d+1}| / (2 pi) = |S^{d-1}| / d, hence 1/(2 pi) rather than 1/pi.
  return {moment_integral(d, 2.0, t) / d, moment_integral(d + 2, 0.0, t) / (2.0 * std::numbers::pi)};
}

BoundsReport compute_bounds(int d, double alpha, int n) {
  BoundsReport r;
  r.d = d;
  r.alpha = alpha;
  r.ritz_n = n;
  r.lower = mu_lower(d, alpha);
  r.eta_min = two_term_eta_min(d, alpha);
  r.upper_two_term = two_term_quotient(d, alpha, r.eta_min);
  const RitzResult ritz = ritz_solve(d, alpha, n);
  r.upper_ritz = ritz.lambda;
  r.pivot_ratio = ritz.pivot_ratio;
  r.lower_star = lambda_star_lower(d, alpha);
  r.upper_star_two_term = two_term_upper(d + 2, alpha);
  const RitzResult star = lambda_star_upper(d, alpha, n);
  r.upper_star_ritz = star.lambda;
  r.pivot_ratio_star = star.pivot_ratio;
  return r;
}

std::string TableCell::label() const {
  std::string s = "lambda_1 d=" + std::to_string(column);
  if (column >= 3) s += " / lambda_* d=" + std::to_string(column - 2);
  return s;
}

TableCell table_cell(double alpha, int column, int n) {
  if (column < 1 || column > kTableColumns) throw DomainError("table column must lie in [1, 5]");
  TableCell c;
  c.alpha = alpha;
  c.column = column;
  c.lower = mu_lower(column, alpha);
  c.two_term = two_term_upper(column, alpha);
  const RitzResult r = ritz_solve(column, alpha, n);
  c.ritz = r.lambda;
  c.pivot_ratio = r.pivot_ratio;
  return c;
}

}  // namespace fraclap::bounds
