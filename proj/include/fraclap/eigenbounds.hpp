#pragma once

#include <array>
#include <string>

#include "fraclap/dense.hpp"

namespace fraclap::bounds {

/// int_B |x|^s (1 - |x|^2)^t dx over the unit ball of R^d. Requires s > -d, t > -1.
double moment_integral(int d, double s, double t);

/// Closed-form lower bound for the first Dirichlet eigenvalue on the unit ball.
double mu_lower(int d, double alpha);

/// Lower bound for the smallest antisymmetric eigenvalue: mu_lower(d + 2, alpha).
double lambda_star_lower(int d, double alpha);

/// (6d - 4 + (4 - d) alpha - alpha^2) / (alpha + 2)^2.
double eta_lemma(int d, double alpha);

/// psi = (1-|x|^2)_+^{alpha/2} + eta (1-|x|^2)_+^{1+alpha/2}.
struct PsiProfile {
  int d = 1;
  double alpha = 1.0;
  double eta = 0.0;
};

/// Profile with eta = eta_lemma(d, alpha).
PsiProfile lemma_profile(int d, double alpha);

/// -frac_lap(psi) / psi evaluated at |x|^2 = r2, r2 in [0, 1).
/// Throws DomainError if psi(r2) <= 0.
double fitzsimmons_ratio(const PsiProfile& profile, double r2);

/// Energy form E(u_i, u_j) = -int_B u_i frac_lap(u_j), u_i = (1-|x|^2)_+^{i+alpha/2}.
double stiffness_entry(int d, double alpha, int i, int j);

/// int_B u_i u_j = moment_integral(d, 0, i + j + alpha).
double mass_entry(int d, double alpha, int i, int j);

enum class Basis {
  Radial,         ///< u_{j+alpha/2} in R^d
  Antisymmetric,  ///< v_{j+alpha/2} = x_d u_{j+alpha/2} in R^d
};

inline constexpr int kMaxRitzSize = 16;

struct RitzSystem {
  int d = 1;
  double alpha = 1.0;
  int n = 1;
  Basis basis = Basis::Radial;
  linalg::Matrix<double> stiffness;
  linalg::Matrix<double> mass;
};

/// Stiffness and mass matrices of the first n basis functions (1 <= n <= 16).
RitzSystem assemble_ritz(int d, double alpha, int n, Basis basis = Basis::Radial);

struct RitzResult {
  double lambda = 0.0;
  double pivot_ratio = 0.0;  ///< min/max diagonal of the Cholesky factor of the (scaled) mass matrix
  int sweeps = 0;
};

/// Smallest generalized eigenvalue of stiffness v = lambda mass v.
/// Assembly and solve run in quad precision. Throws SolverError if the mass
/// matrix is not numerically positive definite.
RitzResult ritz_solve(int d, double alpha, int n, Basis basis = Basis::Radial);

inline double ritz_upper(int d, double alpha, int n) { return ritz_solve(d, alpha, n).lambda; }

/// Rayleigh quotient of u_{alpha/2} + eta u_{1+alpha/2}.
double two_term_quotient(int d, double alpha, double eta);

/// Closed-form minimiser of two_term_quotient in eta. Throws DomainError if the discriminant is negative.
double two_term_eta_min(int d, double alpha);

/// two_term_quotient at two_term_eta_min.
double two_term_upper(int d, double alpha);

/// Ritz bound for the antisymmetric eigenvalue through the dimension shift: ritz_upper(d + 2, alpha, n).
RitzResult lambda_star_upper(int d, double alpha, int n);

/// Same bound assembled directly over the antisymmetric basis in R^d.
RitzResult lambda_star_upper_antisymmetric(int d, double alpha, int n);

struct IdentityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// int_{B^d} x_d^2 (1-|x|^2)^t against (1/(2 pi)) int_{B^{d+2}} (1-|x|^2)^t.
IdentityCheck utov_identity_check(int d, double t);

struct BoundsReport {
  int d = 1;
  double alpha = 1.0;
  double lower = 0.0;
  double upper_two_term = 0.0;
  double upper_ritz = 0.0;
  int ritz_n = 13;
  double lower_star = 0.0;
  double upper_star_two_term = 0.0;
  double upper_star_ritz = 0.0;
  double eta_min = 0.0;
  double pivot_ratio = 0.0;
  double pivot_ratio_star = 0.0;
};

BoundsReport compute_bounds(int d, double alpha, int n = 13);

/// Alpha rows of the published bounds table.
inline constexpr std::array<double, 7> kTableAlphas = {0.1, 0.2, 0.5, 1.0, 1.5, 1.8, 1.9};
inline constexpr int kTableColumns = 5;

/// Column k of the table holds lambda_1 at d = k, which is also lambda_* at d = k - 2.
struct TableCell {
  double alpha = 0.0;
  int column = 1;
  double lower = 0.0;
  double ritz = 0.0;
  double two_term = 0.0;
  double pivot_ratio = 0.0;
  std::string label() const;
};

TableCell table_cell(double alpha, int column, int n = 13);

}  // namespace fraclap::bounds
