#pragma once

#include <functional>
#include <span>

#include "fraclap/closed_form.hpp"
#include "fraclap/quadrature.hpp"

namespace fraclap::oracle {

/// A function supported on [-1, 1], evaluated as f(y, 1 + y, 1 - y).
///
/// The two distances to the endpoints are supplied separately and accurately,
/// so that factors like (1 - y^2)^p with p < 0 can be evaluated as
/// (lo * hi)^p right up to the boundary.
using EdgeFunction = std::function<double(double y, double lo, double hi)>;

/// (1 - y^2)_+^p, or y (1 - y^2)_+^p for the antisymmetric parity.
EdgeFunction power_profile_1d(double p, Parity parity);

struct Estimate {
  double value = 0.0;
  QuadStats stats;
};

/// Largest |x| at which the oracle is used.
inline constexpr double kInteriorStandoff = 0.9;

/// Fractional Laplacian in one dimension straight from the singular integral,
///   A_{1,-alpha} int_0^inf (f(x+t) + f(x-t) - 2 f(x)) t^{-1-alpha} dt,
/// where the symmetric pairing replaces the principal value.
Estimate pv_1d(double alpha, const EdgeFunction& f, double x, const QuadratureSpec& spec = {});

/// Fractional Laplacian of u_p in d >= 2 dimensions, reduced to a 1-d integral over
/// directions with the one-dimensional closed form inside the integrand.
Estimate pv_radial(int d, double alpha, double p, std::span<const double> x, const QuadratureSpec& spec = {});

/// Same for v_p = x_d u_p, via the directional decomposition of v_p.
Estimate pv_radial_v(int d, double alpha, double p, std::span<const double> x, const QuadratureSpec& spec = {});

/// p.v. int_{-1}^{1} ((1 - t x)^{alpha - m - 2p} - 1) |t|^{-1-alpha} (1 - t^2)^p dt, m in {1, 2}.
Estimate pv_Im(int m, double p, double alpha, double x, const QuadratureSpec& spec = {});

/// Oracle value of frac_lap for any profile and dimension (pv_1d for d = 1).
Estimate frac_lap_oracle(const PowerProfile& profile, std::span<const double> x, const QuadratureSpec& spec = {});

}  // namespace fraclap::oracle
