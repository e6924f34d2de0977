#include "fraclap/oracle.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "fraclap/errors.hpp"
#include "fraclap/specfun.hpp"

namespace fraclap::oracle {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 2.0)) throw DomainError("oracle: alpha must lie in (0, 2)");
}

void check_standoff(double r) {
  if (!(r <= kInteriorStandoff))
    throw DomainError("oracle: requires |x| <= 0.9, got |x| = " + std::to_string(r));
}

// int_0^{tc} D(t) t^{-1-alpha} dt for an even, smooth second difference D.
//
// Close to t = 0 the second difference cancels catastrophically, so D is
// sampled at tc * {1, 3/4, 1/2, 1/4} only, fitted as
// t^2 (c1 + c2 t^2 + c3 t^4 + c4 t^6) and integrated exactly.
template <class D>
double small_t_part(D&& diff, double tc, double alpha, QuadStats& stats) {
  constexpr std::array<double, 4> frac = {1.0, 0.75, 0.5, 0.25};
  std::array<std::array<double, 5>, 4> m{};
  for (int i = 0; i < 4; ++i) {
    const double t = tc * frac[i];
    const double u = frac[i] * frac[i];
    double pw = 1.0;
    for (int j = 0; j < 4; ++j) {
      m[i][j] = pw;
      pw *= u;
    }
    m[i][4] = diff(t) / (t * t);
  }
  stats.evaluations += 4;
  // Gaussian elimination with partial pivoting on the 4x4 Vandermonde system in u = (t/tc)^2.
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
    std::swap(m[col], m[piv]);
    for (int r = col + 1; r < 4; ++r) {
      const double f = m[r][col] / m[col][col];
      for (int c = col; c < 5; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::array<double, 4> coef{};
  for (int r = 3; r >= 0; --r) {
    double s = m[r][4];
    for (int c = r + 1; c < 4; ++c) s -= m[r][c] * coef[c];
    coef[r] = s / m[r][r];
  }
  // coef[k] multiplies (t/tc)^{2k} t^2; integrate t^{2k+1-alpha} / tc^{2k}.
  double total = 0.0;
  for (int k = 0; k < 4; ++k) {
    const double e = 2.0 * k + 2.0 - alpha;
    total += coef[k] * std::pow(tc, 2.0 - alpha) / e;
  }
  return total;
}

double sphere_area(int dim_minus_one) {
  // |S^{n}| = 2 pi^{(n+1)/2} / Gamma((n+1)/2)
  const double h = (dim_minus_one + 1) / 2.0;
  return 2.0 * std::exp(h * std::log(std::numbers::pi) - specfun::log_gamma_signed(h).log_abs());
}

double norm_squared(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

}  // namespace

EdgeFunction power_profile_1d(double p, Parity parity) {
  if (parity == Parity::Symmetric) {
    return [p](double, double lo, double hi) { return (lo > 0.0 && hi > 0.0) ? std::pow(lo * hi, p) : 0.0; };
  }
  return [p](double y, double lo, double hi) { return (lo > 0.0 && hi > 0.0) ? y * std::pow(lo * hi, p) : 0.0; };
}

Estimate pv_1d(double alpha, const EdgeFunction& f, double x, const QuadratureSpec& spec) {
  check_alpha(alpha);
  spec.validate();
  check_standoff(std::fabs(x));
  Estimate est;
  QuadStats& st = est.stats;

  const double right = 1.0 - x;  // t at which x + t reaches +1
  const double left = 1.0 + x;   // t at which x - t reaches -1
  const bool right_is_near = right <= left;
  const double near = right_is_near ? right : left;
  const double far = right_is_near ? left : right;
  const double fx = f(x, left, right);

  auto plus = [&](double t, double hi) { return f(x + t, left + t, hi); };
  auto minus = [&](double t, double lo) { return f(x - t, lo, right + t); };
  // Second difference with the near-boundary distance w = near - t passed exactly.
  auto diff = [&](double t, double w) {
    const double fp = right_is_near ? plus(t, w) : plus(t, right - t);
    const double fm = right_is_near ? minus(t, left - t) : minus(t, w);
    return fp + fm - 2.0 * fx;
  };

  const double tc = 0.05 * near;
  double total = small_t_part([&](double t) { return diff(t, near - t); }, tc, alpha, st);

  total += integrate_to_singular_end(
      [&](double t, double w) { return diff(t, w) / std::pow(t, 1.0 + alpha); }, tc, near, spec, st);

  if (far > near) {
    total += integrate_to_singular_end(
        [&](double t, double w) {
          const double v = right_is_near ? minus(t, w) : plus(t, w);
          return v / std::pow(t, 1.0 + alpha);
        },
        near, far, spec, st);
  }

  // -2 f(x) over t >= near, where both shifted values have left the support.
  total -= 2.0 * fx * std::pow(near, -alpha) / alpha;

  est.value = a_const(1, alpha).value() * total;
  return est;
}

Estimate pv_radial(int d, double alpha, double p, std::span<const double> x, const QuadratureSpec& spec) {
  if (d < 2) throw DomainError("pv_radial: requires d >= 2");
  PowerProfile{d, alpha, p, Parity::Symmetric}.validate();
  if (static_cast<int>(x.size()) != d) throw DomainError("pv_radial: point dimension mismatch");
  spec.validate();
  const double s = norm_squared(x);
  const double r = std::sqrt(s);
  check_standoff(r);

  const double prefactor = a_const(d, alpha).value() / (2.0 * a_const(1, alpha).value()) * sphere_area(d - 2);
  Estimate est;
  // h = sin(theta) absorbs the (1 - h^2)^{(d-3)/2} weight; the integrand is even in h.
  auto integrand = [&](double theta) {
    const double h = std::sin(theta);
    const double c = std::cos(theta);
    const double T = 1.0 - s + s * h * h;
    const double inner = frac_lap_u_1d_factored(alpha, p, r * h / std::sqrt(T));
    return std::pow(T, p - alpha / 2.0) * inner * std::pow(c, d - 2);
  };
  const double integral = integrate(integrand, 0.0, std::numbers::pi / 2.0, spec, est.stats);
  est.value = prefactor * 2.0 * integral;
  return est;
}

Estimate pv_radial_v(int d, double alpha, double p, std::span<const double> x, const QuadratureSpec& spec) {
  if (d < 2) throw DomainError("pv_radial_v: requires d >= 2");
  PowerProfile{d, alpha, p, Parity::Antisymmetric}.validate();
  if (static_cast<int>(x.size()) != d) throw DomainError("pv_radial_v: point dimension mismatch");
  spec.validate();
  const double s = norm_squared(x);
  const double r = std::sqrt(s);
  check_standoff(r);
  if (r == 0.0 || x.back() == 0.0) return {};

  Estimate est = pv_radial(d, alpha, p, x, spec);
  const double radial_term = x.back() * est.value;

  // Only the component of h_d along x/|x| survives the sphere integral:
  //   int G(<h,x>) h_d dh = (x_d / |x|) |S^{d-2}| int_{-1}^{1} G(|x| h) h (1-h^2)^{(d-3)/2} dh.
  const double prefactor =
      a_const(d, alpha).value() / (2.0 * a_const(1, alpha).value()) * sphere_area(d - 2) * x.back() / r;
  auto integrand = [&](double theta) {
    const double h = std::sin(theta);
    const double c = std::cos(theta);
    const double tau = r * h;
    const double T = 1.0 - s + tau * tau;
    const double sq = std::sqrt(T);
    const double y = tau / sq;
    const double g = std::pow(T, p - alpha / 2.0) *
                     (sq * frac_lap_v_1d_factored(alpha, p, y) - tau * frac_lap_u_1d_factored(alpha, p, y));
    return g * h * std::pow(c, d - 2);
  };
  QuadStats st;
  const double integral = integrate(integrand, 0.0, std::numbers::pi / 2.0, spec, st);
  est.stats += st;
  est.value = radial_term + prefactor * 2.0 * integral;
  return est;
}

Estimate pv_Im(int m, double p, double alpha, double x, const QuadratureSpec& spec) {
  if (m != 1 && m != 2) throw DomainError("pv_Im: m must be 1 or 2");
  check_alpha(alpha);
  if (!(p > -1.0)) throw DomainError("pv_Im: p must exceed -1");
  spec.validate();
  check_standoff(std::fabs(x));
  if (x == 0.0) return {};

  const double q = alpha - m - 2.0 * p;
  // Even part of the integrand: the odd part cancels between t and -t.
  auto numerator = [&](double t, double w) {
    const double bracket = std::pow(1.0 - t * x, q) + std::pow(1.0 + t * x, q) - 2.0;
    return bracket * std::pow(w * (2.0 - w), p);
  };
  Estimate est;
  const double tc = 0.05;
  double total = small_t_part([&](double t) { return numerator(t, 1.0 - t); }, tc, alpha, est.stats);
  total += integrate_to_singular_end(
      [&](double t, double w) { return numerator(t, w) / std::pow(t, 1.0 + alpha); }, tc, 1.0, spec, est.stats);
  est.value = total;
  return est;
}

Estimate frac_lap_oracle(const PowerProfile& profile, std::span<const double> x, const QuadratureSpec& spec) {
  profile.validate();
  if (profile.d == 1) {
    if (x.size() != 1) throw DomainError("frac_lap_oracle: point dimension mismatch");
    return pv_1d(profile.alpha, power_profile_1d(profile.p, profile.parity), x[0], spec);
  }
  return profile.parity == Parity::Symmetric ? pv_radial(profile.d, profile.alpha, profile.p, x, spec)
                                             : pv_radial_v(profile.d, profile.alpha, profile.p, x, spec);
}

}  // namespace fraclap::oracle
