#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "fraclap/errors.hpp"

namespace fraclap {

/// Tolerances for the adaptive quadrature behind the oracle.
struct QuadratureSpec {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;

  void validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw DomainError("QuadratureSpec: tolerances must be positive");
    if (max_subdivisions < 16) throw DomainError("QuadratureSpec: max_subdivisions must be >= 16");
  }
};

/// Work counters accumulated over one or more integrations.
struct QuadStats {
  long subdivisions = 0;
  long evaluations = 0;

  QuadStats& operator+=(const QuadStats& o) {
    subdivisions += o.subdivisions;
    evaluations += o.evaluations;
    return *this;
  }
};

namespace detail {

// 15-point Kronrod nodes on [-1, 1] (non-negative half, descending), with the
// embedded 7-point Gauss rule on the odd entries.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel kronrod15(F& f, double a, double b, QuadStats& stats) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kron = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kKronrodNodes[i];
    const double pair = f(c - dx) + f(c + dx);
    kron += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  stats.evaluations += 15;
  return {a, b, kron * h, std::fabs((kron - gauss) * h)};
}

}  // namespace detail

/// Globally adaptive 7/15 Gauss-Kronrod quadrature of f over [a, b].
///
/// The panel with the largest error estimate is bisected until the summed
/// estimate is below max(abs_tol, rel_tol * |integral|). Throws
/// ConvergenceError once max_subdivisions bisections have been spent.
template <class F>
double integrate(F&& f, double a, double b, const QuadratureSpec& spec, QuadStats& stats) {
  if (a == b) return 0.0;
  std::priority_queue<detail::Panel> heap;
  const detail::Panel first = detail::kronrod15(f, a, b, stats);
  double value = first.value;
  double error = first.error;
  heap.push(first);
  int splits = 0;
  while (error > std::max(spec.abs_tol, spec.rel_tol * std::fabs(value))) {
    if (splits >= spec.max_subdivisions)
      throw ConvergenceError("quadrature: subdivision cap " + std::to_string(spec.max_subdivisions) +
                             " reached, error estimate " + std::to_string(error));
    const detail::Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) throw ConvergenceError("quadrature: panel cannot be bisected further");
    const detail::Panel left = detail::kronrod15(f, worst.a, mid, stats);
    const detail::Panel right = detail::kronrod15(f, mid, worst.b, stats);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++splits;
    ++stats.subdivisions;
  }
  // Re-sum to shed the drift of the running update.
  value = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    heap.pop();
  }
  return value;
}

template <class F>
double integrate(F&& f, double a, double b, const QuadratureSpec& spec) {
  QuadStats stats;
  return integrate(f, a, b, spec, stats);
}

/// Integral over [a, b] of an integrand with an integrable algebraic
/// singularity at b, e.g. (b - t)^p with p > -1.
///
/// Substitutes t = b - (b - a) e^{-s}, s in [0, inf), so nodes cluster
/// exponentially at b. `g(t, w)` receives w = b - t computed without
/// cancellation, which the caller should use for the singular factor.
template <class G>
double integrate_to_singular_end(G&& g, double a, double b, const QuadratureSpec& spec, QuadStats& stats) {
  if (a == b) return 0.0;
  const double width = b - a;
  auto mapped = [&](double s) {
    const double w = width * std::exp(-s);
    return g(b - w, w) * w;
  };
  constexpr double kMaxS = 700.0;
  QuadratureSpec panel_spec = spec;
  panel_spec.abs_tol = spec.abs_tol / 16.0;
  double total = 0.0;
  double lo = 0.0;
  double hi = 1.0;
  while (true) {
    const double part = integrate(mapped, lo, hi, panel_spec, stats);
    total += part;
    if (hi >= 4.0 && std::fabs(part) <= 1e-3 * std::max(spec.abs_tol, spec.rel_tol * std::fabs(total))) break;
    if (hi >= kMaxS)
      throw ConvergenceError("quadrature: endpoint singularity too strong for the exponential map");
    lo = hi;
    hi = std::min(2.0 * hi, kMaxS);
  }
  return total;
}

}  // namespace fraclap
