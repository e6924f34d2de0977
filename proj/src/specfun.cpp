#include "fraclap/specfun.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <utility>

namespace fraclap::specfun {

namespace {

// sin(pi x) with the argument reduced to [-1/2, 1/2] first, so that values
// near integers keep their relative accuracy.
double sin_pi(double x) {
  const double n = std::nearbyint(x);
  const double r = x - n;
  const double s = std::sin(std::numbers::pi * r);
  return std::fmod(std::fabs(n), 2.0) == 0.0 ? s : -s;
}

double lgamma_positive(double x) {
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Hyp2F1Job normalised(Hyp2F1Job job) {
  if (is_nonpositive_integer(job.a) && !is_nonpositive_integer(job.b)) std::swap(job.a, job.b);
  if (is_nonpositive_integer(job.a) && is_nonpositive_integer(job.b) && job.a > job.b)
    std::swap(job.a, job.b);
  return job;
}

Hyp2F1Result polynomial(const Hyp2F1Job& job) {
  const unsigned n = job.degree();
  double term = 1.0;
  double sum = 1.0;
  for (unsigned k = 0; k < n; ++k) {
    term *= (job.a + k) * (job.b + k) / ((job.c + k) * (k + 1.0)) * job.z;
    sum += term;
  }
  return {sum, static_cast<std::int64_t>(n) + 1, Hyp2F1Method::Polynomial, false};
}

Hyp2F1Result series(double a, double b, double c, double z) {
  double term = 1.0;
  double sum = 1.0;
  for (std::int64_t k = 0; k < kSeriesTermCap; ++k) {
    const double ratio = (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
    term *= ratio;
    sum += term;
    if (term == 0.0) return {sum, k + 2, Hyp2F1Method::Series, false};
    const double next = std::fabs((a + k + 1) * (b + k + 1) / ((c + k + 1) * (k + 2.0)) * z);
    // Once the terms shrink geometrically the tail is bounded by term * next / (1 - next).
    if (next < 1.0 && std::fabs(term) * next / (1.0 - next) <= kSeriesTolerance * std::fabs(sum))
      return {sum, k + 2, Hyp2F1Method::Series, false};
  }
  throw ConvergenceError("hyp2f1: series did not converge within " + std::to_string(kSeriesTermCap) +
                         " terms (a=" + fmt(a) + ", b=" + fmt(b) + ", c=" + fmt(c) + ", z=" + fmt(z) + ")");
}

Hyp2F1Result euler(const Hyp2F1Job& job) {
  Hyp2F1Job inner{job.c - job.a, job.c - job.b, job.c, job.z, Hyp2F1Method::Auto};
  inner = normalised(inner);
  Hyp2F1Result r = inner.truncating() ? polynomial(inner) : series(inner.a, inner.b, inner.c, inner.z);
  r.value *= std::pow(1.0 - job.z, job.c - job.a - job.b);
  r.method_used = Hyp2F1Method::EulerTransform;
  return r;
}

}  // namespace

bool is_nonpositive_integer(double x) {
  const double n = std::nearbyint(x);
  return n <= 0.0 && std::fabs(x - n) < kPoleTolerance;
}

SignedLogValue log_gamma_signed(double x) {
  if (!std::isfinite(x)) throw DomainError("log_gamma_signed: non-finite argument");
  if (is_nonpositive_integer(x)) throw PoleError("log_gamma_signed: pole of Gamma at x = " + fmt(x));
  if (x > 0) return SignedLogValue::from_log(lgamma_positive(x), 1);
  // Gamma(x) = pi / (sin(pi x) Gamma(1 - x))
  const double s = sin_pi(x);
  const double log_abs = std::log(std::numbers::pi) - std::log(std::fabs(s)) - lgamma_positive(1.0 - x);
  return SignedLogValue::from_log(log_abs, s > 0 ? 1 : -1);
}

double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  const SignedLogValue g = log_gamma_signed(x);
  return g.sign() * std::exp(-g.log_abs());
}

SignedLogValue beta_signed(double a, double b) {
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b))
    throw PoleError("beta_signed: pole in an argument (a=" + fmt(a) + ", b=" + fmt(b) + ")");
  if (is_nonpositive_integer(a + b)) return SignedLogValue::zero();
  return log_gamma_signed(a) * log_gamma_signed(b) / log_gamma_signed(a + b);
}

double pochhammer(double a, unsigned k) { return pochhammer_t<double>(a, k); }

bool Hyp2F1Job::truncating() const { return is_nonpositive_integer(b) || is_nonpositive_integer(a); }

unsigned Hyp2F1Job::degree() const {
  const Hyp2F1Job n = normalised(*this);
  if (!is_nonpositive_integer(n.b)) throw DomainError("hyp2f1: job is not truncating");
  return static_cast<unsigned>(-std::nearbyint(n.b));
}

Hyp2F1Result hyp2f1_eval(const Hyp2F1Job& raw) {
  const Hyp2F1Job job = normalised(raw);
  if (!std::isfinite(job.a) || !std::isfinite(job.b) || !std::isfinite(job.c) || !std::isfinite(job.z))
    throw DomainError("hyp2f1: non-finite parameter");
  if (is_nonpositive_integer(job.c)) {
    // c = -m is admissible only when the series stops before (c)_k vanishes.
    if (!(job.truncating() && job.degree() <= static_cast<unsigned>(-std::nearbyint(job.c))))
      throw PoleError("hyp2f1: c is a non-positive integer (c=" + fmt(job.c) + ")");
  }
  const bool trunc = job.truncating();
  if (!trunc && !(job.z < 1.0)) throw DomainError("hyp2f1: requires z < 1, got z = " + fmt(job.z));

  switch (job.method) {
    case Hyp2F1Method::Polynomial:
      if (!trunc) throw DomainError("hyp2f1: polynomial method requested for a non-truncating job");
      return polynomial(job);
    case Hyp2F1Method::Series:
      if (!trunc && job.z <= -1.0) throw DomainError("hyp2f1: plain series diverges for z <= -1");
      return series(job.a, job.b, job.c, job.z);
    case Hyp2F1Method::EulerTransform:
      if (!(job.z < 1.0)) throw DomainError("hyp2f1: Euler transform requires z < 1");
      return euler(job);
    case Hyp2F1Method::Auto:
      break;
  }

  if (trunc) return polynomial(job);
  if (job.z <= -0.5) {
    // Pfaff: 2F1(a,b;c;z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1))
    Hyp2F1Result r = hyp2f1_eval({job.a, job.c - job.b, job.c, job.z / (job.z - 1.0)});
    r.value *= std::pow(1.0 - job.z, -job.a);
    r.pfaff = true;
    return r;
  }
  if (job.z > 0.75) {
    // Gauss-series terms behave like k^(a+b-c-1) z^k; the Euler form like k^(c-a-b-1) z^k.
    const bool transformed_truncates =
        is_nonpositive_integer(job.c - job.a) || is_nonpositive_integer(job.c - job.b);
    if (transformed_truncates || job.a + job.b > job.c) return euler(job);
  }
  return series(job.a, job.b, job.c, job.z);
}

}  // namespace fraclap::specfun
