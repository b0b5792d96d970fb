#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include "loggp/errors.hpp"

namespace loggp {

/// Physical parameters: nonlinearity strength lambda > 0 and frame velocity c.
struct Params {
  double lambda = 1.0;
  double c = 0.0;

  Params() = default;
  Params(double lambda, double c) : lambda(lambda), c(c) {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
      throw DomainError("lambda must be positive and finite");
    if (!std::isfinite(c)) throw DomainError("c must be finite");
  }

  /// True iff non-constant traveling waves exist at this velocity.
  bool admissible_velocity() const { return c * c < 2.0 * lambda; }
};

namespace mutation {
/// Fault-injection switch used by `verify --mutate fc-sign`. Never set in
/// normal operation.
inline bool flip_fc_sign = false;
}  // namespace mutation

/// F(y) = y ln y - y + 1, the antiderivative of the logarithm normalized so
/// that F(1) = 0. Extended continuously by F(0) = 1. Nonnegative, and bounded
/// above by (y - 1)^2.
inline double potential_F(double y) {
  if (y < 0.0 || std::isnan(y)) throw DomainError("potential_F: y must be >= 0");
  if (y < 1e-300) return 1.0;  // y*ln(y) underflows to the limit value
  double u = y - 1.0;
  if (std::abs(u) < 1e-2) {
    // series in u = y - 1: avoids the catastrophic cancellation of
    // y ln y - y + 1 that otherwise floors F near its double root
    return u * u *
           (0.5 + u * (-1.0 / 6.0 +
                       u * (1.0 / 12.0 + u * (-0.05 + u / 30.0))));
  }
  double r = y * std::log(y) - y + 1.0;
  return r > 0.0 ? r : 0.0;  // clip roundoff dust near y = 1
}

/// z * ln(|z|^2 + eps). At eps = 0 the vacuum value is the continuous
/// extension 0 (|z ln|z|^2| -> 0 as z -> 0).
inline std::complex<double> log_nonlinearity(std::complex<double> z,
                                             double eps = 0.0) {
  if (eps < 0.0) throw DomainError("log_nonlinearity: eps must be >= 0");
  double m2 = std::norm(z) + eps;
  if (m2 < 1e-300) return {0.0, 0.0};
  return z * std::log(m2);
}

/// f_c(y) = (c^2/4)(1/y^3 - y) + lambda * y * ln(y^2), for y > 0.
/// Vanishes at y = 1 for every (lambda, c); equals half of g_c'.
inline double f_c(double y, const Params& p) {
  if (!(y > 0.0)) throw DomainError("f_c: y must be > 0");
  double v = 0.25 * p.c * p.c * (1.0 / (y * y * y) - y) +
             p.lambda * y * std::log(y * y);
  return mutation::flip_fc_sign ? -v : v;
}

/// Derivative f_c'(y) = (c^2/4)(-3/y^4 - 1) + 2 lambda (ln y + 1).
inline double f_c_prime(double y, const Params& p) {
  if (!(y > 0.0)) throw DomainError("f_c_prime: y must be > 0");
  double y4 = y * y * y * y;
  return 0.25 * p.c * p.c * (-3.0 / y4 - 1.0) +
         2.0 * p.lambda * (std::log(y) + 1.0);
}

/// g_c(y) = -(c^2/4)(1-y^2)^2/y^2 + lambda F(y^2), for y > 0.
/// First integral of rho'' = f_c(rho): (rho')^2 = g_c(rho).
inline double g_c(double y, const Params& p) {
  if (!(y > 0.0)) throw DomainError("g_c: y must be > 0");
  double one_my2 = 1.0 - y * y;
  return -0.25 * p.c * p.c * one_my2 * one_my2 / (y * y) +
         p.lambda * potential_F(y * y);
}

/// h_c(y) = lambda F((1-y)^2) - (2 lambda + c^2)/2 * y^2, defined for y <= 1
/// (the value at y = 1 is the continuous limit lambda - (2 lambda + c^2)/2).
/// The modulus defect eta = 1 - |phi|^2 of a traveling wave satisfies
/// (eta')^2 / 2 = h_c(eta).
inline double h_c(double y, const Params& p) {
  if (y > 1.0) throw DomainError("h_c: y must be <= 1");
  double w = 1.0 - y;
  return p.lambda * potential_F(w * w) -
         0.5 * (2.0 * p.lambda + p.c * p.c) * y * y;
}

/// Interior roots of the traveling-wave auxiliary functions:
///   y0: zero of g_c in (0,1)   (minimum modulus of the wave)
///   y1: zero of f_c in (0,1)
///   y2: zero of f_c' in (y1,1)
/// Ordering 0 < y0 < y1 < y2 < 1.
struct CriticalPoints {
  double y0;
  double y1;
  double y2;
};

namespace detail {

/// Bracketing bisection on [a,b] with f(a)*f(b) < 0, absolute tolerance tol.
template <typename F>
double bisect(F&& f, double a, double b, double tol = 1e-12) {
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0))
    throw DomainError("bisect: endpoints do not bracket a sign change");
  while (b - a > tol) {
    double m = 0.5 * (a + b);
    double fm = f(m);
    if (fm == 0.0) return m;
    if ((fm > 0.0) == (fa > 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

/// Scan (lo,hi) with `samples` uniform points for the first sign change of f;
/// returns the bracketing pair through `a`,`b`. False if none found.
template <typename F>
bool scan_bracket(F&& f, double lo, double hi, int samples, double& a,
                  double& b) {
  double prev_x = lo;
  double prev_f = f(lo);
  for (int i = 1; i <= samples; ++i) {
    double x = lo + (hi - lo) * double(i) / double(samples);
    double fx = f(x);
    if (prev_f == 0.0 || (prev_f > 0.0) != (fx > 0.0)) {
      a = prev_x;
      b = x;
      return true;
    }
    prev_x = x;
    prev_f = fx;
  }
  return false;
}

}  // namespace detail

/// Locate y0, y1, y2 by scan + bisection. Requires 0 < c^2 < 2*lambda.
inline CriticalPoints find_critical_points(const Params& p) {
  if (p.c == 0.0)
    throw NoInteriorRoot("find_critical_points: g_0 > 0 on (0,1), no y0 at c = 0");
  if (!p.admissible_velocity()) throw VelocityAboveThreshold(p.c, p.lambda);

  const double lo = 1e-6;
  const double hi = 1.0 - 1e-6;
  const int scan_n = 10000;
  double a, b;

  if (!detail::scan_bracket([&](double y) { return g_c(y, p); }, lo, hi,
                            scan_n, a, b))
    throw NoInteriorRoot("find_critical_points: no sign change of g_c in (0,1)");
  double y0 = detail::bisect([&](double y) { return g_c(y, p); }, a, b);

  if (!detail::scan_bracket([&](double y) { return f_c(y, p); }, lo, hi,
                            scan_n, a, b))
    throw NoInteriorRoot("find_critical_points: no sign change of f_c in (0,1)");
  double y1 = detail::bisect([&](double y) { return f_c(y, p); }, a, b);

  if (!detail::scan_bracket([&](double y) { return f_c_prime(y, p); }, y1, hi,
                            scan_n, a, b))
    throw NoInteriorRoot("find_critical_points: no sign change of f_c' in (y1,1)");
  double y2 = detail::bisect([&](double y) { return f_c_prime(y, p); }, a, b);

  if (!(0.0 < y0 && y0 < y1 && y1 < y2 && y2 < 1.0))
    throw DomainError("find_critical_points: root ordering violated");
  return {y0, y1, y2};
}

}  // namespace loggp
