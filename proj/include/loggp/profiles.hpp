#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <vector>

#include "loggp/energy.hpp"
#include "loggp/grid.hpp"
#include "loggp/scalars.hpp"

namespace loggp {

/// Which equation the profile solves; pair-box construction needs to know
/// how to re-evaluate the profile at shifted points.
enum class ProfileKind { LogGP, CubicGP };

/// A computed solitary or traveling wave profile phi = rho * e^{i theta},
/// sampled on `grid`, together with its parameters and normalization.
struct WaveProfile {
  Grid grid;
  ProfileKind kind = ProfileKind::LogGP;
  std::vector<Complex> phi;
  std::vector<double> rho;    // |phi|
  std::vector<double> theta;  // phase, defined where rho > 0
  std::vector<double> eta;    // 1 - rho^2
  Params p;
  std::optional<double> y0;   // minimum modulus, c != 0 only
  double theta0 = 0.0;
  double x_shift = 0.0;
  double omega = 0.0;         // always 0 for valid profiles
  double winding = 0.0;       // theta(+end) - theta(-end)

  GridFunction as_grid_function() const { return GridFunction(grid, phi); }
};

namespace detail {

/// One RK4 step of an autonomous system y' = f(y).
template <int K, typename F>
void rk4_step(std::array<double, K>& y, double h, F&& f) {
  std::array<double, K> k1 = f(y), y2, k2, k3, k4;
  for (int i = 0; i < K; ++i) y2[i] = y[i] + 0.5 * h * k1[i];
  k2 = f(y2);
  for (int i = 0; i < K; ++i) y2[i] = y[i] + 0.5 * h * k2[i];
  k3 = f(y2);
  for (int i = 0; i < K; ++i) y2[i] = y[i] + h * k3[i];
  k4 = f(y2);
  for (int i = 0; i < K; ++i)
    y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

/// Integrate an autonomous system from x = 0 outward, emitting the state at
/// each of the sorted nonnegative targets. Steps have nominal size h_nom;
/// each inter-target gap is split into equal steps. `done(y)` may flag the
/// state as converged, after which `freeze(y)` pins it and integration stops.
template <int K, typename F, typename Done, typename Freeze>
std::vector<std::array<double, K>> integrate_to_targets(
    std::array<double, K> y, const std::vector<double>& targets, double h_nom,
    F&& f, Done&& done, Freeze&& freeze) {
  std::vector<std::array<double, K>> out;
  out.reserve(targets.size());
  double x = 0.0;
  bool frozen = false;
  for (double t : targets) {
    double gap = t - x;
    if (gap > 1e-14 && !frozen) {
      int steps = std::max(1, int(std::ceil(gap / h_nom)));
      double h = gap / double(steps);
      for (int s = 0; s < steps; ++s) {
        rk4_step<K>(y, h, f);
        if (done(y)) {
          freeze(y);
          frozen = true;
          break;
        }
      }
    }
    x = t;
    out.push_back(y);
  }
  return out;
}

/// Indices of `grid` sorted by |x|, plus the sorted distances themselves.
inline void abs_targets(const Grid& g, std::vector<std::size_t>& order,
                        std::vector<double>& dist) {
  order.resize(g.n);
  std::iota(order.begin(), order.end(), std::size_t(0));
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(g.x(a)) < std::abs(g.x(b));
  });
  dist.resize(g.n);
  for (std::size_t i = 0; i < g.n; ++i) dist[i] = std::abs(g.x(order[i]));
}

/// Black-soliton values at arbitrary points (odd in x, limits +-1).
inline std::vector<double> black_soliton_values(const Params& p,
                                                const std::vector<double>& xs,
                                                double h_nom) {
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), std::size_t(0));
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) {
              return std::abs(xs[a]) < std::abs(xs[b]);
            });
  std::vector<double> dist(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) dist[i] = std::abs(xs[order[i]]);

  const double sl = std::sqrt(p.lambda);
  auto rhs = [&](const std::array<double, 1>& y) -> std::array<double, 1> {
    double phi = std::min(y[0], 1.0);
    return {sl * std::sqrt(potential_F(phi * phi))};
  };
  auto states = integrate_to_targets<1>(
      {0.0}, dist, h_nom, rhs,
      [](const std::array<double, 1>& y) { return 1.0 - y[0] < 1e-13; },
      [](std::array<double, 1>& y) { y[0] = 1.0; });

  std::vector<double> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double v = states[i][0];
    out[order[i]] = xs[order[i]] < 0.0 ? -v : (xs[order[i]] > 0.0 ? v : 0.0);
  }
  return out;
}

/// Traveling modulus rho_c at arbitrary points (even in x, range [y0, 1)).
/// The fixed point rho = 1 is linearly unstable under outward integration
/// (errors grow like e^{mu x}, mu = sqrt(2 lambda - c^2)), so once the
/// trajectory is within 1e-4 of it the integration hands over to the
/// asymptotic tail 1 - (a e^{-mu s} + B a^2 e^{-2 mu s}) matched at the
/// handover point. The quadratic term (B from expanding f_c about 1) keeps
/// the junction mismatch at O((1-rho)^3), below the profile residual floor.
inline std::vector<double> traveling_rho_values(const Params& p, double y0,
                                                const std::vector<double>& xs,
                                                double h_nom) {
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), std::size_t(0));
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) {
              return std::abs(xs[a]) < std::abs(xs[b]);
            });

  const double mu = std::sqrt(2.0 * p.lambda - p.c * p.c);
  auto rhs = [&](const std::array<double, 2>& y) -> std::array<double, 2> {
    return {y[1], f_c(std::max(y[0], 1e-8), p)};
  };

  // u = 1 - rho obeys u'' = mu^2 u - (f_c''(1)/2) u^2 + O(u^3), so the decay
  // is a e^{-mu s} + B a^2 e^{-2 mu s} with B = -f_c''(1) / (6 mu^2)
  const double tail_b =
      -(3.0 * p.c * p.c + 2.0 * p.lambda) / (6.0 * mu * mu);

  std::vector<double> out(xs.size());
  std::array<double, 2> y{y0, 0.0};
  double x = 0.0;
  bool tail = false;
  double tail_x = 0.0, tail_a = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double t = std::abs(xs[order[i]]);
    double gap = t - x;
    if (gap > 1e-14 && !tail) {
      int steps = std::max(1, int(std::ceil(gap / h_nom)));
      double h = gap / double(steps);
      for (int s = 0; s < steps; ++s) {
        rk4_step<2>(y, h, rhs);
        if (1.0 - y[0] < 1e-4 && y[1] >= 0.0) {
          tail = true;
          tail_x = x + double(s + 1) * h;
          double u = 1.0 - y[0];
          tail_a = u * (1.0 - tail_b * u);  // invert a + B a^2 = u to O(u^3)
          break;
        }
      }
    }
    x = t;
    if (tail) {
      double e = std::exp(-mu * (t - tail_x));
      out[order[i]] = 1.0 - (tail_a * e + tail_b * tail_a * tail_a * e * e);
    } else {
      out[order[i]] = y[0];
    }
  }
  return out;
}

}  // namespace detail

/// The stationary (c = 0) profile: real, odd, strictly increasing from -1 to
/// 1, vanishing at x = 0, computed by RK4 on phi' = sqrt(lambda F(phi^2))
/// with step dx/8.
inline WaveProfile black_soliton(const Params& p, const Grid& grid,
                                 double theta0 = 0.0) {
  std::vector<double> xs(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) xs[i] = grid.x(i);
  std::vector<double> phi0 =
      detail::black_soliton_values(p, xs, grid.dx / 8.0);

  WaveProfile w;
  w.grid = grid;
  w.p = p;
  w.theta0 = theta0;
  w.phi.resize(grid.n);
  w.rho.resize(grid.n);
  w.theta.resize(grid.n);
  w.eta.resize(grid.n);
  const Complex ph = std::polar(1.0, theta0);
  for (std::size_t i = 0; i < grid.n; ++i) {
    w.phi[i] = ph * phi0[i];
    w.rho[i] = std::abs(phi0[i]);
    w.theta[i] = phi0[i] >= 0.0 ? theta0 : theta0 + std::numbers::pi;
    w.eta[i] = 1.0 - w.rho[i] * w.rho[i];
  }
  w.winding = 0.0;
  return w;
}

/// Even modulus rho_c of the traveling wave, from rho'' = f_c(rho) with
/// rho(0) = y0, rho'(0) = 0. The second-order form avoids the square-root
/// degeneracy of (rho')^2 = g_c(rho) at the turning point.
inline std::vector<double> traveling_modulus(const Params& p,
                                             const Grid& grid) {
  if (p.c == 0.0)
    throw WrongBranch("traveling_modulus: c = 0 is the black-soliton branch");
  if (!p.admissible_velocity()) throw VelocityAboveThreshold(p.c, p.lambda);
  CriticalPoints cp = find_critical_points(p);
  std::vector<double> xs(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) xs[i] = grid.x(i);
  return detail::traveling_rho_values(p, cp.y0, xs, grid.dx / 8.0);
}

/// Phase from theta' = (c/2)(1 - 1/rho^2) by endpoint-corrected cumulative
/// trapezoid quadrature (4th order), anchored so that theta(0) = theta0
/// (using the even symmetry of theta' when x = 0 falls between samples).
inline std::vector<double> traveling_phase(const std::vector<double>& rho,
                                           const Grid& grid, const Params& p,
                                           double theta0) {
  if (rho.size() != grid.n)
    throw DomainError("traveling_phase: sample count mismatch");
  for (double r : rho)
    if (!(r > 0.0)) throw DomainError("traveling_phase: rho touches 0");
  const std::size_t n = grid.n;
  const double h = grid.dx;
  std::vector<double> t(n), tp(n), th(n);
  for (std::size_t i = 0; i < n; ++i)
    t[i] = 0.5 * p.c * (1.0 - 1.0 / (rho[i] * rho[i]));
  {
    std::vector<Complex> tc(n);
    for (std::size_t i = 0; i < n; ++i) tc[i] = t[i];
    GridFunction d =
        derivative(GridFunction(Grid(grid.x0, h, n, Bc::Free), tc), 1);
    for (std::size_t i = 0; i < n; ++i) tp[i] = d.values[i].real();
  }
  // per-cell integral with the Euler-Maclaurin endpoint correction
  auto cell = [&](std::size_t i) {
    return 0.5 * h * (t[i] + t[i + 1]) - h * h / 12.0 * (tp[i + 1] - tp[i]);
  };
  auto fill_from = [&](std::size_t a) {
    for (std::size_t i = a + 1; i < n; ++i) th[i] = th[i - 1] + cell(i - 1);
    for (std::size_t i = a; i-- > 0;) th[i] = th[i + 1] - cell(i);
  };

  // anchor at the sample(s) nearest x = 0
  std::size_t i0 = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (std::abs(grid.x(i)) < std::abs(grid.x(i0))) i0 = i;
  if (std::abs(grid.x(i0)) < 1e-12 * h) {
    th[i0] = theta0;
  } else if (i0 + 1 < n && grid.x(i0) < 0.0 &&
             std::abs(grid.x(i0) + grid.x(i0 + 1)) < 1e-9 * h) {
    // 0 sits midway between i0 and i0+1; theta - theta0 is odd there
    double inc = cell(i0);
    th[i0] = theta0 - 0.5 * inc;
    th[i0 + 1] = theta0 + 0.5 * inc;
    for (std::size_t i = i0 + 2; i < n; ++i) th[i] = th[i - 1] + cell(i - 1);
    for (std::size_t i = i0; i-- > 0;) th[i] = th[i + 1] - cell(i);
    return th;
  } else {
    // off-center grid: Taylor anchor theta(x) = theta0 + x t(x) - x^2/2 t'(x)
    double x = grid.x(i0);
    th[i0] = theta0 + x * t[i0] - 0.5 * x * x * tp[i0];
  }
  fill_from(i0);
  return th;
}

/// Assemble the traveling wave phi_c = rho_c e^{i Theta_c}. Dispatches to the
/// black soliton at c = 0.
inline WaveProfile traveling_wave(const Params& p, const Grid& grid,
                                  double theta0 = 0.0) {
  if (!p.admissible_velocity()) throw VelocityAboveThreshold(p.c, p.lambda);
  if (p.c == 0.0) return black_soliton(p, grid, theta0);

  CriticalPoints cp = find_critical_points(p);
  std::vector<double> rho = traveling_modulus(p, grid);
  std::vector<double> theta = traveling_phase(rho, grid, p, theta0);

  WaveProfile w;
  w.grid = grid;
  w.p = p;
  w.theta0 = theta0;
  w.y0 = cp.y0;
  w.rho = rho;
  w.theta = theta;
  w.phi.resize(grid.n);
  w.eta.resize(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) {
    w.phi[i] = std::polar(rho[i], theta[i]);
    w.eta[i] = 1.0 - rho[i] * rho[i];
  }
  w.winding = theta.back() - theta.front();
  return w;
}

/// Closed-form dark soliton of the cubic GP equation,
/// sqrt(1 - c^2/2) tanh(sqrt(1 - c^2/2) x / sqrt 2) + i c / sqrt 2.
inline WaveProfile gp_dark_soliton(double c, const Grid& grid) {
  if (c * c >= 2.0) throw VelocityAboveThreshold(c, 1.0);
  const double nu = std::sqrt(1.0 - 0.5 * c * c);
  WaveProfile w;
  w.kind = ProfileKind::CubicGP;
  w.grid = grid;
  w.p = Params(1.0, c);
  w.phi.resize(grid.n);
  w.rho.resize(grid.n);
  w.theta.resize(grid.n);
  w.eta.resize(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) {
    double x = grid.x(i);
    Complex v(nu * std::tanh(nu * x / std::numbers::sqrt2),
              c / std::numbers::sqrt2);
    w.phi[i] = v;
    w.rho[i] = std::abs(v);
    w.theta[i] = std::atan2(v.imag(), v.real());
    w.eta[i] = 1.0 - w.rho[i] * w.rho[i];
  }
  if (c != 0.0) w.y0 = std::abs(c) / std::numbers::sqrt2;
  w.winding = w.theta.back() - w.theta.front();
  return w;
}

/// Max interior residual of -ic phi' + phi'' - lambda phi ln|phi|^2, with
/// derivatives by 4th-order centered finite differences. The acceptance
/// metric for every computed profile. Samples with |phi| < 0.1 are skipped:
/// at a vacuum point the nonlinearity is only C^1 (phi ~ x there, so phi
/// carries x^3 ln|x| terms), and finite differences lose their accuracy
/// order in that neighborhood.
inline double stationary_residual(const WaveProfile& w) {
  Grid fd(w.grid.x0, w.grid.dx, w.grid.n, Bc::Free);
  GridFunction u(fd, w.phi);
  GridFunction d1 = derivative(u, 1);
  GridFunction d2 = derivative(u, 2);
  double worst = 0.0;
  for (std::size_t i = 2; i + 2 < w.grid.n; ++i) {
    if (std::abs(w.phi[i]) < 0.1) continue;
    Complex r = Complex(0.0, -w.p.c) * d1.values[i] + d2.values[i] -
                w.p.lambda * log_nonlinearity(w.phi[i]);
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

}  // namespace loggp
