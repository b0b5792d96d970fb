#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "loggp/evolution.hpp"
#include "loggp/grid.hpp"
#include "loggp/scalars.hpp"

namespace loggp {

/// Sampled orthonormal Hermite functions and their derivatives, rows k = 0..m.
struct HermiteBasis {
  std::size_t m = 0;
  std::vector<std::vector<double>> w;   // w[k][i] = w_k(x_i)
  std::vector<std::vector<double>> dw;  // dw[k][i] = w_k'(x_i)
};

/// Quadrature weights matching integrate(): rectangle on periodic and
/// cell-centered grids, trapezoid on free grids.
inline std::vector<double> quadrature_weights(const Grid& g) {
  std::vector<double> wt(g.n, g.dx);
  if (g.bc == Bc::Free) {
    wt.front() *= 0.5;
    wt.back() *= 0.5;
  }
  return wt;
}

/// Orthonormal Hermite functions via the stable three-term recurrence,
/// derivatives via the ladder relation w_k' = sqrt(k/2) w_{k-1}
/// - sqrt((k+1)/2) w_{k+1}. The grid must be wide enough that every basis
/// function has decayed below 1e-12 at the edges.
inline HermiteBasis hermite_basis(std::size_t m, const Grid& grid) {
  const std::size_t n = grid.n;
  // recurrence needs row m+1 for the derivative of row m
  std::vector<std::vector<double>> h(m + 2, std::vector<double>(n));
  const double norm0 = std::pow(std::numbers::pi, -0.25);
  for (std::size_t i = 0; i < n; ++i) {
    double x = grid.x(i);
    h[0][i] = norm0 * std::exp(-0.5 * x * x);
    if (m + 2 > 1) h[1][i] = std::numbers::sqrt2 * x * h[0][i];
    for (std::size_t k = 2; k < m + 2; ++k)
      h[k][i] = std::sqrt(2.0 / double(k)) * x * h[k - 1][i] -
                std::sqrt(double(k - 1) / double(k)) * h[k - 2][i];
  }
  for (std::size_t k = 0; k <= m; ++k) {
    if (std::abs(h[k].front()) > 1e-12 || std::abs(h[k].back()) > 1e-12)
      throw BasisTruncationError(
          "hermite_basis: basis function " + std::to_string(k) +
          " has not decayed at the grid edges; widen the domain");
  }
  HermiteBasis b;
  b.m = m;
  b.w.assign(h.begin(), h.begin() + long(m) + 1);
  b.dw.resize(m + 1, std::vector<double>(n));
  for (std::size_t k = 0; k <= m; ++k) {
    double cm = k > 0 ? std::sqrt(double(k) / 2.0) : 0.0;
    double cp = std::sqrt(double(k + 1) / 2.0);
    for (std::size_t i = 0; i < n; ++i)
      b.dw[k][i] = (k > 0 ? cm * h[k - 1][i] : 0.0) - cp * h[k + 1][i];
  }
  return b;
}

/// Finite-dimensional state of the approximation u_m = u0 + sum g_k w_k.
struct GalerkinState {
  std::size_t m = 0;
  std::vector<Complex> coeffs;          // g_k(t), k = 0..m
  HermiteBasis basis;
  GridFunction u0;
  std::vector<Complex> du0;             // sampled u0'
  std::vector<std::vector<double>> stiffness;  // <w_j', w_k'>
  std::vector<Complex> forcing;         // <w_j', u0'>
  std::vector<double> weights;

  std::vector<Complex> reconstruct() const {
    std::vector<Complex> u = u0.values;
    for (std::size_t k = 0; k <= m; ++k)
      for (std::size_t i = 0; i < u.size(); ++i)
        u[i] += coeffs[k] * basis.w[k][i];
    return u;
  }
  std::vector<Complex> reconstruct_dx() const {
    std::vector<Complex> du = du0;
    for (std::size_t k = 0; k <= m; ++k)
      for (std::size_t i = 0; i < du.size(); ++i)
        du[i] += coeffs[k] * basis.dw[k][i];
    return du;
  }
};

inline GalerkinState make_galerkin_state(const GridFunction& u0,
                                         std::size_t m) {
  if (m < 1) throw DomainError("make_galerkin_state: need m >= 1");
  GalerkinState s;
  s.m = m;
  s.coeffs.assign(m + 1, Complex(0.0));
  s.basis = hermite_basis(m, u0.grid);
  s.u0 = u0;
  s.du0 = derivative(u0, 1).values;
  s.weights = quadrature_weights(u0.grid);
  s.stiffness.assign(m + 1, std::vector<double>(m + 1, 0.0));
  s.forcing.assign(m + 1, Complex(0.0));
  const std::size_t n = u0.grid.n;
  for (std::size_t j = 0; j <= m; ++j) {
    for (std::size_t k = j; k <= m; ++k) {
      double v = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        v += s.weights[i] * s.basis.dw[j][i] * s.basis.dw[k][i];
      s.stiffness[j][k] = s.stiffness[k][j] = v;
    }
    Complex f(0.0);
    for (std::size_t i = 0; i < n; ++i)
      f += s.weights[i] * s.basis.dw[j][i] * s.du0[i];
    s.forcing[j] = f;
  }
  return s;
}

/// Time derivatives of the coefficients solving the projected equation:
/// i dg_j/dt = <w_j', u_m'> + lambda <w_j, u_m ln|u_m|^2>, all inner products
/// by the grid quadrature. With this convention the reconstructed u_m
/// conserves the discrete logGP energy exactly at the semi-discrete level.
inline std::vector<Complex> galerkin_rhs(const GalerkinState& s,
                                         const Params& p) {
  const std::size_t n = s.u0.grid.n;
  std::vector<Complex> um = s.reconstruct();
  std::vector<Complex> fum(n);
  for (std::size_t i = 0; i < n; ++i)
    fum[i] = s.weights[i] * log_nonlinearity(um[i]);

  std::vector<Complex> dg(s.m + 1);
  for (std::size_t j = 0; j <= s.m; ++j) {
    Complex r = s.forcing[j];
    for (std::size_t k = 0; k <= s.m; ++k)
      r += s.stiffness[j][k] * s.coeffs[k];
    Complex nl(0.0);
    for (std::size_t i = 0; i < n; ++i) nl += s.basis.w[j][i] * fum[i];
    r += p.lambda * nl;
    dg[j] = Complex(0.0, -1.0) * r;
  }
  return dg;
}

namespace detail {

/// Basis-consistent energy of the reconstructed state (same quadrature as
/// the coefficient ODE, so conservation is exact up to time-stepping error).
inline EnergyReport galerkin_energy(const GalerkinState& s, const Params& p) {
  std::vector<Complex> um = s.reconstruct();
  std::vector<Complex> dum = s.reconstruct_dx();
  EnergyReport r;
  for (std::size_t i = 0; i < um.size(); ++i) {
    double wt = s.weights[i];
    double m2 = std::norm(um[i]);
    double d = m2 - 1.0;
    double mod = std::sqrt(m2);
    r.kinetic += wt * std::norm(dum[i]);
    r.pot_log += wt * potential_F(m2);
    r.pot_gl += wt * 0.5 * d * d;
    r.e_pot_hat += wt * (mod - 1.0) * (mod - 1.0) * std::log(2.0 + mod);
  }
  r.pot_log *= p.lambda;
  r.total_loggp = r.kinetic + r.pot_log;
  r.total_gp = r.kinetic + r.pot_gl;
  return r;
}

inline double galerkin_grad_phi(const GalerkinState& s) {
  double v = 0.0;
  for (std::size_t i = 0; i < s.u0.grid.n; ++i) {
    Complex d(0.0);
    for (std::size_t k = 0; k <= s.m; ++k) d += s.coeffs[k] * s.basis.dw[k][i];
    v += s.weights[i] * std::norm(d);
  }
  return std::sqrt(v);
}

}  // namespace detail

/// Integrate the coefficient ODE with RK4, recording the same diagnostics as
/// the split-step solver. Both global bounds of the construction (energy
/// equality and the gradient bound on phi_m) are checked at every record.
inline Trajectory galerkin_evolve(const GridFunction& u0, std::size_t m,
                                  const EvolutionConfig& cfg) {
  cfg.validate();
  GalerkinState s = make_galerkin_state(u0, m);
  const double e0 = detail::galerkin_energy(s, cfg.p).total_loggp;
  const double grad_cap = 2.0 * std::sqrt(std::max(e0, 0.0)) + 1e-10;

  Trajectory traj;
  auto record = [&](double t) {
    std::vector<Complex> um = s.reconstruct();
    for (const auto& z : um)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::runtime_error("galerkin_evolve: blow-up at t = " +
                                 std::to_string(t));
    GridFunction u(u0.grid, um);
    traj.times.push_back(t);
    traj.energy_series.push_back(detail::galerkin_energy(s, cfg.p));
    traj.mass_defect_series.push_back(l2_distance(u, u0));
    traj.h2_series.push_back(l2_norm(derivative(u, 2)));
    traj.snapshots.push_back(std::move(u));
    if (detail::galerkin_grad_phi(s) > grad_cap)
      throw std::runtime_error(
          "galerkin_evolve: gradient bound violated at t = " +
          std::to_string(t));
  };
  record(0.0);

  const std::size_t steps = std::size_t(std::llround(cfg.t_end / cfg.dt));
  const double h = cfg.dt;
  std::vector<Complex> k1, k2, k3, k4, g0;
  for (std::size_t step = 1; step <= steps; ++step) {
    g0 = s.coeffs;
    k1 = galerkin_rhs(s, cfg.p);
    for (std::size_t j = 0; j <= m; ++j)
      s.coeffs[j] = g0[j] + 0.5 * h * k1[j];
    k2 = galerkin_rhs(s, cfg.p);
    for (std::size_t j = 0; j <= m; ++j)
      s.coeffs[j] = g0[j] + 0.5 * h * k2[j];
    k3 = galerkin_rhs(s, cfg.p);
    for (std::size_t j = 0; j <= m; ++j) s.coeffs[j] = g0[j] + h * k3[j];
    k4 = galerkin_rhs(s, cfg.p);
    for (std::size_t j = 0; j <= m; ++j)
      s.coeffs[j] =
          g0[j] + h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    if (step % cfg.record_every == 0 || step == steps)
      record(double(step) * cfg.dt);
  }
  traj.final = traj.snapshots.back();
  return traj;
}

}  // namespace loggp
