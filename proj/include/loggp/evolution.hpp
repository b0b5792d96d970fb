#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "loggp/energy.hpp"
#include "loggp/grid.hpp"
#include "loggp/profiles.hpp"
#include "loggp/scalars.hpp"

namespace loggp {

enum class Nonlinearity { Log, LogRegularized, CubicGP };

struct EvolutionConfig {
  Params p;
  double dt = 1e-3;
  double t_end = 1.0;
  double eps = 0.0;  // regularization: lambda u ln(|u|^2 + eps)
  Nonlinearity nonlinearity = Nonlinearity::Log;
  std::size_t record_every = 100;

  void validate() const {
    if (!(dt > 0.0)) throw DomainError("EvolutionConfig: dt must be > 0");
    if (!(t_end >= dt))
      throw DomainError("EvolutionConfig: t_end must be >= dt");
    if (eps < 0.0) throw DomainError("EvolutionConfig: eps must be >= 0");
    if (nonlinearity == Nonlinearity::LogRegularized && !(eps > 0.0))
      throw DomainError("EvolutionConfig: LogRegularized requires eps > 0");
    if (record_every == 0)
      throw DomainError("EvolutionConfig: record_every must be >= 1");
  }
};

/// Time series of diagnostics recorded along an evolution.
struct Trajectory {
  std::vector<double> times;
  std::vector<EnergyReport> energy_series;
  std::vector<double> mass_defect_series;  // ||u(t) - u(0)||_{L2} on the box
  std::vector<double> h2_series;           // ||u_xx(t)||_{L2}, boundedness monitor
  std::vector<GridFunction> snapshots;
  GridFunction final;

  /// Relative drift of the conserved total over the run.
  double energy_drift(bool cubic_gp = false) const {
    double e0 = cubic_gp ? energy_series.front().total_gp
                         : energy_series.front().total_loggp;
    double worst = 0.0;
    for (const auto& e : energy_series) {
      double et = cubic_gp ? e.total_gp : e.total_loggp;
      worst = std::max(worst, std::abs(et - e0));
    }
    return worst / std::max(std::abs(e0), 1.0);
  }
};

namespace detail {

inline void kinetic_half_step(std::vector<Complex>& a, double L, double dt) {
  fft_forward(a);
  const std::size_t n = a.size();
  for (std::size_t j = 0; j < n; ++j) {
    double k = wavenumber(j, n, L);
    a[j] *= std::polar(1.0, -k * k * dt * 0.5);
  }
  fft_inverse(a);
}

/// Exact flow of i u_t = (nonlinear term): pointwise phase rotation.
inline void nonlinear_step(std::vector<Complex>& a, const EvolutionConfig& cfg,
                           double dt) {
  const double lam = cfg.p.lambda;
  switch (cfg.nonlinearity) {
    case Nonlinearity::Log:
      for (auto& z : a) {
        double m2 = std::norm(z);
        if (m2 > 1e-300) z *= std::polar(1.0, -lam * dt * std::log(m2));
      }
      break;
    case Nonlinearity::LogRegularized:
      for (auto& z : a)
        z *= std::polar(1.0, -lam * dt * std::log(std::norm(z) + cfg.eps));
      break;
    case Nonlinearity::CubicGP:
      for (auto& z : a) z *= std::polar(1.0, -dt * (std::norm(z) - 1.0));
      break;
  }
}

inline void strang_step_periodic(std::vector<Complex>& a, double L,
                                 const EvolutionConfig& cfg) {
  kinetic_half_step(a, L, cfg.dt);
  nonlinear_step(a, cfg, cfg.dt);
  kinetic_half_step(a, L, cfg.dt);
}

}  // namespace detail

/// One Strang split step: half spectral kinetic step, exact pointwise
/// nonlinear phase rotation over dt, half kinetic step. Unitary in the
/// discrete L2 norm up to roundoff.
inline GridFunction strang_step(const GridFunction& u,
                                const EvolutionConfig& cfg) {
  cfg.validate();
  switch (u.grid.bc) {
    case Bc::Periodic: {
      std::vector<Complex> a = u.values;
      detail::strang_step_periodic(a, u.grid.length(), cfg);
      return GridFunction(u.grid, std::move(a));
    }
    case Bc::DirichletOdd: {
      GridFunction ext = odd_extension(u);
      detail::strang_step_periodic(ext.values, ext.grid.length(), cfg);
      return odd_restrict(ext, u.grid);
    }
    case Bc::Free:
      throw DomainError("strang_step: free boundary is unsupported for evolution");
  }
  throw DomainError("strang_step: unknown boundary condition");
}

/// Repeated Strang stepping with diagnostics every record_every steps.
/// Aborts on the first non-finite sample, reporting the step index.
inline Trajectory evolve(const GridFunction& u0, const EvolutionConfig& cfg) {
  cfg.validate();
  if (u0.grid.bc == Bc::Free)
    throw DomainError("evolve: free boundary is unsupported for evolution");

  const std::size_t steps = std::size_t(std::llround(cfg.t_end / cfg.dt));
  Trajectory traj;
  auto record = [&](double t, const std::vector<Complex>& a) {
    GridFunction u(u0.grid, a);
    traj.times.push_back(t);
    traj.energy_series.push_back(energy_report(
        u, cfg.p,
        cfg.nonlinearity == Nonlinearity::LogRegularized ? cfg.eps : 0.0));
    traj.mass_defect_series.push_back(l2_distance(u, u0));
    traj.h2_series.push_back(l2_norm(derivative(u, 2)));
    traj.snapshots.push_back(std::move(u));
  };

  std::vector<Complex> a = u0.values;
  record(0.0, a);

  // DirichletOdd data evolves on its smooth periodic extension; restriction
  // back happens only at record times.
  const bool odd = u0.grid.bc == Bc::DirichletOdd;
  GridFunction work = odd ? odd_extension(u0) : GridFunction(u0.grid, a);
  const double L = work.grid.length();

  for (std::size_t s = 1; s <= steps; ++s) {
    detail::strang_step_periodic(work.values, L, cfg);
    for (const auto& z : work.values)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::runtime_error("evolve: non-finite sample at step " +
                                 std::to_string(s));
    if (s % cfg.record_every == 0 || s == steps) {
      const std::vector<Complex>& cur =
          odd ? odd_restrict(work, u0.grid).values : work.values;
      record(double(s) * cfg.dt, cur);
    }
  }
  traj.final = traj.snapshots.back();
  return traj;
}

/// Periodic wave/anti-wave composite on a box of length 2*separation:
/// u(x) = phi(x - aL) * conj(phi(x - aR)) with centers aL = -S/2 + c t,
/// aR = S/2 - c t. The two factors are unimodular constants at each other's
/// center, so the composite is smooth and periodic once the tails overlap
/// only below tolerance. `t` shifts the centers to build translate oracles.
inline GridFunction make_pair_box(const WaveProfile& w, double separation,
                                  double t = 0.0) {
  if (!(separation > 0.0))
    throw DomainError("make_pair_box: separation must be > 0");
  const double S = separation;
  // power-of-two sample count at (at least) the profile's resolution
  std::size_t n = 8;
  while (double(n) * w.grid.dx < 2.0 * S) n *= 2;
  Grid box = Grid::periodic(-S, 2.0 * S, n);

  bool constant = true;
  for (const auto& z : w.phi)
    if (std::abs(z - w.phi.front()) > 1e-14) {
      constant = false;
      break;
    }
  if (constant)
    return GridFunction(box, std::vector<Complex>(n, w.phi.front()));

  const double aL = -0.5 * S + w.p.c * t;
  const double aR = 0.5 * S - w.p.c * t;
  std::vector<double> xiL(n), xiR(n);
  for (std::size_t j = 0; j < n; ++j) {
    xiL[j] = box.x(j) - aL;
    xiR[j] = box.x(j) - aR;
  }

  std::vector<Complex> u(n);
  const double h = w.grid.dx / 8.0;
  if (w.kind == ProfileKind::CubicGP) {
    const double nu = std::sqrt(1.0 - 0.5 * w.p.c * w.p.c);
    auto phi = [&](double x) -> Complex {
      return {nu * std::tanh(nu * x / std::numbers::sqrt2),
              w.p.c / std::numbers::sqrt2};
    };
    for (std::size_t j = 0; j < n; ++j)
      u[j] = phi(xiL[j]) * std::conj(phi(xiR[j]));
  } else if (w.p.c == 0.0) {
    std::vector<double> bL = detail::black_soliton_values(w.p, xiL, h);
    std::vector<double> bR = detail::black_soliton_values(w.p, xiR, h);
    const Complex ph = std::polar(1.0, w.theta0);
    for (std::size_t j = 0; j < n; ++j) u[j] = ph * bL[j] * bR[j];
  } else {
    CriticalPoints cp = find_critical_points(w.p);
    std::vector<double> rL =
        detail::traveling_rho_values(w.p, cp.y0, xiL, h);
    std::vector<double> rR =
        detail::traveling_rho_values(w.p, cp.y0, xiR, h);
    Grid shifted(xiL.front(), box.dx, n, Bc::Free);
    std::vector<double> thL = traveling_phase(rL, shifted, w.p, w.theta0);
    Grid shiftedR(xiR.front(), box.dx, n, Bc::Free);
    std::vector<double> thR = traveling_phase(rR, shiftedR, w.p, 0.0);
    for (std::size_t j = 0; j < n; ++j)
      u[j] = std::polar(rL[j] * rR[j], thL[j] - thR[j]);
  }

  double edge_dev = std::max(std::abs(1.0 - std::abs(u.front())),
                             std::abs(1.0 - std::abs(u.back())));
  if (edge_dev > 1e-6)
    throw GluingError("make_pair_box: boundary modulus deviates by " +
                      std::to_string(edge_dev) +
                      "; increase the separation");
  return GridFunction(box, std::move(u));
}

namespace detail {

inline Complex inner_product(const GridFunction& a, const GridFunction& b) {
  std::vector<Complex> prod(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    prod[i] = a.values[i] * std::conj(b.values[i]);
  return integrate(GridFunction(a.grid, std::move(prod)));
}

/// Least-squares slope of y against t.
inline double lsq_slope(const std::vector<double>& t,
                        const std::vector<double>& y) {
  double n = double(t.size()), st = 0, sy = 0, stt = 0, sty = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    st += t[i];
    sy += y[i];
    stt += t[i] * t[i];
    sty += t[i] * y[i];
  }
  return (n * sty - st * sy) / (n * stt - st * st);
}

}  // namespace detail

/// Best-fit rotation rate of the recorded states against the given
/// references: least-squares slope of unwrapped arg<u(t_k), ref_k> versus t.
/// Zero (within solver error) certifies omega = 0 for a genuine wave profile.
inline double frequency_probe(const Trajectory& traj,
                              const std::vector<GridFunction>& refs) {
  if (refs.size() != traj.snapshots.size())
    throw DomainError("frequency_probe: reference count mismatch");
  std::vector<double> phase(refs.size());
  double prev = 0.0;
  for (std::size_t k = 0; k < refs.size(); ++k) {
    double a = std::arg(detail::inner_product(traj.snapshots[k], refs[k]));
    if (k > 0) {  // unwrap
      while (a - prev > std::numbers::pi) a -= 2.0 * std::numbers::pi;
      while (a - prev < -std::numbers::pi) a += 2.0 * std::numbers::pi;
    }
    phase[k] = a;
    prev = a;
  }
  return detail::lsq_slope(traj.times, phase);
}

/// Convenience probe for a trajectory launched from profile w: stationary
/// profiles are compared against the initial state; moving ones against the
/// pair-box translate at each record time.
inline double frequency_probe(const Trajectory& traj, const WaveProfile& w) {
  std::vector<GridFunction> refs;
  refs.reserve(traj.snapshots.size());
  if (w.p.c == 0.0) {
    for (std::size_t k = 0; k < traj.snapshots.size(); ++k)
      refs.push_back(traj.snapshots.front());
  } else {
    double S = 0.5 * traj.snapshots.front().grid.length();
    for (double t : traj.times) refs.push_back(make_pair_box(w, S, t));
  }
  return frequency_probe(traj, refs);
}

}  // namespace loggp
