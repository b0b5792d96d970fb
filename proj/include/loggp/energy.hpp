#pragma once

#include <cmath>

#include "loggp/grid.hpp"
#include "loggp/scalars.hpp"

namespace loggp {

/// Decomposition of the energy functionals of a field u:
///   kinetic   = || u' ||_{L2}^2
///   pot_log   = lambda * integral F(|u|^2)          (logarithmic potential)
///   pot_gl    = 1/2    * integral (|u|^2 - 1)^2     (Ginzburg-Landau potential)
///   e_pot_hat = integral (|u| - 1)^2 ln(2 + |u|)    (equivalent modulus form)
struct EnergyReport {
  double kinetic = 0.0;
  double pot_log = 0.0;
  double pot_gl = 0.0;
  double e_pot_hat = 0.0;
  double total_loggp = 0.0;  // kinetic + pot_log
  double total_gp = 0.0;     // kinetic + pot_gl
};

/// With eps > 0 the log potential is replaced by its regularization
///   F_eps(y) = (y+eps) ln(y+eps) - y - ((1+eps) ln(1+eps) - 1),
/// the antiderivative of ln(y+eps) normalized to vanish at y = 1; this is the
/// quantity conserved by the eps-regularized flow.
inline EnergyReport energy_report(const GridFunction& u, const Params& p,
                                  double eps = 0.0) {
  if (eps < 0.0) throw DomainError("energy_report: eps must be >= 0");
  EnergyReport r;
  GridFunction du = derivative(u, 1);
  r.kinetic = integrate_real(du, [](Complex z) { return std::norm(z); });
  if (eps == 0.0) {
    r.pot_log =
        p.lambda *
        integrate_real(u, [](Complex z) { return potential_F(std::norm(z)); });
  } else {
    const double c1 = (1.0 + eps) * std::log1p(eps) - 1.0;
    r.pot_log = p.lambda * integrate_real(u, [eps, c1](Complex z) {
      double y = std::norm(z) + eps;
      return y * std::log(y) - (y - eps) - c1;
    });
  }
  r.pot_gl = 0.5 * integrate_real(u, [](Complex z) {
    double d = std::norm(z) - 1.0;
    return d * d;
  });
  r.e_pot_hat = integrate_real(u, [](Complex z) {
    double m = std::abs(z);
    return (m - 1.0) * (m - 1.0) * std::log(2.0 + m);
  });
  r.total_loggp = r.kinetic + r.pot_log;
  r.total_gp = r.kinetic + r.pot_gl;
  return r;
}

/// Squared H1 norm of |u| - 1, with d/dx |u| evaluated as
/// Re(conj(u)/|u| * u') where |u| > 1e-12 and 0 at (near-)vacuum samples.
/// The vacuum guard is consistent: the black soliton's modulus derivative has
/// the finite limit sqrt(lambda) at its single zero.
inline double h1_modulus_distance(const GridFunction& u) {
  GridFunction du = derivative(u, 1);
  const std::size_t n = u.size();
  std::vector<Complex> integrand(n);
  for (std::size_t i = 0; i < n; ++i) {
    double m = std::abs(u.values[i]);
    double d = m - 1.0;
    double dm = 0.0;
    if (m > 1e-12)
      dm = (std::conj(u.values[i]) / m * du.values[i]).real();
    integrand[i] = Complex(d * d + dm * dm, 0.0);
  }
  return integrate(GridFunction(u.grid, std::move(integrand))).real();
}

/// Ratio of the two equivalent potential energies, with the lambda factor of
/// pot_log divided out. Finite and positive for every non-trivial modulus.
inline double equivalence_ratio(const GridFunction& u, const Params& p) {
  EnergyReport r = energy_report(u, p);
  if (r.e_pot_hat <= 0.0)
    throw TrivialModulus("equivalence_ratio: |u| == 1 everywhere");
  return (r.pot_log / p.lambda) / r.e_pot_hat;
}

}  // namespace loggp
