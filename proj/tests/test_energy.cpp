#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "loggp/energy.hpp"
#include "loggp/profiles.hpp"

using namespace loggp;

namespace {

GridFunction random_field(std::mt19937& rng, double mod_lo, double mod_hi,
                          std::size_t n = 256) {
  Grid g = Grid::periodic(-8.0, 16.0, n);
  std::uniform_real_distribution<double> mod(mod_lo, mod_hi);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
  // smooth field: few random Fourier modes for the modulus and phase
  double a1 = mod(rng), a2 = mod(rng), p1 = ang(rng), p2 = ang(rng);
  std::vector<Complex> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    double x = g.x(i);
    double k = 2.0 * std::numbers::pi / 16.0;
    double m = 0.5 * (a1 + a2) +
               0.5 * (a2 - a1) * std::sin(k * x + p1);
    double th = 0.3 * std::cos(2.0 * k * x + p2);
    v[i] = std::polar(m, th);
  }
  return GridFunction(g, std::move(v));
}

}  // namespace

TEST_CASE("energy of constants is zero") {
  Grid g = Grid::periodic(0.0, 10.0, 64);
  Params p(1.0, 0.0);
  for (double alpha : {0.0, 0.7, 2.1}) {
    GridFunction u(g, std::vector<Complex>(64, std::polar(1.0, alpha)));
    EnergyReport r = energy_report(u, p);
    REQUIRE_THAT(r.kinetic, Catch::Matchers::WithinAbs(0.0, 1e-20));
    REQUIRE_THAT(r.pot_log, Catch::Matchers::WithinAbs(0.0, 1e-20));
    REQUIRE_THAT(r.pot_gl, Catch::Matchers::WithinAbs(0.0, 1e-20));
    REQUIRE_THAT(r.e_pot_hat, Catch::Matchers::WithinAbs(0.0, 1e-20));
  }
}

TEST_CASE("report components are consistent and nonnegative") {
  std::mt19937 rng(5);
  Params p(1.3, 0.0);
  for (int trial = 0; trial < 20; ++trial) {
    GridFunction u = random_field(rng, 0.2, 2.5);
    EnergyReport r = energy_report(u, p);
    REQUIRE(r.kinetic >= 0.0);
    REQUIRE(r.pot_log >= 0.0);
    REQUIRE(r.pot_gl >= 0.0);
    REQUIRE(r.e_pot_hat >= 0.0);
    REQUIRE(r.total_loggp == r.kinetic + r.pot_log);
    REQUIRE(r.total_gp == r.kinetic + r.pot_gl);
  }
}

TEST_CASE("GP dark soliton at rest: pot_gl equals kinetic") {
  Grid g = Grid::free_symmetric(40.0, 2049);
  GridFunction u = GridFunction::sample(
      g, [](double x) { return std::tanh(x / std::numbers::sqrt2); });
  EnergyReport r = energy_report(u, Params(1.0, 0.0));
  REQUIRE(r.kinetic > 0.1);
  // finite-difference derivative error dominates the quadrature error
  REQUIRE_THAT(r.pot_gl, Catch::Matchers::WithinAbs(r.kinetic, 1e-6));
}

TEST_CASE("regularized potential reduces to the plain one as eps -> 0") {
  std::mt19937 rng(11);
  GridFunction u = random_field(rng, 0.3, 2.0);
  Params p(1.0, 0.0);
  EnergyReport r0 = energy_report(u, p);
  EnergyReport r1 = energy_report(u, p, 1e-12);
  REQUIRE_THAT(r1.pot_log, Catch::Matchers::WithinAbs(r0.pot_log, 1e-9));
  REQUIRE_THROWS_AS(energy_report(u, p, -1.0), DomainError);
}

TEST_CASE("h1_modulus_distance against an analytic bump") {
  Grid g = Grid::periodic(-16.0, 32.0, 1024);
  GridFunction one(g, std::vector<Complex>(g.n, Complex(1.0)));
  REQUIRE_THAT(h1_modulus_distance(one), Catch::Matchers::WithinAbs(0.0, 1e-20));

  const double a = 0.1, w = 1.5;
  GridFunction u = GridFunction::sample(g, [&](double x) {
    return 1.0 + a * std::exp(-x * x / (w * w));
  });
  // ||b||_{H1}^2 = a^2 sqrt(2 pi)/2 (w + 1/w) for b = a exp(-x^2/w^2)
  double exact = a * a * std::sqrt(2.0 * std::numbers::pi) / 2.0 *
                 (w + 1.0 / w);
  REQUIRE_THAT(h1_modulus_distance(u), Catch::Matchers::WithinAbs(exact, 1e-10));
}

TEST_CASE("h1 modulus distance of black solitons is controlled by the energy") {
  for (double lam : {0.5, 1.0, 2.0}) {
    Params p(lam, 0.0);
    Grid g = Grid::free_symmetric(40.0, 2049);
    GridFunction u = black_soliton(p, g).as_grid_function();
    double h1 = h1_modulus_distance(u);
    double e = energy_report(u, p).total_loggp;
    REQUIRE(std::isfinite(h1));
    REQUIRE(h1 > 0.0);
    REQUIRE(h1 <= 2.0 * e);
  }
}

TEST_CASE("lower bound ln(2) ||v|-1||^2 <= e_pot_hat") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    GridFunction u = random_field(rng, 0.0, 3.0);
    EnergyReport r = energy_report(u, Params(1.0, 0.0));
    double l2m1 = integrate_real(u, [](Complex z) {
      double d = std::abs(z) - 1.0;
      return d * d;
    });
    REQUIRE(std::log(2.0) * l2m1 <= r.e_pot_hat * (1.0 + 1e-12));
  }
}

TEST_CASE("pointwise domination: pot_log <= 2 lambda pot_gl") {
  std::mt19937 rng(23);
  for (double lam : {0.5, 1.0, 3.0}) {
    Params p(lam, 0.0);
    for (int trial = 0; trial < 20; ++trial) {
      GridFunction u = random_field(rng, 0.1, 2.2);
      EnergyReport r = energy_report(u, p);
      REQUIRE(r.pot_log <= 2.0 * lam * r.pot_gl * (1.0 + 1e-12) + 1e-15);
    }
  }
  // at lambda = 1/2 the two totals are ordered
  Params half(0.5, 0.0);
  for (int trial = 0; trial < 20; ++trial) {
    GridFunction u = random_field(rng, 0.1, 2.2);
    EnergyReport r = energy_report(u, half);
    REQUIRE(r.total_loggp <= r.total_gp * (1.0 + 1e-12) + 1e-15);
  }
}

TEST_CASE("equivalence_ratio behavior") {
  Grid g = Grid::periodic(0.0, 10.0, 64);
  GridFunction one(g, std::vector<Complex>(64, Complex(1.0)));
  REQUIRE_THROWS_AS(equivalence_ratio(one, Params(1.0, 0.0)), TrivialModulus);

  std::mt19937 rng(29);
  for (double lam : {0.5, 2.0})
    for (int trial = 0; trial < 25; ++trial) {
      GridFunction u = random_field(rng, 0.5, 2.0);
      double ratio = equivalence_ratio(u, Params(lam, 0.0));
      REQUIRE(ratio > 0.1);
      REQUIRE(ratio < 10.0);
    }

  // field with an isolated zero still yields a finite positive ratio
  Grid wide = Grid::free_symmetric(40.0, 2049);
  GridFunction black =
      black_soliton(Params(1.0, 0.0), wide).as_grid_function();
  double r = equivalence_ratio(black, Params(1.0, 0.0));
  REQUIRE(std::isfinite(r));
  REQUIRE(r > 0.0);
}

TEST_CASE("square-integrability of the nonlinearity over a profile family") {
  // integrate |u ln|u|^2|^2 stays finite and polynomially bounded by the
  // energy across the family (empirical constant)
  for (double lam : {0.5, 1.0, 2.0}) {
    Params p(lam, 0.0);
    Grid g = Grid::free_symmetric(40.0, 2049);
    GridFunction u = black_soliton(p, g).as_grid_function();
    double nl2 = integrate_real(
        u, [](Complex z) { return std::norm(log_nonlinearity(z)); });
    double e = energy_report(u, p).total_loggp;
    REQUIRE(std::isfinite(nl2));
    REQUIRE(nl2 > 0.0);
    REQUIRE(nl2 <= 10.0 * (1.0 + e) * (1.0 + e));
  }
}

TEST_CASE("profile plus compact bump has finite controlled energy") {
  Params p(1.0, 0.0);
  Grid g = Grid::free_symmetric(40.0, 2049);
  GridFunction v = black_soliton(p, g).as_grid_function();
  double ev = energy_report(v, p).total_loggp;

  GridFunction f = GridFunction::sample(
      g, [](double x) { return 0.3 * std::exp(-x * x); });
  double f_h1 = integrate_real(f, [](Complex z) { return std::norm(z); }) +
                integrate_real(derivative(f, 1),
                               [](Complex z) { return std::norm(z); });

  std::vector<Complex> sum(g.n);
  for (std::size_t i = 0; i < g.n; ++i) sum[i] = v.values[i] + f.values[i];
  double evf = energy_report(GridFunction(g, std::move(sum)), p).total_loggp;
  REQUIRE(std::isfinite(evf));
  REQUIRE(evf <= 4.0 * (1.0 + ev) * (1.0 + f_h1));
}
