#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "loggp/evolution.hpp"

using namespace loggp;

namespace {

GridFunction smooth_vacuum_free(const Grid& g) {
  return GridFunction::sample(g, [](double x) {
    return Complex(1.0 + 0.3 * std::exp(-x * x / 4.0),
                   0.2 * std::exp(-(x - 2.0) * (x - 2.0) / 3.0));
  });
}

}  // namespace

TEST_CASE("EvolutionConfig validation") {
  EvolutionConfig cfg;
  cfg.dt = 0.0;
  REQUIRE_THROWS_AS(cfg.validate(), DomainError);
  cfg.dt = 1e-3;
  cfg.t_end = 1e-4;
  REQUIRE_THROWS_AS(cfg.validate(), DomainError);
  cfg.t_end = 1.0;
  cfg.nonlinearity = Nonlinearity::LogRegularized;
  REQUIRE_THROWS_AS(cfg.validate(), DomainError);  // needs eps > 0
  cfg.eps = 1e-8;
  REQUIRE_NOTHROW(cfg.validate());
  cfg.record_every = 0;
  REQUIRE_THROWS_AS(cfg.validate(), DomainError);
}

TEST_CASE("strang_step fixed points and exact special cases") {
  Grid g = Grid::periodic(0.0, 2.0 * std::numbers::pi, 64);
  EvolutionConfig cfg;
  cfg.p = Params(1.0, 0.0);
  cfg.dt = 1e-2;
  cfg.t_end = 1.0;

  // u == 1 is a fixed point
  GridFunction one(g, std::vector<Complex>(g.n, Complex(1.0)));
  GridFunction one2 = strang_step(one, cfg);
  for (std::size_t i = 0; i < g.n; ++i)
    REQUIRE(std::abs(one2.values[i] - 1.0) < 1e-14);

  // constant r rotates by exactly -lambda dt ln r^2
  const double r = 1.7;
  GridFunction cst(g, std::vector<Complex>(g.n, Complex(r)));
  GridFunction cst2 = strang_step(cst, cfg);
  Complex expect = r * std::polar(1.0, -cfg.p.lambda * cfg.dt *
                                           std::log(r * r));
  for (std::size_t i = 0; i < g.n; ++i)
    REQUIRE(std::abs(cst2.values[i] - expect) < 1e-13);

  // plane wave: |u| = 1 kills the nonlinearity, kinetic phase is exact
  const double k = 3.0;
  GridFunction pw = GridFunction::sample(g, [&](double x) {
    return std::polar(1.0, k * x);
  });
  GridFunction pw2 = strang_step(pw, cfg);
  for (std::size_t i = 0; i < g.n; ++i) {
    Complex e = std::polar(1.0, k * g.x(i) - k * k * cfg.dt);
    REQUIRE(std::abs(pw2.values[i] - e) < 1e-12);
  }

  Grid f = Grid::free_symmetric(10.0, 64);
  REQUIRE_THROWS_AS(strang_step(GridFunction(f, std::vector<Complex>(64, 1.0)),
                                cfg),
                    DomainError);
}

TEST_CASE("discrete L2 norm is conserved per step") {
  Grid g = Grid::periodic(-16.0, 32.0, 512);
  GridFunction u = smooth_vacuum_free(g);
  EvolutionConfig cfg;
  cfg.p = Params(1.0, 0.0);
  cfg.dt = 1e-3;
  cfg.t_end = 1.0;
  double n0 = l2_norm(u);
  for (int s = 0; s < 50; ++s) {
    u = strang_step(u, cfg);
    REQUIRE(std::abs(l2_norm(u) - n0) < 1e-12);
  }
}

TEST_CASE("black soliton is stationary under the flow") {
  Params p(1.0, 0.0);
  Grid g = Grid::dirichlet_odd(20.0, 512);
  GridFunction u0 = black_soliton(p, g).as_grid_function();
  EvolutionConfig cfg;
  cfg.p = p;
  cfg.dt = 5e-4;
  cfg.t_end = 5.0;
  cfg.record_every = 1000;

  Trajectory t = evolve(u0, cfg);
  REQUIRE(t.mass_defect_series.back() < 1e-4);
  REQUIRE(t.energy_drift() < 1e-4);

  // H2 monitor stays bounded along the run
  double h2_0 = t.h2_series.front();
  for (double h2 : t.h2_series) REQUIRE(h2 < 2.0 * h2_0);

  // stationary wave: best-fit rotation rate is zero
  WaveProfile w = black_soliton(p, g);
  REQUIRE(std::abs(frequency_probe(t, w)) < 1e-3);

  // regularized run conserves the regularized energy
  EvolutionConfig reg = cfg;
  reg.nonlinearity = Nonlinearity::LogRegularized;
  reg.eps = 1e-8;
  Trajectory tr = evolve(u0, reg);
  REQUIRE(tr.energy_drift() < 1e-6);
  REQUIRE(tr.mass_defect_series.back() < 1e-4);
}

TEST_CASE("regularized flows converge monotonically as eps -> 0") {
  Params p(1.0, 0.0);
  Grid g = Grid::dirichlet_odd(20.0, 512);
  GridFunction u0 = black_soliton(p, g).as_grid_function();
  EvolutionConfig cfg;
  cfg.p = p;
  cfg.dt = 5e-4;
  cfg.t_end = 1.0;
  cfg.record_every = 2000;
  GridFunction ref = evolve(u0, cfg).final;

  double prev = 1e300;
  for (double eps : {1e-6, 1e-8, 1e-10}) {
    EvolutionConfig reg = cfg;
    reg.nonlinearity = Nonlinearity::LogRegularized;
    reg.eps = eps;
    double d = l2_distance(evolve(u0, reg).final, ref);
    REQUIRE(d < prev);
    prev = d;
  }
}

TEST_CASE("pair box construction") {
  Params p(1.0, 0.0);
  Grid g = Grid::free_symmetric(40.0, 2049);
  WaveProfile w = black_soliton(p, g);

  GridFunction box = make_pair_box(w, 40.0);
  REQUIRE(box.grid.bc == Bc::Periodic);
  REQUIRE_THAT(box.grid.length(), Catch::Matchers::WithinAbs(80.0, 1e-12));
  REQUIRE(std::abs(std::abs(box.values.front()) - 1.0) < 1e-8);
  REQUIRE(std::abs(std::abs(box.values.back()) - 1.0) < 1e-8);

  REQUIRE_THROWS_AS(make_pair_box(w, 2.0), GluingError);

  // constant profiles periodize trivially
  WaveProfile cst;
  cst.grid = Grid::free_symmetric(10.0, 64);
  cst.p = Params(1.0, 0.0);
  cst.phi.assign(64, std::polar(1.0, 0.4));
  cst.rho.assign(64, 1.0);
  cst.theta.assign(64, 0.4);
  cst.eta.assign(64, 0.0);
  GridFunction cbox = make_pair_box(cst, 5.0);
  for (const auto& z : cbox.values)
    REQUIRE(std::abs(z - std::polar(1.0, 0.4)) < 1e-14);
}

TEST_CASE("traveling wave translates at speed c on the pair box") {
  Params p(1.0, 1.0);
  WaveProfile w = traveling_wave(p, Grid::free_symmetric(30.0, 1537));
  GridFunction u0 = make_pair_box(w, 30.0);

  EvolutionConfig cfg;
  cfg.p = p;
  cfg.dt = 1e-3;
  cfg.t_end = 2.0;
  cfg.record_every = 500;
  Trajectory t = evolve(u0, cfg);

  GridFunction oracle = make_pair_box(w, 30.0, 2.0);
  REQUIRE(l2_distance(t.final, oracle) < 1e-3);
  REQUIRE(t.energy_drift() < 1e-6);

  // moving wave: rotation rate against the translating reference is zero
  REQUIRE(std::abs(frequency_probe(t, w)) < 1e-2);
}

TEST_CASE("frequency probe recovers a synthetic rotation") {
  Grid g = Grid::periodic(-16.0, 32.0, 256);
  GridFunction u0 = smooth_vacuum_free(g);
  const double omega = 0.37;
  Trajectory synth;
  std::vector<GridFunction> refs;
  for (int k = 0; k <= 20; ++k) {
    double t = 0.05 * double(k);
    std::vector<Complex> v = u0.values;
    for (auto& z : v) z *= std::polar(1.0, omega * t);
    synth.times.push_back(t);
    synth.snapshots.push_back(GridFunction(g, std::move(v)));
    refs.push_back(u0);
  }
  REQUIRE_THAT(frequency_probe(synth, refs),
               Catch::Matchers::WithinAbs(omega, 1e-6));
}

TEST_CASE("nearby data stay within the Gronwall envelope") {
  Grid g = Grid::periodic(-16.0, 32.0, 512);
  GridFunction a = smooth_vacuum_free(g);
  const double delta = 1e-6;
  GridFunction b = GridFunction::sample(g, [&](double x) {
    Complex base(1.0 + 0.3 * std::exp(-x * x / 4.0),
                 0.2 * std::exp(-(x - 2.0) * (x - 2.0) / 3.0));
    return base + delta * std::exp(-x * x);
  });
  double d0 = l2_distance(a, b);
  REQUIRE(d0 > 0.0);

  EvolutionConfig cfg;
  cfg.p = Params(1.0, 0.0);
  cfg.dt = 1e-3;
  cfg.t_end = 1.0;
  cfg.record_every = 2000;
  GridFunction fa = evolve(a, cfg).final;
  GridFunction fb = evolve(b, cfg).final;
  double dt_end = l2_distance(fa, fb);
  REQUIRE(dt_end <= d0 * std::exp(2.0 * cfg.p.lambda * cfg.t_end) * 1.05);
}

TEST_CASE("evolve rejects free boundaries") {
  Grid f = Grid::free_symmetric(10.0, 64);
  EvolutionConfig cfg;
  cfg.p = Params(1.0, 0.0);
  cfg.dt = 1e-3;
  cfg.t_end = 0.1;
  REQUIRE_THROWS_AS(evolve(GridFunction(f, std::vector<Complex>(64, 1.0)), cfg),
                    DomainError);
}
