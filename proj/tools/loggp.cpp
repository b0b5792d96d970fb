// Command-line laboratory for logarithmic Gross-Pitaevskii waves:
//   profile  compute a solitary/traveling wave and its diagnostics
//   evolve   integrate the PDE from a config file
//   sweep    tabulate wave characteristics across velocities
//   verify   run the built-in verification suite
//
// Exit codes: 0 success, 1 verification/runtime failure, 2 domain or
// threshold rejection, 3 malformed configuration.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>

#include <CLI11.hpp>

#include "loggp/checks.hpp"
#include "loggp/io.hpp"
#include "loggp/loggp.hpp"

namespace {

using namespace loggp;

/// Relative output paths can be redirected with LOGGP_OUTPUT_DIR.
std::string out_path(const std::string& p) {
  const char* dir = std::getenv("LOGGP_OUTPUT_DIR");
  if (!dir || !*dir || std::filesystem::path(p).is_absolute()) return p;
  std::filesystem::create_directories(dir);
  return (std::filesystem::path(dir) / p).string();
}

int cmd_profile(double lambda, double c, double length, std::size_t n,
                double theta0, const std::string& csv,
                const std::string& json_path) {
  Params p(lambda, c);
  WaveProfile w = traveling_wave(p, Grid::free_symmetric(length, n), theta0);
  write_csv(w, out_path(csv));

  nlohmann::json j;
  j["lambda"] = lambda;
  j["c"] = c;
  j["theta0"] = theta0;
  if (w.y0) j["y0"] = *w.y0;
  j["min_modulus"] = *std::min_element(w.rho.begin(), w.rho.end());
  j["residual"] = stationary_residual(w);
  j["winding"] = w.winding;
  j["omega"] = w.omega;
  j["energy"] = energy_report(w.as_grid_function(), p);
  std::ofstream out(out_path(json_path));
  out << j.dump(2) << "\n";
  std::cout << "profile written: " << out_path(csv) << ", "
            << out_path(json_path) << "\n";
  return 0;
}

GridFunction initial_data(const RunConfig& cfg, const Grid& g) {
  Params p(cfg.lambda, cfg.c);
  if (cfg.initial == "black_soliton") {
    return black_soliton(p, g, cfg.theta0).as_grid_function();
  }
  if (cfg.initial == "traveling_pair" || cfg.initial == "gp_dark_pair") {
    if (g.bc != Bc::Periodic)
      throw ConfigError("initial type '" + cfg.initial +
                        "' requires kind = periodic");
    if (!(cfg.separation > 0.0))
      throw ConfigError("missing or invalid 'separation' (must be > 0)");
    std::size_t half = g.n / 2 + 1;
    Grid pg = Grid::free_symmetric(cfg.separation, half);
    WaveProfile w = cfg.initial == "gp_dark_pair"
                        ? gp_dark_soliton(cfg.c, pg)
                        : traveling_wave(p, pg, cfg.theta0);
    return make_pair_box(w, cfg.separation);
  }
  if (cfg.initial == "constant") {
    return GridFunction(g, std::vector<Complex>(g.n, Complex(cfg.amplitude)));
  }
  if (cfg.initial == "bump") {
    if (!(cfg.width > 0.0))
      throw ConfigError("invalid 'width' (must be > 0)");
    return GridFunction::sample(g, [&](double x) {
      double d = (x - cfg.center) / cfg.width;
      return 1.0 + cfg.amplitude * std::exp(-d * d);
    });
  }
  throw ConfigError("unknown initial type '" + cfg.initial + "'");
}

int cmd_evolve(const std::string& config_path) {
  RunConfig cfg = parse_run_config(config_path);
  Grid g = cfg.grid_kind == "periodic"
               ? Grid::periodic(cfg.has_x0 ? cfg.x0 : -0.5 * cfg.length,
                                cfg.length, cfg.n)
           : cfg.grid_kind == "dirichlet_odd"
               ? Grid::dirichlet_odd(cfg.length, cfg.n)
               : Grid::free_symmetric(cfg.length, cfg.n);

  GridFunction u0 = initial_data(cfg, g);
  EvolutionConfig ec;
  ec.p = Params(cfg.lambda, cfg.c);
  ec.dt = cfg.dt;
  ec.t_end = cfg.t_end;
  ec.eps = cfg.eps;
  ec.record_every = cfg.record_every;
  ec.nonlinearity = cfg.nonlinearity == "log" ? Nonlinearity::Log
                    : cfg.nonlinearity == "log_regularized"
                        ? Nonlinearity::LogRegularized
                        : Nonlinearity::CubicGP;

  Trajectory traj = cfg.scheme == "galerkin"
                        ? galerkin_evolve(u0, cfg.m, ec)
                        : evolve(u0, ec);

  nlohmann::json j = trajectory_json(traj, ec.nonlinearity ==
                                               Nonlinearity::CubicGP);
  std::ofstream out(out_path(cfg.trajectory_path));
  out << j.dump(2) << "\n";
  if (!cfg.snapshots_prefix.empty()) {
    for (std::size_t k = 0; k < traj.snapshots.size(); ++k)
      write_csv(traj.snapshots[k], out_path(cfg.snapshots_prefix +
                                            std::to_string(k) + ".csv"));
  }
  std::cout << "trajectory written: " << out_path(cfg.trajectory_path)
            << " (" << traj.times.size() << " records, energy drift "
            << traj.energy_drift(ec.nonlinearity == Nonlinearity::CubicGP)
            << ")\n";
  return 0;
}

int cmd_sweep(double lambda, double c_min, double c_max, std::size_t steps,
              std::size_t n, double length, const std::string& csv) {
  if (steps < 2) throw ConfigError("'steps' must be >= 2");
  if (!(c_min < c_max)) throw ConfigError("need c_min < c_max");

  struct Row {
    double c;
    std::string status;  // ok | black | threshold
    double y0 = 0, y1 = 0, y2 = 0, min_mod = 0, winding = 0, energy = 0;
  };
  Grid g = Grid::free_symmetric(length, n);
  auto compute = [&](double c) {
    Row r;
    r.c = c;
    Params p(lambda, c);
    if (!p.admissible_velocity()) {
      r.status = "threshold";
      return r;
    }
    if (c == 0.0) {
      // the solitary branch: modulus reaches 0, so y0 = 0 marks the row
      r.status = "black";
      WaveProfile w = black_soliton(p, g);
      r.min_mod = *std::min_element(w.rho.begin(), w.rho.end());
      r.winding = w.winding;
      r.energy = energy_report(w.as_grid_function(), p).total_loggp;
      return r;
    }
    r.status = "ok";
    CriticalPoints cp = find_critical_points(p);
    r.y0 = cp.y0;
    r.y1 = cp.y1;
    r.y2 = cp.y2;
    WaveProfile w = traveling_wave(p, g);
    r.min_mod = *std::min_element(w.rho.begin(), w.rho.end());
    r.winding = w.winding;
    r.energy = energy_report(w.as_grid_function(), p).total_loggp;
    return r;
  };

  std::vector<std::future<Row>> jobs;
  for (std::size_t i = 0; i < steps; ++i) {
    double c = c_min + (c_max - c_min) * double(i) / double(steps - 1);
    jobs.push_back(std::async(std::launch::async, compute, c));
  }
  std::ofstream out(out_path(csv));
  out << "c,status,y0,y1,y2,min_modulus,winding,total_loggp\n";
  for (auto& job : jobs) {
    Row r = job.get();
    out << detail::fmt17(r.c) << ',' << r.status << ',';
    if (r.status == "threshold") {
      out << ",,,,,\n";
      continue;
    }
    out << detail::fmt17(r.y0) << ',' << detail::fmt17(r.y1) << ','
        << detail::fmt17(r.y2) << ',' << detail::fmt17(r.min_mod) << ','
        << detail::fmt17(r.winding) << ',' << detail::fmt17(r.energy) << '\n';
  }
  std::cout << "sweep written: " << out_path(csv) << " (" << steps
            << " rows)\n";
  return 0;
}

int cmd_verify(bool quick, unsigned seed, const std::string& mutate,
               const std::string& json_path) {
  if (!mutate.empty()) {
    if (mutate == "fc-sign") mutation::flip_fc_sign = true;
    else throw ConfigError("unknown mutation '" + mutate + "'");
  }
  CheckOptions o;
  o.quick = quick;
  o.seed = seed;
  VerificationReport rep = run_verification(o);
  for (const auto& c : rep.checks)
    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  metric="
              << c.metric << " tol=" << c.tolerance << "\n";
  std::cout << (rep.all_pass() ? "all checks passed" : "FAILURES present")
            << " (" << rep.checks.size() << " checks)\n";
  if (!json_path.empty()) {
    std::ofstream out(out_path(json_path));
    out << report_json(rep).dump(2) << "\n";
  }
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for the logarithmic Gross-Pitaevskii "
               "equation"};
  app.require_subcommand(1);

  double lambda = 1.0, c = 0.0, length = 40.0, theta0 = 0.0;
  std::size_t n = 4097;
  std::string csv = "profile.csv", jsonp = "profile.json";
  auto* prof = app.add_subcommand("profile", "compute a wave profile");
  prof->add_option("--lambda", lambda, "nonlinearity strength (> 0)");
  prof->add_option("--c", c, "wave velocity");
  prof->add_option("--length", length, "domain length");
  prof->add_option("--n", n, "sample count");
  prof->add_option("--theta0", theta0, "phase at x = 0");
  prof->add_option("--output", csv, "profile CSV path");
  prof->add_option("--json", jsonp, "summary JSON path");

  std::string config_path;
  auto* evo = app.add_subcommand("evolve", "integrate the PDE in time");
  evo->add_option("config", config_path, "run configuration file")
      ->required();

  double c_min = 0.1, c_max = 1.3;
  std::size_t steps = 13, sweep_n = 1025;
  double sweep_len = 40.0;
  std::string sweep_csv = "sweep.csv";
  auto* sw = app.add_subcommand("sweep", "tabulate waves across velocities");
  sw->add_option("--lambda", lambda, "nonlinearity strength (> 0)");
  sw->add_option("--c-min", c_min, "lowest velocity");
  sw->add_option("--c-max", c_max, "highest velocity");
  sw->add_option("--steps", steps, "number of velocities");
  sw->add_option("--n", sweep_n, "sample count per profile");
  sw->add_option("--length", sweep_len, "domain length");
  sw->add_option("--output", sweep_csv, "table CSV path");

  bool quick = false;
  unsigned seed = 12345;
  std::string mutate, report_path;
  auto* ver = app.add_subcommand("verify", "run the verification suite");
  ver->add_flag("--quick", quick, "reduced resolutions");
  ver->add_option("--seed", seed, "RNG seed for fuzzed checks");
  ver->add_option("--mutate", mutate,
                  "fault injection (fc-sign), for testing the suite itself");
  ver->add_option("--output", report_path, "report JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    if (prof->parsed())
      return cmd_profile(lambda, c, length, n, theta0, csv, jsonp);
    if (evo->parsed()) return cmd_evolve(config_path);
    if (sw->parsed())
      return cmd_sweep(lambda, c_min, c_max, steps, sweep_n, sweep_len,
                       sweep_csv);
    if (ver->parsed()) return cmd_verify(quick, seed, mutate, report_path);
  } catch (const loggp::VelocityAboveThreshold& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return 2;
  } catch (const loggp::ParseError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 3;
  } catch (const loggp::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 3;
  } catch (const loggp::DomainError& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 3;
}
