#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "loggp/checks.hpp"
#include "loggp/energy.hpp"
#include "loggp/evolution.hpp"
#include "loggp/grid.hpp"
#include "loggp/profiles.hpp"

namespace loggp {

namespace detail {

inline std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string bc_name(Bc bc) {
  switch (bc) {
    case Bc::Periodic: return "Periodic";
    case Bc::DirichletOdd: return "DirichletOdd";
    case Bc::Free: return "Free";
  }
  return "Free";
}

inline Bc bc_from_name(const std::string& s) {
  if (s == "Periodic") return Bc::Periodic;
  if (s == "DirichletOdd") return Bc::DirichletOdd;
  if (s == "Free") return Bc::Free;
  throw ParseError("unknown boundary condition '" + s + "'");
}

inline double parse_double(const std::string& cell, std::size_t line) {
  const char* s = cell.c_str();
  char* end = nullptr;
  double v = std::strtod(s, &end);
  while (end && (*end == ' ' || *end == '\t' || *end == '\r')) ++end;
  if (end == s || (end && *end != '\0'))
    throw ParseError("line " + std::to_string(line) + ": non-numeric cell '" +
                     cell + "'");
  return v;
}

inline std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  return cells;
}

}  // namespace detail

/// Column layout `x,re,im`, full double round-trip precision, preceded by a
/// grid metadata comment so that read(write(f)) reproduces f exactly.
inline void write_csv(const GridFunction& gf, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  out << "# grid x0=" << detail::fmt17(gf.grid.x0)
      << " dx=" << detail::fmt17(gf.grid.dx) << " n=" << gf.grid.n
      << " bc=" << detail::bc_name(gf.grid.bc) << "\n";
  out << "x,re,im\n";
  for (std::size_t i = 0; i < gf.size(); ++i)
    out << detail::fmt17(gf.grid.x(i)) << ','
        << detail::fmt17(gf.values[i].real()) << ','
        << detail::fmt17(gf.values[i].imag()) << '\n';
}

/// Profiles add modulus and phase columns: `x,re,im,rho,theta`.
inline void write_csv(const WaveProfile& w, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  out << "# grid x0=" << detail::fmt17(w.grid.x0)
      << " dx=" << detail::fmt17(w.grid.dx) << " n=" << w.grid.n
      << " bc=" << detail::bc_name(w.grid.bc) << "\n";
  out << "x,re,im,rho,theta\n";
  for (std::size_t i = 0; i < w.grid.n; ++i)
    out << detail::fmt17(w.grid.x(i)) << ',' << detail::fmt17(w.phi[i].real())
        << ',' << detail::fmt17(w.phi[i].imag()) << ','
        << detail::fmt17(w.rho[i]) << ',' << detail::fmt17(w.theta[i])
        << '\n';
}

/// Reads the `x,re,im` layout (extra columns ignored). Malformed rows raise
/// ParseError naming the line.
inline GridFunction read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::string line;
  std::size_t lineno = 0;
  bool have_meta = false;
  double x0 = 0.0, dx = 1.0;
  std::size_t n_meta = 0;
  Bc bc = Bc::Free;

  std::vector<double> xs;
  std::vector<Complex> vs;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::stringstream ss(line.substr(1));
      std::string tok;
      ss >> tok;
      if (tok == "grid") {
        while (ss >> tok) {
          auto eq = tok.find('=');
          if (eq == std::string::npos) continue;
          std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
          if (key == "x0") x0 = detail::parse_double(val, lineno);
          else if (key == "dx") dx = detail::parse_double(val, lineno);
          else if (key == "n") n_meta = std::size_t(std::stoull(val));
          else if (key == "bc") bc = detail::bc_from_name(val);
        }
        have_meta = true;
      }
      continue;
    }
    if (line.rfind("x,", 0) == 0) continue;  // header row
    auto cells = detail::split_csv_row(line);
    if (cells.size() < 3)
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected at least 3 columns");
    xs.push_back(detail::parse_double(cells[0], lineno));
    vs.push_back(Complex(detail::parse_double(cells[1], lineno),
                         detail::parse_double(cells[2], lineno)));
  }
  if (vs.empty()) throw ParseError("'" + path + "': no samples");
  if (!have_meta) {
    x0 = xs.front();
    dx = xs.size() > 1 ? xs[1] - xs[0] : 1.0;
  } else if (n_meta != vs.size()) {
    throw ParseError("'" + path + "': metadata n=" + std::to_string(n_meta) +
                     " does not match " + std::to_string(vs.size()) +
                     " data rows");
  }
  Grid g(x0, dx, vs.size(), bc);
  return GridFunction(g, std::move(vs));
}

inline void to_json(nlohmann::json& j, const EnergyReport& r) {
  j = {{"kinetic", r.kinetic},     {"pot_log", r.pot_log},
       {"pot_gl", r.pot_gl},       {"e_pot_hat", r.e_pot_hat},
       {"total_loggp", r.total_loggp}, {"total_gp", r.total_gp}};
}

inline void to_json(nlohmann::json& j, const CheckResult& c) {
  j = {{"name", c.name},
       {"claim", c.claim},
       {"metric", c.metric},
       {"tolerance", c.tolerance},
       {"pass", c.pass}};
}

inline nlohmann::json report_json(const VerificationReport& rep) {
  nlohmann::json j;
  j["checks"] = rep.checks;
  j["all_pass"] = rep.all_pass();
  j["environment"] = {{"resolution", rep.resolution},
                      {"dt", rep.dt},
                      {"lambda", rep.lambda},
                      {"seed", rep.seed},
                      {"quick", rep.quick}};
  return j;
}

inline nlohmann::json trajectory_json(const Trajectory& traj,
                                      bool cubic_gp = false) {
  nlohmann::json j;
  j["times"] = traj.times;
  j["energy"] = traj.energy_series;
  j["mass_defect"] = traj.mass_defect_series;
  j["h2_norm"] = traj.h2_series;
  j["energy_drift"] = traj.energy_drift(cubic_gp);
  return j;
}

/// Structured run configuration, `key = value` with [sections]. Unknown keys
/// are rejected; physical values are validated with the key named in the
/// error.
struct RunConfig {
  // [params]
  double lambda = 0.0;
  double c = 0.0;
  // [grid]
  std::string grid_kind;  // periodic | dirichlet_odd | free
  double length = 0.0;
  std::size_t n = 0;
  double x0 = 0.0;
  bool has_x0 = false;
  // [initial]
  std::string initial;  // black_soliton | traveling_pair | gp_dark_pair |
                        // constant | bump
  double theta0 = 0.0;
  double separation = 0.0;
  double amplitude = 0.5;
  double width = 1.0;
  double center = 0.0;
  // [evolution]
  std::string scheme = "splitstep";  // splitstep | galerkin
  std::string nonlinearity = "log";  // log | log_regularized | cubic_gp
  double dt = 0.0;
  double t_end = 0.0;
  double eps = 0.0;
  std::size_t record_every = 100;
  std::size_t m = 32;
  // [output]
  std::string trajectory_path = "trajectory.json";
  std::string snapshots_prefix;  // empty: no snapshot CSVs
};

inline RunConfig parse_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config '" + path + "'");

  static const std::map<std::string, std::set<std::string>> known = {
      {"params", {"lambda", "c"}},
      {"grid", {"kind", "length", "n", "x0"}},
      {"initial",
       {"type", "theta0", "separation", "amplitude", "width", "center"}},
      {"evolution",
       {"scheme", "nonlinearity", "dt", "t_end", "eps", "record_every", "m"}},
      {"output", {"trajectory", "snapshots_prefix"}}};

  RunConfig cfg;
  std::string line, section;
  std::size_t lineno = 0;
  auto trim = [](std::string s) {
    auto a = s.find_first_not_of(" \t\r");
    auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ParseError("line " + std::to_string(lineno) +
                         ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (!known.count(section))
        throw ConfigError("unknown section [" + section + "]");
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (section.empty())
      throw ConfigError("key '" + key + "' outside any section");
    if (!known.at(section).count(key))
      throw ConfigError("unknown key '" + key + "' in section [" + section +
                        "]");
    auto num = [&]() { return detail::parse_double(val, lineno); };
    if (section == "params") {
      if (key == "lambda") cfg.lambda = num();
      else cfg.c = num();
    } else if (section == "grid") {
      if (key == "kind") cfg.grid_kind = val;
      else if (key == "length") cfg.length = num();
      else if (key == "n") cfg.n = std::size_t(num());
      else { cfg.x0 = num(); cfg.has_x0 = true; }
    } else if (section == "initial") {
      if (key == "type") cfg.initial = val;
      else if (key == "theta0") cfg.theta0 = num();
      else if (key == "separation") cfg.separation = num();
      else if (key == "amplitude") cfg.amplitude = num();
      else if (key == "width") cfg.width = num();
      else cfg.center = num();
    } else if (section == "evolution") {
      if (key == "scheme") cfg.scheme = val;
      else if (key == "nonlinearity") cfg.nonlinearity = val;
      else if (key == "dt") cfg.dt = num();
      else if (key == "t_end") cfg.t_end = num();
      else if (key == "eps") cfg.eps = num();
      else if (key == "record_every") cfg.record_every = std::size_t(num());
      else cfg.m = std::size_t(num());
    } else {
      if (key == "trajectory") cfg.trajectory_path = val;
      else cfg.snapshots_prefix = val;
    }
  }

  if (!(cfg.lambda > 0.0)) throw ConfigError("missing or invalid 'lambda' (must be > 0)");
  if (cfg.grid_kind != "periodic" && cfg.grid_kind != "dirichlet_odd" &&
      cfg.grid_kind != "free")
    throw ConfigError("invalid 'kind' in [grid]: expected periodic, dirichlet_odd or free");
  if (!(cfg.length > 0.0)) throw ConfigError("missing or invalid 'length' (must be > 0)");
  if (cfg.n < 8) throw ConfigError("missing or invalid 'n' (must be >= 8)");
  if (cfg.initial.empty()) throw ConfigError("missing 'type' in [initial]");
  if (!(cfg.dt > 0.0)) throw ConfigError("missing or invalid 'dt' (must be > 0)");
  if (!(cfg.t_end >= cfg.dt)) throw ConfigError("invalid 't_end' (must be >= dt)");
  if (cfg.scheme != "splitstep" && cfg.scheme != "galerkin")
    throw ConfigError("invalid 'scheme': expected splitstep or galerkin");
  if (cfg.nonlinearity != "log" && cfg.nonlinearity != "log_regularized" &&
      cfg.nonlinearity != "cubic_gp")
    throw ConfigError("invalid 'nonlinearity'");
  if (cfg.nonlinearity == "log_regularized" && !(cfg.eps > 0.0))
    throw ConfigError("'eps' must be > 0 for log_regularized");
  return cfg;
}

}  // namespace loggp
