#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "loggp/io.hpp"
#include "schema_check.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path kWork = fs::temp_directory_path() / "loggp_cli_test";

std::string q(const fs::path& p) { return "'" + p.string() + "'"; }

int run(const std::string& args, const std::string& tag,
        const std::string& env = "") {
  fs::create_directories(kWork);
  std::string cmd = env + (env.empty() ? "" : " ") +
                    std::string(LOGGP_CLI_PATH) + " " + args + " > " +
                    q(kWork / (tag + ".out")) + " 2> " +
                    q(kWork / (tag + ".err"));
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json load_json(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  return nlohmann::json::parse(in);
}

std::string schema(const std::string& name) {
  return std::string(LOGGP_SCHEMA_DIR) + "/" + name;
}

std::vector<std::vector<std::string>> read_rows(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("profile subcommand writes the black soliton") {
  fs::path csv = kWork / "black.csv";
  fs::path json = kWork / "black.json";
  int rc = run("profile --lambda 1 --c 0 --length 40 --n 4097 --output " +
                   q(csv) + " --json " + q(json),
               "prof_black");
  REQUIRE(rc == 0);

  nlohmann::json j = load_json(json);
  REQUIRE(schema_check::validate_against_file(
              j, schema("profile.schema.json")) == "");
  REQUIRE(j["residual"].get<double>() < 1e-6);
  REQUIRE(j["omega"].get<double>() == 0.0);
  REQUIRE(j["min_modulus"].get<double>() < 1e-3);
  REQUIRE_FALSE(j.contains("y0"));

  // the CSV round-trips through the reader
  loggp::GridFunction u = loggp::read_csv(csv.string());
  REQUIRE(u.size() == 4097);
}

TEST_CASE("profile subcommand respects the velocity threshold") {
  REQUIRE(run("profile --lambda 1 --c 1.5 --n 257 --output " +
                  q(kWork / "t1.csv") + " --json " + q(kWork / "t1.json"),
              "prof_thresh") == 2);
  REQUIRE(run("profile --lambda 2 --c 1.5 --n 257 --output " +
                  q(kWork / "t2.csv") + " --json " + q(kWork / "t2.json"),
              "prof_ok") == 0);
  nlohmann::json j = load_json(kWork / "t2.json");
  REQUIRE(j["y0"].get<double>() > 0.0);
  REQUIRE(j["y0"].get<double>() < 1.0);
}

TEST_CASE("evolve subcommand keeps the black soliton stationary") {
  fs::path cfg = kWork / "black_run.ini";
  fs::path traj = kWork / "black_traj.json";
  {
    std::ofstream out(cfg);
    out << "[params]\nlambda = 1\nc = 0\n"
        << "[grid]\nkind = dirichlet_odd\nlength = 20\nn = 512\n"
        << "[initial]\ntype = black_soliton\n"
        << "[evolution]\ndt = 5e-4\nt_end = 1\nrecord_every = 500\n"
        << "[output]\ntrajectory = " << traj.string() << "\n";
  }
  REQUIRE(run("evolve " + q(cfg), "evolve_black") == 0);
  nlohmann::json j = load_json(traj);
  REQUIRE(schema_check::validate_against_file(
              j, schema("trajectory.schema.json")) == "");
  std::vector<double> defects = j["mass_defect"].get<std::vector<double>>();
  REQUIRE(defects.back() < 1e-4);
  REQUIRE(j["energy_drift"].get<double>() < 1e-4);
}

TEST_CASE("evolve subcommand reproduces the cubic GP dark soliton") {
  fs::path cfg = kWork / "gp_run.ini";
  fs::path traj = kWork / "gp_traj.json";
  {
    std::ofstream out(cfg);
    out << "[params]\nlambda = 1\nc = 0\n"
        << "[grid]\nkind = periodic\nlength = 80\nn = 2048\nx0 = -40\n"
        << "[initial]\ntype = gp_dark_pair\nseparation = 40\n"
        << "[evolution]\nnonlinearity = cubic_gp\ndt = 1e-3\nt_end = 1\n"
        << "record_every = 250\n"
        << "[output]\ntrajectory = " << traj.string() << "\n";
  }
  REQUIRE(run("evolve " + q(cfg), "evolve_gp") == 0);
  nlohmann::json j = load_json(traj);
  // stationary (c = 0) exact solution: deviation from the datum is the
  // translate error
  std::vector<double> defects = j["mass_defect"].get<std::vector<double>>();
  REQUIRE(defects.back() < 1e-4);
}

TEST_CASE("evolve subcommand rejects configs with missing lambda") {
  fs::path cfg = kWork / "nolambda.ini";
  {
    std::ofstream out(cfg);
    out << "[params]\nc = 0\n"
        << "[grid]\nkind = periodic\nlength = 20\nn = 64\n"
        << "[initial]\ntype = constant\n"
        << "[evolution]\ndt = 1e-3\nt_end = 1\n";
  }
  REQUIRE(run("evolve " + q(cfg), "evolve_nolambda") == 3);
  REQUIRE(slurp(kWork / "evolve_nolambda.err").find("lambda") !=
          std::string::npos);
}

TEST_CASE("sweep subcommand tabulates the velocity range") {
  fs::path csv = kWork / "sweep.csv";
  int rc = run("sweep --lambda 1 --c-min 0.1 --c-max 1.4 --steps 14 --n 257 "
               "--length 40 --output " +
                   q(csv),
               "sweep_main");
  REQUIRE(rc == 0);
  auto rows = read_rows(csv);
  REQUIRE(rows.size() == 15);  // header + 14 rows
  for (std::size_t i = 1; i < rows.size(); ++i) {
    REQUIRE(rows[i][1] == "ok");
    double y0 = std::stod(rows[i][2]);
    REQUIRE(y0 > 0.0);
    REQUIRE(y0 < 1.0);
  }
}

TEST_CASE("sweep subcommand marks rows above the threshold") {
  fs::path csv = kWork / "sweep_thresh.csv";
  REQUIRE(run("sweep --lambda 1 --c-min 1.2 --c-max 1.6 --steps 3 --n 257 "
              "--length 40 --output " +
                  q(csv),
              "sweep_thresh") == 0);
  auto rows = read_rows(csv);
  REQUIRE(rows.size() == 4);
  REQUIRE(rows[1][1] == "ok");    // c = 1.2
  REQUIRE(rows[2][1] == "ok");    // c = 1.4
  REQUIRE(rows[3][1] == "threshold");  // c = 1.6 > sqrt 2
}

TEST_CASE("sweep subcommand dispatches c = 0 to the solitary branch") {
  fs::path csv = kWork / "sweep_black.csv";
  REQUIRE(run("sweep --lambda 1 --c-min 0 --c-max 0.5 --steps 2 --n 257 "
              "--length 40 --output " +
                  q(csv),
              "sweep_black") == 0);
  auto rows = read_rows(csv);
  REQUIRE(rows.size() == 3);
  REQUIRE(rows[1][1] == "black");
  REQUIRE(std::stod(rows[1][2]) == 0.0);      // y0 marker
  REQUIRE(std::stod(rows[1][5]) < 1e-3);      // min modulus ~ 0
  REQUIRE(std::stod(rows[1][7]) > 0.0);       // energy
  REQUIRE(rows[2][1] == "ok");
}

TEST_CASE("verify is deterministic and survives fault injection") {
  fs::path r1 = kWork / "rep1.json";
  fs::path r2 = kWork / "rep2.json";
  REQUIRE(run("verify --quick --seed 7 --output " + q(r1), "verify1") == 0);
  REQUIRE(run("verify --quick --seed 7 --output " + q(r2), "verify2") == 0);
  REQUIRE(slurp(r1) == slurp(r2));
  REQUIRE(!slurp(r1).empty());

  nlohmann::json j = load_json(r1);
  REQUIRE(schema_check::validate_against_file(
              j, schema("report.schema.json")) == "");
  REQUIRE(j["all_pass"].get<bool>());

  // an injected sign error in f_c must fail the eta-identity and residual
  // checks and flip the exit code
  fs::path rm = kWork / "rep_mut.json";
  REQUIRE(run("verify --quick --mutate fc-sign --output " + q(rm),
              "verify_mut") == 1);
  std::string out = slurp(kWork / "verify_mut.out");
  REQUIRE(out.find("FAIL") != std::string::npos);
}

TEST_CASE("relative outputs honor the output directory override") {
  fs::path dir = kWork / "redirect";
  fs::remove_all(dir);
  int rc = run("profile --lambda 1 --c 0.5 --length 40 --n 257 "
               "--output rel.csv --json rel.json",
               "prof_env", "LOGGP_OUTPUT_DIR=" + q(dir));
  REQUIRE(rc == 0);
  REQUIRE(fs::exists(dir / "rel.csv"));
  REQUIRE(fs::exists(dir / "rel.json"));
}

TEST_CASE("usage errors exit with the config code") {
  REQUIRE(run("sweep --lambda 1 --c-min 1 --c-max 0.5 --steps 5",
              "sweep_bad") == 3);
  REQUIRE(run("no_such_command", "bad_cmd") == 3);
}
