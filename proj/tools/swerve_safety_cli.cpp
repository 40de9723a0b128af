// Command-line front end: distance queries, swerve trajectory export,
// parameter sweeps, dynamic-model validation, and simulation-oracle batches.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain
// error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "swervesafe/config.hpp"
#include "swervesafe/dynamic_single_track.hpp"
#include "swervesafe/kinematic_swerve.hpp"
#include "swervesafe/rotation_geometry.hpp"
#include "swervesafe/safety_sim.hpp"
#include "swervesafe/scenario_distances.hpp"
#include "swervesafe/sweep.hpp"
#include "swervesafe/universal_distance.hpp"

using nlohmann::json;
using namespace swervesafe;

namespace {

Config load_effective_config(const std::string& path) {
  if (!path.empty()) return load_config_file(path);
  if (const char* env = std::getenv("SWERVE_SAFETY_CONFIG");
      env && *env != '\0') {
    return load_config_file(env);
  }
  return default_config();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw ConfigError("cannot open output file: " + out_path);
  f << text;
}

ScenarioResult eval_scenario(const std::string& name, double v_r, double v_f,
                             double rho, const Config& c,
                             const ScenarioOptions& opt) {
  const VehicleGeometry& g = c.geometry;
  const SafetyParams& p = c.safety;
  if (name == "bb") return d_brake_for_brake(v_r, v_f, rho, g, g, p, opt);
  if (name == "sb") return d_swerve_for_brake(v_r, v_f, rho, g, g, p, opt);
  if (name == "bs") return d_brake_for_swerve(v_r, v_f, rho, g, g, p, opt);
  return d_swerve_for_swerve(v_r, v_f, rho, g, g, p, opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Safe following distances for vehicles that may brake or swerve"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  bool literal = false;
  int jobs = 0;
  std::uint64_t seed = 42;
  app.add_option("--config", config_path,
                 "parameter file (fallback: $SWERVE_SAFETY_CONFIG)");
  app.add_flag("--literal-formulas", literal,
               "evaluate the published formulas exactly as printed");
  app.add_option("--jobs", jobs, "worker threads (0 = all)");
  app.add_option("--seed", seed, "random seed for verification batches");
  app.add_option("--out", out_path, "output path (default: standard output)");

  // distance
  auto* cmd_distance = app.add_subcommand("distance", "one scenario distance");
  std::string scenario;
  double vr = 0.0, vf = 0.0, rho_override = -1.0;
  bool clamp_front = false, com_clearance = false;
  cmd_distance->add_option("--scenario", scenario, "bb, sb, bs, or ss")
      ->required()
      ->check(CLI::IsMember({"bb", "sb", "bs", "ss"}));
  cmd_distance->add_option("--vr", vr, "rear speed [m/s]")->required();
  cmd_distance->add_option("--vf", vf, "front speed [m/s]")->required();
  cmd_distance->add_option("--rho", rho_override, "override reaction delay");
  cmd_distance->add_flag("--clamp-front-stop", clamp_front,
                         "cap front braking travel at its stopping distance");
  cmd_distance->add_flag("--com-clearance", com_clearance,
                         "measure swerve clearance at the centre of mass");

  // swerve-profile
  auto* cmd_profile =
      app.add_subcommand("swerve-profile", "kinematic swerve trajectory CSV");
  double profile_v = 0.0, profile_dt = 0.01;
  cmd_profile->add_option("--v", profile_v, "manoeuvre speed [m/s]")
      ->required();
  cmd_profile->add_option("--dt", profile_dt, "sample interval [s]");

  // sweep
  auto* cmd_sweep =
      app.add_subcommand("sweep", "distances over a uniform speed grid");
  double start = 0.0, stop = 30.0, step = 0.1;
  bool with_dynamic = false;
  cmd_sweep->add_option("--start", start, "grid start [m/s]");
  cmd_sweep->add_option("--stop", stop, "grid stop [m/s]");
  cmd_sweep->add_option("--step", step, "grid step [m/s]");
  cmd_sweep->add_flag(
      "--dynamic", with_dynamic,
      "dynamic-model clearance columns instead of distance columns");

  // dynamic-validate
  auto* cmd_dyn = app.add_subcommand(
      "dynamic-validate", "search a dynamic-model swerve and compare");
  double v0 = 0.0;
  bool unconstrained = false;
  cmd_dyn->add_option("--v0", v0, "initial speed [m/s]")->required();
  cmd_dyn->add_flag("--unconstrained", unconstrained,
                    "cap only by tire feasibility, not comfort");

  // verify
  auto* cmd_verify =
      app.add_subcommand("verify", "simulation-oracle batches");
  std::string suite;
  int n_scenarios = 200, n_blocks = 100;
  double sim_dt = 1e-3;
  cmd_verify->add_option("suite", suite, "theorems or tightness")
      ->required()
      ->check(CLI::IsMember({"theorems", "tightness"}));
  cmd_verify->add_option("--n", n_scenarios, "scenarios per property");
  cmd_verify->add_option("--blocks", n_blocks, "vehicle blocks");
  cmd_verify->add_option("--dt", sim_dt, "simulation step [s]");

  // Global flags are accepted after the subcommand name too.
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Config cfg = load_effective_config(config_path);
    ScenarioOptions opt;
    opt.mode = literal ? FormulaMode::Literal : FormulaMode::Corrected;
    opt.clamp_front_stop = clamp_front;
    opt.clearance_at_com = com_clearance;

    if (*cmd_distance) {
      const double rho = rho_override >= 0.0 ? rho_override : cfg.safety.rho;
      const ScenarioResult r = eval_scenario(scenario, vr, vf, rho, cfg, opt);
      json j;
      j["scenario"] = scenario;
      j["v_r"] = vr;
      j["v_f"] = vf;
      j["rho"] = rho;
      j["mode"] = literal ? "literal" : "corrected";
      j["distance"] = r.distance;
      j["audit"] = json::object();
      for (const auto& [k, v] : r.components) j["audit"][k] = v;
      j["config"] = config_hash(cfg);
      write_output(out_path, j.dump(2) + "\n");
    } else if (*cmd_profile) {
      const SwerveManoeuvre m =
          build_swerve(profile_v, cfg.geometry, cfg.safety, opt.mode);
      std::string csv = "# config " + config_hash(cfg) + "\n";
      csv += "t,x,y,theta,psi\n";
      char buf[160];
      for (const TrajectorySample& s : sample_trajectory(m, profile_dt)) {
        std::snprintf(buf, sizeof(buf), "%.9g,%.9g,%.9g,%.9g,%.9g\n", s.t, s.x,
                      s.y, s.theta, s.psi);
        csv += buf;
      }
      write_output(out_path, csv);
    } else if (*cmd_sweep) {
      const std::vector<double> grid = make_grid(start, stop, step);
      if (with_dynamic) {
        const auto rows = dynamic_sweep(grid, cfg, {}, jobs);
        write_output(out_path, dyn_sweep_csv(rows, cfg));
      } else {
        const auto rows = uniform_sweep(grid, cfg, opt, jobs);
        write_output(out_path, sweep_csv(rows, cfg));
      }
    } else if (*cmd_dyn) {
      SwerveSearchOptions so;
      so.jobs = jobs;
      const SwerveSearchResult r =
          find_swerve(v0, !unconstrained, cfg.dynamic, cfg.geometry,
                      cfg.safety, so);
      const SwerveManoeuvre m = build_swerve(v0, cfg.geometry, cfg.safety);
      const double y_c =
          lateral_clearance(cfg.geometry, cfg.geometry, m.theta_max, cfg.safety);
      const double x_c_kin =
          clearance(m, y_c).x_c +
          rotated_extents(cfg.geometry, m.theta_max).d_prime;
      json j;
      j["v0"] = v0;
      j["constrained"] = !unconstrained;
      j["x_c"] = r.x_c;
      j["t_c"] = r.t_c;
      j["x_c_kinematic"] = x_c_kin;
      j["relative_error"] = (r.x_c - x_c_kin) / x_c_kin;
      j["theta_max"] = r.theta_max;
      j["peak_lat_accel"] = r.peak_lat_accel;
      j["mean_lat_accel"] = r.mean_lat_accel;
      j["y_final"] = r.y_final;
      j["theta_final"] = r.theta_final;
      j["control"] = {{"steering_rates", r.control.steering_rates},
                      {"brake_input", r.control.brake_input},
                      {"t_f", r.control.t_f}};
      j["config"] = config_hash(cfg);
      write_output(out_path, j.dump(2) + "\n");
    } else if (*cmd_verify) {
      const VerifyReport rep =
          suite == "theorems"
              ? verify_theorems(cfg, seed, n_scenarios, n_blocks, sim_dt, opt)
              : verify_tightness(cfg, seed, n_scenarios, sim_dt, opt);
      std::string text;
      for (const VerifyItem& it : rep.items) {
        text += it.pass ? "PASS " : "FAIL ";
        text += it.name + " (" + std::to_string(it.cases) + " cases, " +
                std::to_string(it.failures) + " failures";
        if (!it.detail.empty()) text += "; " + it.detail;
        text += ")\n";
      }
      text += rep.all_pass ? "ALL PASS\n" : "FAILURES PRESENT\n";
      write_output(out_path, text);
      if (!rep.all_pass) return 1;
    }
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
