#include "swervesafe/scenario_distances.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "swervesafe/kinematic_swerve.hpp"
#include "swervesafe/rotation_geometry.hpp"
#include "swervesafe/rss_core.hpp"

namespace swervesafe {

namespace {

SafetyParams with_rho(const SafetyParams& p, double rho) {
  SafetyParams q = p;
  q.rho = rho;
  return q;
}

// Front vehicle's displacement while braking hard for time T starting at
// v_f_prime. The parabola runs past the stop, understating front travel
// (the conservative direction), but a braking vehicle never reverses, so by
// default the displacement is floored at zero. clamp_stop caps it at the
// full stopping distance instead; Literal mode keeps the raw parabola as
// printed.
double front_brake_travel(double v_f_prime, double T, const SafetyParams& p,
                          const ScenarioOptions& opt) {
  const double parabola = v_f_prime * T - p.a_max_brake * T * T / 2.0;
  if (opt.mode == FormulaMode::Literal) return parabola;
  if (opt.clamp_front_stop && T > v_f_prime / p.a_max_brake) {
    return v_f_prime * v_f_prime / (2.0 * p.a_max_brake);
  }
  return std::max(parabola, 0.0);
}

}  // namespace

ScenarioResult d_swerve_for_brake(double v_r, double v_f, double rho,
                                  const VehicleGeometry& g_rear,
                                  const VehicleGeometry& g_front,
                                  const SafetyParams& p,
                                  const ScenarioOptions& opt) {
  const SafetyParams pe = with_rho(p, rho);
  const double v_r_rho = post_reaction_speed(v_r, pe);
  if (v_r_rho <= 0.0) {
    // A stationary rear vehicle cannot swerve, rotate, or close the gap.
    ScenarioResult r;
    r.distance = g_rear.d_f + g_front.d_r;
    r.components = {{"v_f_prime", 0.0}, {"x_c", 0.0},     {"t_c", 0.0},
                    {"x_f", 0.0},       {"interior", 0.0},
                    {"theta_max", 0.0}, {"d_prime", g_rear.d_f}};
    return r;
  }
  const SwerveManoeuvre m = build_swerve(v_r_rho, g_rear, pe, opt.mode);
  const double y_c = lateral_clearance(g_rear, g_front, m.theta_max, pe);
  const ClearanceResult cl = clearance(m, y_c);
  const double d_prime = rotated_extents(g_rear, m.theta_max).d_prime;

  // Clearance travel is measured at the rotated front extent so the chassis
  // front, not just the centre of mass, has crossed x_c by t_c.
  const double x_c = cl.x_c + (opt.clearance_at_com ? 0.0 : d_prime);
  const double v_f_prime = std::min(v_f, v_r * std::cos(m.psi_max));
  const double T = rho + cl.t_c;
  const double x_f = front_brake_travel(v_f_prime, T, pe, opt);

  const double interior =
      v_r * rho + 0.5 * pe.a_max_accel * rho * rho + x_c - x_f;

  ScenarioResult r;
  r.distance = positive_part(interior) + d_prime + g_front.d_r;
  r.v_f_prime = v_f_prime;
  r.x_f = x_f;
  r.x_lead_or_rear = x_c;
  r.t_c = cl.t_c;
  r.components = {{"v_f_prime", v_f_prime}, {"x_c", x_c},
                  {"x_c_com", cl.x_c},      {"t_c", cl.t_c},
                  {"x_f", x_f},             {"y_c", y_c},
                  {"theta_max", m.theta_max}, {"psi_max", m.psi_max},
                  {"d_prime", d_prime},     {"interior", interior}};
  return r;
}

ScenarioResult d_brake_for_swerve(double v_r, double v_f, double rho,
                                  const VehicleGeometry& g_rear,
                                  const VehicleGeometry& g_front,
                                  const SafetyParams& p,
                                  const ScenarioOptions& opt) {
  const SafetyParams pe = with_rho(p, rho);
  const double v_r_rho = post_reaction_speed(v_r, pe);

  double t_c, theta_f, psi_max_f;
  if (v_f > 0.0) {
    const SwerveManoeuvre mf = build_swerve(v_f, g_front, pe, opt.mode);
    const double y_c = lateral_clearance(g_front, g_rear, mf.theta_max, pe);
    t_c = clearance(mf, y_c).t_c;
    theta_f = mf.theta_max;
    psi_max_f = mf.psi_max;
  } else {
    // A stationary lead never clears (and never rotates); the rear must come
    // to a full stop.
    t_c = std::numeric_limits<double>::infinity();
    theta_f = 0.0;
    psi_max_f = 0.0;
  }

  const double t_b = std::max(t_c - rho, 0.0);
  const double v_r_min =
      std::max(std::min(v_r, v_r_rho - pe.a_min_brake * t_b), 0.0);
  const double v_f_prime = std::min(v_f * std::cos(psi_max_f), v_r_min);
  const double x_f = std::isinf(t_c) ? 0.0 : v_f_prime * t_c;
  const double x_r_brake =
      t_b <= v_r_rho / pe.a_min_brake
          ? v_r_rho * t_b - pe.a_min_brake * t_b * t_b / 2.0
          : v_r_rho * v_r_rho / (2.0 * pe.a_min_brake);
  const double x_r = (v_r + v_r_rho) * rho / 2.0 + x_r_brake;
  const double d_bar = rotated_extents(g_front, theta_f).d_bar;

  ScenarioResult r;
  r.distance = positive_part(x_r - x_f) + g_rear.d_f + d_bar;
  r.v_f_prime = v_f_prime;
  r.x_f = x_f;
  r.x_lead_or_rear = x_r;
  r.t_c = t_c;
  r.components = {{"v_f_prime", v_f_prime}, {"v_r_min", v_r_min},
                  {"x_f", x_f},             {"x_r", x_r},
                  {"x_r_brake", x_r_brake}, {"t_c", t_c},
                  {"theta_max_front", theta_f}, {"d_bar", d_bar},
                  {"interior", x_r - x_f}};
  return r;
}

ScenarioResult d_swerve_for_swerve(double v_r, double v_f, double rho,
                                   const VehicleGeometry& g_rear,
                                   const VehicleGeometry& g_front,
                                   const SafetyParams& p,
                                   const ScenarioOptions& opt) {
  const SafetyParams pe = with_rho(p, rho);
  const double v_r_rho = post_reaction_speed(v_r, pe);
  double t_1 = 0.0, theta_r = 0.0;
  if (v_r_rho > 0.0) {
    const SwerveManoeuvre m1 = build_swerve(v_r_rho, g_rear, pe, opt.mode);
    t_1 = m1.duration;
    theta_r = m1.theta_max;
  }

  double t_2 = 0.0, psi_max_f = 0.0, theta_f = 0.0;
  if (v_f > 0.0) {
    const SwerveManoeuvre mf = build_swerve(v_f, g_front, pe, opt.mode);
    t_2 = mf.duration;
    psi_max_f = mf.psi_max;
    theta_f = mf.theta_max;
  }

  const double v_f_prime = std::min(v_f * std::cos(psi_max_f), v_r);
  // The displayed formula's rear swerve term is v_r_rho (t_1 - rho), but its
  // own proof bounds the swerve travel by v_r_rho t_1 (the swerve spans
  // [rho, rho + t_1]); Corrected follows the proof, Literal the display.
  const double swerve_term = opt.mode == FormulaMode::Literal
                                 ? v_r_rho * std::max(t_1 - rho, 0.0)
                                 : v_r_rho * t_1;
  const double interior =
      (v_r + v_r_rho) * rho / 2.0 + swerve_term +
      v_r_rho * v_r_rho / (2.0 * pe.a_min_brake) -
      (v_f_prime * t_2 + v_f_prime * v_f_prime / (2.0 * pe.a_max_brake));
  const double d_prime = rotated_extents(g_rear, theta_r).d_prime;
  const double d_bar = rotated_extents(g_front, theta_f).d_bar;

  // The timing ordering the derivation assumes; recorded for audit, not
  // enforced (the bound stays valid when an interval degenerates).
  const double t_b2 = v_f_prime / pe.a_max_brake;
  const double t_b1 = v_r_rho / pe.a_min_brake;
  const bool timing_ok = rho < t_2 && t_2 < rho + t_1 &&
                         rho + t_1 < t_2 + t_b2 &&
                         t_2 + t_b2 < rho + t_1 + t_b1;

  ScenarioResult r;
  r.distance = interior + d_prime + d_bar;  // no positive-part, as printed
  r.v_f_prime = v_f_prime;
  r.x_f = v_f_prime * t_2;
  r.x_lead_or_rear = 0.0;
  r.t_c = 0.0;
  r.components = {{"v_f_prime", v_f_prime}, {"t_1", t_1},
                  {"t_2", t_2},             {"interior", interior},
                  {"d_prime", d_prime},     {"d_bar", d_bar},
                  {"timing_ok", timing_ok ? 1.0 : 0.0}};
  return r;
}

ScenarioResult d_brake_for_brake(double v_r, double v_f, double rho,
                                 const VehicleGeometry& g_rear,
                                 const VehicleGeometry& g_front,
                                 const SafetyParams& p,
                                 const ScenarioOptions& opt) {
  const SafetyParams pe = with_rho(p, rho);
  const double interior =
      d_long_brake_brake(LongitudinalScenario{v_r, v_f}, pe, opt.mode);
  ScenarioResult r;
  r.distance = interior + g_rear.d_f + g_front.d_r;
  r.v_f_prime = v_f;
  r.components = {{"interior", interior}};
  return r;
}

}  // namespace swervesafe
