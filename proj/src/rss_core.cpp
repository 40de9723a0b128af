#include "swervesafe/rss_core.hpp"

#include <cmath>

namespace swervesafe {

double positive_part(double x) { return x > 0.0 ? x : 0.0; }

double post_reaction_speed(double v_r, const SafetyParams& p) {
  return v_r + p.a_max_accel * p.rho;
}

double d_long_brake_brake(const LongitudinalScenario& s, const SafetyParams& p,
                          FormulaMode mode) {
  const double rho = p.rho;
  const double v_r_rho = post_reaction_speed(s.v_r, p);
  const double brake_speed =
      mode == FormulaMode::Literal ? s.v_r + v_r_rho : v_r_rho;
  const double interior = s.v_r * rho + 0.5 * p.a_max_accel * rho * rho +
                          brake_speed * brake_speed / (2.0 * p.a_min_brake) -
                          s.v_f * s.v_f / (2.0 * p.a_max_brake);
  return positive_part(interior);
}

double d_lat(const LateralScenario& s, const SafetyParams& p) {
  const double rho = p.rho;
  // Signed convention: rear drifting right (toward the front vehicle's lane)
  // is negative, front drifting left is positive; both worsen by a_lat_max
  // during the reaction delay, then decelerate laterally at a_lat_min.
  const double v_r_rho = s.v_r_lat - p.a_lat_max * rho;
  const double v_f_rho = s.v_f_lat + p.a_lat_max * rho;
  const double interior =
      -(s.v_r_lat + v_r_rho) / 2.0 * rho +
      v_r_rho * v_r_rho / (2.0 * p.a_lat_min) +
      (s.v_f_lat + v_f_rho) / 2.0 * rho +
      v_f_rho * v_f_rho / (2.0 * p.a_lat_min);
  return p.mu + positive_part(interior);
}

bool laterally_adjacent(double x1, double x2, const VehicleGeometry& g) {
  return std::fabs(x1 - x2) <= g.d_f + g.d_r;
}

bool longitudinally_adjacent(double y1, double y2, double lat_distance,
                             const VehicleGeometry& g) {
  return std::fabs(y1 - y2) <= g.b_l + g.b_r + lat_distance;
}

}  // namespace swervesafe
