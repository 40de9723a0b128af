#include "swervesafe/particle_lower_bound.hpp"

#include <algorithm>
#include <cmath>

#include "swervesafe/kinematic_swerve.hpp"
#include "swervesafe/rotation_geometry.hpp"
#include "swervesafe/rss_core.hpp"

namespace swervesafe {

ParticleClearance particle_clearance(double v, double y_c,
                                     const VehicleGeometry& g,
                                     const SafetyParams& p) {
  ParticleClearance r;
  r.t_c = std::sqrt(2.0 * y_c / p.a_lat_min);
  // Brakes comfortably while steering laterally at a_lat_min; the inner
  // square's half-side stands in for the chassis front.
  r.x_bar_c =
      v * r.t_c - p.a_min_brake * r.t_c * r.t_c / 2.0 + inner_half_side(g);
  return r;
}

LowerBoundResult lower_bound(double v_r, double v_f, double y_c,
                             const VehicleGeometry& g, const SafetyParams& p,
                             const ScenarioOptions& opt) {
  const double rho = p.rho;
  const double v_r_rho = post_reaction_speed(v_r, p);
  const ParticleClearance pc = particle_clearance(v_r_rho, y_c, g, p);

  // Front vehicle bound matches d_swerve_for_brake's convention; psi_max
  // comes from the paired kinematic swerve at the same speed.
  const SwerveManoeuvre m = build_swerve(v_r_rho, g, p, opt.mode);
  const double v_f_prime = std::min(v_f, v_r * std::cos(m.psi_max));
  // Same front-travel convention as d_swerve_for_brake so the two are
  // directly comparable.
  const double T = rho + pc.t_c;
  double x_f = v_f_prime * T - p.a_max_brake * T * T / 2.0;
  if (opt.mode != FormulaMode::Literal) {
    if (opt.clamp_front_stop && T > v_f_prime / p.a_max_brake) {
      x_f = v_f_prime * v_f_prime / (2.0 * p.a_max_brake);
    } else {
      x_f = std::max(x_f, 0.0);
    }
  }

  LowerBoundResult r;
  r.x_bar_c = pc.x_bar_c;
  r.t_c = pc.t_c;
  r.d_bar_long =
      v_r * rho + 0.5 * p.a_max_accel * rho * rho + pc.x_bar_c - x_f;
  return r;
}

}  // namespace swervesafe
