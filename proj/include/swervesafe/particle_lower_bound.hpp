#pragma once

#include "swervesafe/config.hpp"
#include "swervesafe/scenario_distances.hpp"

namespace swervesafe {

struct ParticleClearance {
  double t_c = 0.0;      // minimum-time lateral crossing [s]
  double x_bar_c = 0.0;  // longitudinal travel at clearance [m]
};

struct LowerBoundResult {
  double x_bar_c = 0.0;
  double t_c = 0.0;
  double d_bar_long = 0.0;
};

// A point mass that steers laterally at a_lat_min while braking comfortably,
// carrying the inner-square half-side as its footprint. Lower-bounds any
// feasible swerve's clearance travel at the same speed.
ParticleClearance particle_clearance(double v, double y_c,
                                     const VehicleGeometry& g,
                                     const SafetyParams& p);

// Necessary-distance counterpart of d_swerve_for_brake: the particle clears
// at the post-reaction speed while the front vehicle brakes hard.
LowerBoundResult lower_bound(double v_r, double v_f, double y_c,
                             const VehicleGeometry& g, const SafetyParams& p,
                             const ScenarioOptions& opt = {});

}  // namespace swervesafe
