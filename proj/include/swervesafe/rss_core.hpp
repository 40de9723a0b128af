#pragma once

#include "swervesafe/config.hpp"
#include "swervesafe/formula_mode.hpp"

namespace swervesafe {

struct LongitudinalScenario {
  double v_r = 0.0;  // rear initial speed [m/s]
  double v_f = 0.0;  // front initial speed [m/s]
};

struct LateralScenario {
  double v_r_lat = 0.0;  // signed, positive toward the other vehicle
  double v_f_lat = 0.0;
};

double positive_part(double x);

// Rear speed after accelerating at a_max_accel for the reaction delay.
double post_reaction_speed(double v_r, const SafetyParams& p);

// Longitudinal safe distance when both vehicles brake: the rear accelerates
// for rho, then brakes comfortably; the front brakes hard from t = 0.
// Literal mode uses the braking term as printed, (v_r + v_r_rho)^2 / (2 a),
// instead of v_r_rho^2 / (2 a).
double d_long_brake_brake(const LongitudinalScenario& s, const SafetyParams& p,
                          FormulaMode mode = FormulaMode::Corrected);

// Lateral safe distance: both vehicles drift toward each other at a_lat_max
// for rho, then decelerate laterally at a_lat_min; mu is kept as a buffer.
double d_lat(const LateralScenario& s, const SafetyParams& p);

// Adjacency predicates, closed intervals (boundary counts as adjacent).
bool laterally_adjacent(double x1, double x2, const VehicleGeometry& g);
bool longitudinally_adjacent(double y1, double y2, double lat_distance,
                             const VehicleGeometry& g);

}  // namespace swervesafe
