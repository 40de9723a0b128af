#pragma once

#include "swervesafe/config.hpp"
#include "swervesafe/formula_mode.hpp"

namespace swervesafe {

// Axis-aligned extents of the chassis rectangle swept over rotations up to
// theta_max, measured from the centre of mass.
struct RotatedExtents {
  double d_prime = 0.0;        // front
  double d_bar = 0.0;          // rear
  double b_prime = 0.0;        // right (toward the swerve clearance side)
  double b_prime_left = 0.0;   // left (far side during a left swerve)
  double theta_max = 0.0;
};

// theta_max must lie in [0, pi/2]; each extent follows its piecewise formula
// (linear-trig up to the corner angle, corner diagonal beyond).
RotatedExtents rotated_extents(const VehicleGeometry& g, double theta_max);

// Half-side of the largest axis-aligned square that stays inside the chassis
// under any rotation: b_l / sqrt(2) (inscribed in the circle of radius b_l).
double inner_half_side(const VehicleGeometry& g);

// Lateral offset at which a swerving vehicle stops being longitudinally
// adjacent to the other: its rotated side extent, plus the other's half
// width, plus the zero-speed lateral safe distance.
double lateral_clearance(const VehicleGeometry& g_swerving,
                         const VehicleGeometry& g_other, double theta_max,
                         const SafetyParams& p);

}  // namespace swervesafe
