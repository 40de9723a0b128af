#pragma once

#include <vector>

#include "swervesafe/config.hpp"
#include "swervesafe/formula_mode.hpp"

namespace swervesafe {

// Two constant-radius arcs of opposite curvature at constant speed: steer in,
// then counter-steer until the heading is straight again, offset by the lane
// width alpha.
struct SwerveManoeuvre {
  double v = 0.0;          // manoeuvre speed [m/s]
  double R_c = 0.0;        // centre-of-mass turn radius [m]
  double R_r = 0.0;        // rear-axle turn radius [m]
  double delta_c = 0.0;    // steering angle [rad]
  double beta_c = 0.0;     // slip angle [rad]
  double theta_max = 0.0;  // peak chassis rotation [rad]
  double psi_max = 0.0;    // peak course angle, theta_max + beta_c [rad]
  double duration = 0.0;   // total swerve time [s]
  double alpha = 0.0;      // lateral offset achieved [m]
};

enum class ArcCase { FirstArc, SecondArc };

struct ClearanceResult {
  double x_c = 0.0;   // centre-of-mass longitudinal travel at clearance [m]
  double t_c = 0.0;   // time of clearance [s]
  double psi_c = 0.0; // course angle at clearance [rad]
  ArcCase arc_case = ArcCase::FirstArc;
};

struct TrajectorySample {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;  // chassis rotation
  double psi = 0.0;    // course angle of the centre of mass
};

// Tightest turn the steering limit allows. Literal mode evaluates the
// printed expression sqrt((l_r+l_f)^2 / (tan^2(delta_max) + l_r^2)).
double min_turn_radius_steering(const VehicleGeometry& g,
                                const SafetyParams& p,
                                FormulaMode mode = FormulaMode::Corrected);

// Throws DomainError for v <= 0, an infeasible lane offset, or a swerve whose
// course angle would exceed pi/2. alpha = 0 yields a zero-duration manoeuvre.
SwerveManoeuvre build_swerve(double v, const VehicleGeometry& g,
                             const SafetyParams& p,
                             FormulaMode mode = FormulaMode::Corrected);

// Where along the swerve the lateral offset first reaches y_c. Throws
// DomainError if the swerve never reaches y_c.
ClearanceResult clearance(const SwerveManoeuvre& m, double y_c);

// Closed-form state at time t in [0, duration].
TrajectorySample state_at(const SwerveManoeuvre& m, double t);

// Samples at multiples of dt plus the exact endpoint.
std::vector<TrajectorySample> sample_trajectory(const SwerveManoeuvre& m,
                                                double dt);

}  // namespace swervesafe
