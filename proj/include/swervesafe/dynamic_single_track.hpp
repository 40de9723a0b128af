#pragma once

#include <array>
#include <vector>

#include "swervesafe/config.hpp"
#include "swervesafe/formula_mode.hpp"

namespace swervesafe {

// Planar single-track model with yaw inertia, Pacejka lateral tire forces at
// each axle, and aerodynamic drag.
struct DynamicState {
  double x = 0.0;        // [m]
  double y = 0.0;        // [m]
  double v = 0.0;        // speed [m/s]
  double beta = 0.0;     // side slip [rad]
  double psi = 0.0;      // yaw (chassis rotation) [rad]
  double omega_z = 0.0;  // yaw rate [rad/s]
  double delta = 0.0;    // steering angle [rad]
};

// Open-loop swerve command: four equal-length steering-rate intervals plus a
// constant longitudinal deceleration demand.
struct ManoeuvreControl {
  std::array<double, 4> steering_rates{};  // [rad/s]
  double brake_input = 0.0;                // deceleration demand [m/s^2]
  double t_f = 0.0;                        // total manoeuvre time [s]
};

struct SwerveSearchResult {
  ManoeuvreControl control;
  std::vector<DynamicState> trajectory;  // at multiples of dt from t = 0
  double dt = 0.0;
  double x_c = 0.0;            // front-extent travel at lateral clearance [m]
  double t_c = 0.0;            // time of clearance [s]
  double theta_max = 0.0;      // peak chassis rotation over the manoeuvre
  double peak_lat_accel = 0.0; // max |v d(psi - beta)/dt| over the manoeuvre
  double mean_lat_accel = 0.0; // time average of the same quantity
  double y_final = 0.0;        // boundary-condition residual inputs
  double theta_final = 0.0;
};

struct SwerveSearchOptions {
  double dt = 1e-3;          // integration step for the returned trajectory
  double search_dt = 1e-2;   // coarser step used inside the searches
  double brake_step = 0.25;  // [m/s^2]
  double t_f_step = 0.05;    // [s]
  double t_f_min_factor = 0.5;  // range relative to the kinematic duration
  double t_f_max_factor = 2.0;
  double y_tol = 0.01;       // [m]
  double theta_tol = 0.005;  // [rad]
  int jobs = 0;              // 0 = all available threads
};

// One fixed-step RK4 integration step. Throws DomainError when the speed
// falls low enough that the slip angles become ill-defined.
DynamicState step(const DynamicState& s, double omega_delta,
                  double f_long_demand, double dt, const DynamicParams& dp,
                  const VehicleGeometry& g);

// Integrates the four-interval control from rest-heading at speed v0; the
// steering angle is clamped at delta_max.
std::vector<DynamicState> simulate(double v0, const ManoeuvreControl& c,
                                   double dt, const DynamicParams& dp,
                                   const VehicleGeometry& g,
                                   const SafetyParams& p);

// Searches for the open-loop swerve minimizing the clearance travel x_c:
// linear grids over brake demand and total time, bisection on the first
// steering-rate magnitude for y(t_f) = alpha, nested bisection on the third
// for theta(t_f) = 0. Peak lateral acceleration is capped at a_lat_max in
// both modes. Constrained mode additionally caps the mean lateral
// acceleration at a_lat_min and the brake demand at a_min_brake;
// unconstrained mode allows brake demand up to the rear tire peak D_r / m.
// Throws DomainError when no grid point satisfies the boundary tolerances.
SwerveSearchResult find_swerve(double v0, bool constrained,
                               const DynamicParams& dp,
                               const VehicleGeometry& g,
                               const SafetyParams& p,
                               const SwerveSearchOptions& opt = {});

}  // namespace swervesafe
