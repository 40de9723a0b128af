#pragma once

#include <map>
#include <string>

#include "swervesafe/config.hpp"
#include "swervesafe/formula_mode.hpp"

namespace swervesafe {

// All four scenario distances are centre-of-mass-to-centre-of-mass; each
// formula's chassis-extent terms implement that convention.
struct ScenarioResult {
  double distance = 0.0;
  double v_f_prime = 0.0;
  double x_f = 0.0;
  double x_lead_or_rear = 0.0;  // x_c of the swerver, or x_r of the braker
  double t_c = 0.0;
  std::map<std::string, double> components;  // audit values by name
};

struct ScenarioOptions {
  FormulaMode mode = FormulaMode::Corrected;
  // The braking front vehicle's displacement parabola runs past the stop,
  // understating front travel (the conservative direction). Corrected mode
  // floors it at zero (a braking vehicle never reverses); this flag caps it
  // at the full stopping distance instead. Literal mode keeps the raw
  // parabola as printed.
  bool clamp_front_stop = false;
  // Measure swerve clearance travel at the centre of mass instead of at the
  // rotated front extent (x_c without the d' term; off by default).
  bool clearance_at_com = false;
};

// Rear swerves around a braking lead. The swerve is built at the
// post-reaction speed; the front is assumed to brake hard from t = 0.
ScenarioResult d_swerve_for_brake(double v_r, double v_f, double rho,
                                  const VehicleGeometry& g_rear,
                                  const VehicleGeometry& g_front,
                                  const SafetyParams& p,
                                  const ScenarioOptions& opt = {});

// Rear brakes while the lead swerves out of the lane at constant speed.
ScenarioResult d_brake_for_swerve(double v_r, double v_f, double rho,
                                  const VehicleGeometry& g_rear,
                                  const VehicleGeometry& g_front,
                                  const SafetyParams& p,
                                  const ScenarioOptions& opt = {});

// Both swerve into the adjacent lane, then brake there. Returned value is the
// expression as printed, with no positive-part clamp.
ScenarioResult d_swerve_for_swerve(double v_r, double v_f, double rho,
                                   const VehicleGeometry& g_rear,
                                   const VehicleGeometry& g_front,
                                   const SafetyParams& p,
                                   const ScenarioOptions& opt = {});

// Baseline both-brake distance converted to the centre-of-mass convention.
ScenarioResult d_brake_for_brake(double v_r, double v_f, double rho,
                                 const VehicleGeometry& g_rear,
                                 const VehicleGeometry& g_front,
                                 const SafetyParams& p,
                                 const ScenarioOptions& opt = {});

}  // namespace swervesafe
