#pragma once

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace swervesafe {

// Chassis extents and axle offsets, all measured from the centre of mass.
struct VehicleGeometry {
  double d_f = 0.0;  // to chassis front [m]
  double d_r = 0.0;  // to chassis rear [m]
  double b_l = 0.0;  // to left side [m]
  double b_r = 0.0;  // to right side [m]
  double l_f = 0.0;  // to front axle [m]
  double l_r = 0.0;  // to rear axle [m]

  double wheelbase() const { return l_f + l_r; }
};

// Framework parameters. Accelerations are positive magnitudes; signs are
// applied at use sites.
struct SafetyParams {
  double rho = 0.0;          // reaction delay [s]
  double mu = 0.0;           // lateral buffer [m]
  double alpha = 0.0;        // lane width [m]
  double a_max_accel = 0.0;  // [m/s^2]
  double a_min_brake = 0.0;  // comfortable braking [m/s^2]
  double a_max_brake = 0.0;  // hard braking [m/s^2]
  double a_lat_max = 0.0;    // [m/s^2]
  double a_lat_min = 0.0;    // [m/s^2]
  double delta_max = 0.0;    // steering angle limit [rad]
};

struct PacejkaCoefficients {
  double B = 0.0;
  double C = 0.0;
  double D = 0.0;  // peak lateral force [N]
  double E = 0.0;
};

struct DynamicParams {
  double m = 0.0;         // mass [kg]
  double I_zz = 0.0;      // yaw inertia [kg m^2]
  double e_SP = 0.0;      // drag mount offset [m]
  double R_wheel = 0.0;   // wheel radius [m], reference only
  double c_w = 0.0;       // drag coefficient
  double rho_drag = 0.0;  // air density [kg/m^3]
  double A = 0.0;         // frontal area [m^2]
  PacejkaCoefficients pacejka_front;
  PacejkaCoefficients pacejka_rear;
};

struct Config {
  VehicleGeometry geometry;
  SafetyParams safety;
  DynamicParams dynamic;
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Default parameter set used throughout.
Config default_config();

// Parses a flat `key = value` document ('#' comments). Unknown keys are
// rejected; omitted keys keep their defaults. Invariant violations name the
// offending field and bound.
Config load_config(std::istream& in);
Config load_config_string(const std::string& text);
Config load_config_file(const std::string& path);

void validate(const Config& c);

// Emits every key with full precision; reloading reproduces the parameters
// bit-for-bit.
void save_config(const Config& c, std::ostream& out);
std::string config_to_string(const Config& c);

// FNV-1a over the serialized text, for CSV provenance headers.
std::string config_hash(const Config& c);

}  // namespace swervesafe
