#include "swervesafe/rotation_geometry.hpp"

#include <cmath>
#include <numbers>

#include "swervesafe/rss_core.hpp"

namespace swervesafe {

namespace {

// Forward extent along +x of a corner at (a, b) rotated by theta: grows as
// a cos + b sin until the corner diagonal aligns with the axis at
// theta = atan(b/a), then stays at the diagonal length.
double front_extent(double a, double b, double theta) {
  const double corner = std::atan2(b, a);
  if (theta <= corner) return a * std::cos(theta) + b * std::sin(theta);
  return std::hypot(a, b);
}

// Sideways extent of a corner at (a, b): a sin + b cos until the diagonal is
// perpendicular to the axis at theta = pi/2 - atan(b/a).
double side_extent(double a, double b, double theta) {
  const double corner = std::atan2(b, a);
  if (theta <= std::numbers::pi / 2.0 - corner)
    return a * std::sin(theta) + b * std::cos(theta);
  return std::hypot(a, b);
}

}  // namespace

RotatedExtents rotated_extents(const VehicleGeometry& g, double theta_max) {
  if (!(theta_max >= 0.0) || theta_max > std::numbers::pi / 2.0) {
    throw DomainError("rotated_extents: theta_max outside [0, pi/2]");
  }
  RotatedExtents e;
  e.theta_max = theta_max;
  // Left swerve (counterclockwise rotation): the front-right corner governs
  // the front extent, the rear-left corner the rear extent, the rear-right
  // corner the right side, the front-left corner the left side.
  e.d_prime = front_extent(g.d_f, g.b_r, theta_max);
  e.d_bar = front_extent(g.d_r, g.b_l, theta_max);
  e.b_prime = side_extent(g.d_r, g.b_r, theta_max);
  e.b_prime_left = side_extent(g.d_f, g.b_l, theta_max);
  return e;
}

double inner_half_side(const VehicleGeometry& g) {
  return g.b_l / std::numbers::sqrt2;
}

double lateral_clearance(const VehicleGeometry& g_swerving,
                         const VehicleGeometry& g_other, double theta_max,
                         const SafetyParams& p) {
  const RotatedExtents e = rotated_extents(g_swerving, theta_max);
  return e.b_prime + g_other.b_l + d_lat(LateralScenario{0.0, 0.0}, p);
}

}  // namespace swervesafe
