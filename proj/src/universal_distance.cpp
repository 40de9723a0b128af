#include "swervesafe/universal_distance.hpp"

#include <algorithm>

namespace swervesafe {

namespace {

// A following distance below the chassis extents is meaningless; look-ahead
// terms that subtract the 2-3 spacing are floored here.
double extent_floor(const VehicleGeometry& g) { return g.d_f + g.d_r; }

double pair_max(double v1, double v2, const SafetyParams& p,
                const VehicleGeometry& g, const ScenarioOptions& opt) {
  const double sb = d_swerve_for_brake(v1, v2, p.rho, g, g, p, opt).distance;
  const double bs = d_brake_for_swerve(v1, v2, p.rho, g, g, p, opt).distance;
  // The printed max lists d_bs twice where the proof needs d_sb; Literal
  // reproduces that, Corrected includes both.
  return opt.mode == FormulaMode::Literal ? bs : std::max(sb, bs);
}

}  // namespace

double universal(const TripleState& t, const SafetyParams& p,
                 const VehicleGeometry& g, const ScenarioOptions& opt) {
  double best = pair_max(t.v1, t.v2, p, g, opt);
  if (t.v3) {
    const double d23 =
        d_swerve_for_brake(t.v2, *t.v3, p.rho, g, g, p, opt).distance;
    const double ss =
        d_swerve_for_swerve(t.v1, *t.v3, 2.0 * p.rho, g, g, p, opt).distance;
    const double bb =
        d_brake_for_brake(t.v1, *t.v3, 2.0 * p.rho, g, g, p, opt).distance;
    best = std::max(best, std::max(ss - d23, extent_floor(g)));
    best = std::max(best, std::max(bb - d23, extent_floor(g)));
  }
  return best;
}

double universal_with_positions(const TripleState& t, const SafetyParams& p,
                                const VehicleGeometry& g,
                                const ScenarioOptions& opt) {
  double best = pair_max(t.v1, t.v2, p, g, opt);
  if (t.v3 && t.d_23) {
    const double ss =
        d_swerve_for_swerve(t.v1, *t.v3, 2.0 * p.rho, g, g, p, opt).distance;
    const double bb =
        d_brake_for_brake(t.v1, *t.v3, 2.0 * p.rho, g, g, p, opt).distance;
    best = std::max(best, std::max(ss - *t.d_23, extent_floor(g)));
    best = std::max(best, std::max(bb - *t.d_23, extent_floor(g)));
  }
  return best;
}

double uniform_illustration(double v, const SafetyParams& p,
                            const VehicleGeometry& g,
                            const ScenarioOptions& opt) {
  double best = pair_max(v, v, p, g, opt);
  const double ss =
      d_swerve_for_swerve(v, v, 2.0 * p.rho, g, g, p, opt).distance;
  const double bb =
      d_brake_for_brake(v, v, 2.0 * p.rho, g, g, p, opt).distance;
  // The two-gap look-ahead terms are split evenly across both gaps.
  best = std::max(best, ss / 2.0);
  best = std::max(best, bb / 2.0);
  return best;
}

}  // namespace swervesafe
