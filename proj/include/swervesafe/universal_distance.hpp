#pragma once

#include <optional>

#include "swervesafe/config.hpp"
#include "swervesafe/scenario_distances.hpp"

namespace swervesafe {

// A vehicle, the vehicle directly ahead, and optionally the one beyond it.
struct TripleState {
  double v1 = 0.0;
  double v2 = 0.0;
  std::optional<double> v3;
  std::optional<double> d_23;  // current gap between vehicles 2 and 3 [m]
};

// Following distance sufficient regardless of which response (brake or
// swerve) this vehicle and the two ahead choose. Corrected mode includes both
// d_sb and d_bs in the max; Literal lists d_bs twice as printed. Terms that
// subtract the 2-3 spacing are floored at the extent-only minimum.
double universal(const TripleState& t, const SafetyParams& p,
                 const VehicleGeometry& g, const ScenarioOptions& opt = {});

// Variant using the observed gap d_23 instead of the guaranteed spacing.
double universal_with_positions(const TripleState& t, const SafetyParams& p,
                                const VehicleGeometry& g,
                                const ScenarioOptions& opt = {});

// Single following distance when every vehicle moves at speed v; the
// look-ahead terms are halved across the two gaps.
double uniform_illustration(double v, const SafetyParams& p,
                            const VehicleGeometry& g,
                            const ScenarioOptions& opt = {});

}  // namespace swervesafe
