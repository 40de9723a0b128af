#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "swervesafe/config.hpp"
#include "swervesafe/scenario_distances.hpp"

namespace swervesafe {

enum class AgentRole { BrakingLead, SwervingLead, ReactingFollower };
enum class Manoeuvre { Brake, Swerve };

// Worst-case scripted agent: leads act from trigger_time; a reacting follower
// accelerates hard until trigger_time, then performs its manoeuvre
// (comfortable braking, or a swerve at the post-reaction speed followed by
// comfortable braking in the new lane).
struct AgentScript {
  AgentRole role = AgentRole::BrakingLead;
  Manoeuvre manoeuvre = Manoeuvre::Brake;
  double trigger_time = 0.0;  // [s]
  double x0 = 0.0;            // initial centre-of-mass position [m]
  double y0 = 0.0;
  double v0 = 0.0;            // [m/s]
};

struct SimOutcome {
  double min_gap_long = 0.0;  // over steps where the lateral bands overlap
  double min_gap_lat = 0.0;   // over steps where the longitudinal bands overlap
  bool collided = false;
  std::optional<double> first_violation_time;
};

struct SimOptions {
  // Footprints are outer bounding rectangles (conservative). The exact
  // oriented-rectangle test is used for tightness probes.
  bool exact_overlap = false;
};

enum class ScenarioKind {
  BrakeForBrake,
  SwerveForBrake,
  BrakeForSwerve,
  SwerveForSwerve
};

SimOutcome run(const std::vector<AgentScript>& agents, double dt,
               double horizon, const VehicleGeometry& g,
               const SafetyParams& p, const SimOptions& opt = {});

// Builds the two-agent script for one of the four trigger scenarios, rear at
// x = 0 and front at x = gap.
std::vector<AgentScript> make_scenario(ScenarioKind kind, double v_r,
                                       double v_f, double gap,
                                       const SafetyParams& p);

// Smallest non-colliding initial centre-of-mass gap, bisected to 1 cm.
double minimal_safe_spacing(ScenarioKind kind, double v_r, double v_f,
                            double dt, const VehicleGeometry& g,
                            const SafetyParams& p, const SimOptions& opt = {});

// Chain of vehicles spaced at the universal following distance; the front
// vehicle triggers, each follower reacts one reaction delay after its
// predecessor with the response the induction prescribes (swerve for a
// braking predecessor, brake for a swerving one). Returns true when the run
// is collision-free.
bool block_safe(const std::vector<double>& speeds, Manoeuvre front_trigger,
                double dt, const VehicleGeometry& g, const SafetyParams& p,
                const ScenarioOptions& sopt = {});

struct VerifyItem {
  std::string name;
  bool pass = false;
  int cases = 0;
  int failures = 0;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyItem> items;
  bool all_pass = false;
};

// Monte Carlo soundness checks: random scenarios spaced at the computed
// distances must be collision-free under the worst-case simulation.
VerifyReport verify_theorems(const Config& c, std::uint64_t seed,
                             int n_scenarios, int n_blocks, double dt = 1e-3,
                             const ScenarioOptions& sopt = {});

// Probes at 90% of each positive-interior distance: at least one sampled
// scenario per family must collide, showing the bounds are not vacuous.
VerifyReport verify_tightness(const Config& c, std::uint64_t seed,
                              int n_scenarios, double dt = 1e-3,
                              const ScenarioOptions& sopt = {});

}  // namespace swervesafe
