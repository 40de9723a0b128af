#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "swervesafe/kinematic_swerve.hpp"
#include "swervesafe/rotation_geometry.hpp"

using namespace swervesafe;

namespace {
const Config kCfg = default_config();
const VehicleGeometry& kG = kCfg.geometry;
const SafetyParams& kP = kCfg.safety;

// First integration sample with y >= y_c, for clearance cross-checks.
oracles::BicycleSample first_crossing(const SwerveManoeuvre& m, double y_c,
                                      double dt = 1e-5) {
  const auto traj = oracles::integrate_bicycle_swerve(
      m.v, m.delta_c, m.beta_c, m.duration, kG, dt);
  for (const auto& s : traj) {
    if (s.y >= y_c) return s;
  }
  return traj.back();
}

}  // namespace

TEST_CASE("v=20 pins the manoeuvre parameters") {
  const SwerveManoeuvre m = build_swerve(20.0, kG, kP);
  CHECK(m.R_c == doctest::Approx(200.0).epsilon(1e-12));  // v^2 / a_lat_min
  CHECK(m.delta_c == doctest::Approx(0.01280).epsilon(1e-3));
  CHECK(m.beta_c == doctest::Approx(0.00685).epsilon(1e-3));
  CHECK(m.theta_max ==
        doctest::Approx(std::acos(1.0 - 3.7 / (2.0 * m.R_r))).epsilon(1e-12));
  CHECK(m.theta_max == doctest::Approx(0.1361).epsilon(1e-3));
  CHECK(m.psi_max == doctest::Approx(m.theta_max + m.beta_c).epsilon(1e-15));
  CHECK(m.R_r == doctest::Approx(m.R_c * std::cos(m.beta_c)).epsilon(1e-12));
  CHECK(m.duration ==
        doctest::Approx(2.0 * m.R_c * m.theta_max / 20.0).epsilon(1e-12));
}

TEST_CASE("low speed hits the steering-limited radius") {
  const double r_min =
      std::sqrt(std::pow(kG.wheelbase() / std::tan(kP.delta_max), 2) +
                kG.l_r * kG.l_r);
  CHECK(min_turn_radius_steering(kG, kP) == doctest::Approx(4.641).epsilon(1e-3));
  CHECK(min_turn_radius_steering(kG, kP) == doctest::Approx(r_min).epsilon(1e-12));
  const SwerveManoeuvre m = build_swerve(1.0, kG, kP);
  CHECK(m.R_c == doctest::Approx(r_min).epsilon(1e-12));
  CHECK(m.delta_c <= kP.delta_max + 1e-12);
}

TEST_CASE("literal steering-radius expression differs as printed") {
  const double lit = min_turn_radius_steering(kG, kP, FormulaMode::Literal);
  const double L = kG.wheelbase();
  CHECK(lit == doctest::Approx(std::sqrt(
                   L * L / (std::pow(std::tan(kP.delta_max), 2) +
                            kG.l_r * kG.l_r))).epsilon(1e-12));
  CHECK(lit != min_turn_radius_steering(kG, kP));
}

TEST_CASE("lateral comfort and steering bounds hold for all built swerves") {
  for (double v = 0.5; v <= 30.0; v += 0.5) {
    const SwerveManoeuvre m = build_swerve(v, kG, kP);
    CHECK(v * v / m.R_c <= kP.a_lat_min + 1e-12);
    CHECK(std::fabs(m.delta_c) <= kP.delta_max + 1e-12);
    CHECK(m.psi_max <= M_PI / 2 + 1e-12);
  }
}

TEST_CASE("degenerate inputs") {
  CHECK_THROWS_AS(build_swerve(0.0, kG, kP), DomainError);
  CHECK_THROWS_AS(build_swerve(-1.0, kG, kP), DomainError);

  SafetyParams p = kP;
  p.alpha = 0.0;
  const SwerveManoeuvre m = build_swerve(20.0, kG, p);
  CHECK(m.theta_max == 0.0);
  CHECK(m.duration == 0.0);

  // Lane offset no turning circle can reach.
  p.alpha = 50.0;
  CHECK_THROWS_AS(build_swerve(1.0, kG, p), DomainError);
}

TEST_CASE("trajectory endpoint meets the boundary conditions") {
  const SwerveManoeuvre m = build_swerve(20.0, kG, kP);
  const auto samples = sample_trajectory(m, 0.01);
  const TrajectorySample& end = samples.back();
  CHECK(end.t == doctest::Approx(m.duration).epsilon(1e-12));
  CHECK(end.y == doctest::Approx(kP.alpha).epsilon(1e-9));
  CHECK(std::fabs(end.theta) < 1e-9);

  // Monotone non-decreasing lateral progress (Assumption 2 shape). The
  // centre of mass wiggles by R_c(1 - cos(beta_c)) when the course angle
  // crosses zero late in the second arc; that is the only allowed dip.
  const double dip = m.R_c * (1.0 - std::cos(m.beta_c)) + 1e-12;
  for (size_t i = 1; i < samples.size(); ++i) {
    CHECK(samples[i].y >= samples[i - 1].y - dip);
  }
  for (const auto& s : samples) CHECK(s.y <= kP.alpha + dip);

  // dt = duration gives endpoints only.
  CHECK(sample_trajectory(m, m.duration).size() == 2);
}

TEST_CASE("samples lie on the current arc circle") {
  const SwerveManoeuvre m = build_swerve(17.0, kG, kP);
  // First-arc centre: (-R sin(beta), R cos(beta)); second-arc centre mirrors
  // about the switch point.
  const double cx1 = -m.R_c * std::sin(m.beta_c);
  const double cy1 = m.R_c * std::cos(m.beta_c);
  const double x_hat = m.R_c * (std::sin(m.psi_max) - std::sin(m.beta_c));
  const double y_hat = m.R_c * (std::cos(m.beta_c) - std::cos(m.psi_max));
  const double psi_hat = m.psi_max - 2.0 * m.beta_c;
  const double cx2 = x_hat + m.R_c * std::sin(psi_hat);
  const double cy2 = y_hat - m.R_c * std::cos(psi_hat);
  for (const auto& s : sample_trajectory(m, 0.01)) {
    const double r = s.t <= m.duration / 2.0
                         ? std::hypot(s.x - cx1, s.y - cy1)
                         : std::hypot(s.x - cx2, s.y - cy2);
    CHECK(r == doctest::Approx(m.R_c).epsilon(1e-9));
  }
}

TEST_CASE("first arc covers half the lane offset at the switch") {
  for (double v : {3.0, 8.0, 20.0, 30.0}) {
    const SwerveManoeuvre m = build_swerve(v, kG, kP);
    const TrajectorySample mid = state_at(m, m.duration / 2.0);
    // Centre-of-mass first-arc travel; the rear-axle symmetry statement
    // translates to R_r(1 - cos(theta_max)) = alpha/2.
    CHECK(m.R_r * (1.0 - std::cos(m.theta_max)) ==
          doctest::Approx(kP.alpha / 2.0).epsilon(1e-9));
    CHECK(mid.theta == doctest::Approx(m.theta_max).epsilon(1e-9));
  }
}

TEST_CASE("closed-form trajectory matches the bicycle ODE oracle") {
  const SwerveManoeuvre m = build_swerve(20.0, kG, kP);
  const auto oracle = oracles::integrate_bicycle_swerve(
      m.v, m.delta_c, m.beta_c, m.duration, kG, 1e-5);
  for (size_t i = 0; i < oracle.size(); i += 5000) {
    const TrajectorySample s = state_at(m, oracle[i].t);
    CHECK(s.x == doctest::Approx(oracle[i].x).epsilon(1e-6));
    CHECK(s.y == doctest::Approx(oracle[i].y).epsilon(1e-6));
    CHECK(s.theta == doctest::Approx(oracle[i].theta).epsilon(1e-6));
  }
}

TEST_CASE("clearance: trivial and branch behaviour") {
  const SwerveManoeuvre m = build_swerve(20.0, kG, kP);
  const ClearanceResult zero = clearance(m, 0.0);
  CHECK(zero.x_c == 0.0);
  CHECK(zero.t_c == 0.0);
  CHECK(zero.arc_case == ArcCase::FirstArc);

  // Branch boundary: both formulas agree to 1e-9.
  const double y_switch = m.R_c * (std::cos(m.beta_c) - std::cos(m.psi_max));
  const ClearanceResult lo = clearance(m, y_switch - 1e-10);
  const ClearanceResult hi = clearance(m, y_switch + 1e-10);
  CHECK(std::fabs(lo.x_c - hi.x_c) < 1e-6);
  CHECK(std::fabs(lo.t_c - hi.t_c) < 1e-6);
  CHECK(lo.arc_case == ArcCase::FirstArc);
  CHECK(hi.arc_case == ArcCase::SecondArc);

  CHECK_THROWS_AS(clearance(m, kP.alpha + 1e-6), DomainError);
}

TEST_CASE("clearance matches the integration oracle on random cases") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> speed(1.0, 30.0);
  std::uniform_real_distribution<double> frac(0.01, 0.99);
  for (int i = 0; i < 200; ++i) {
    const double v = speed(rng);
    const SwerveManoeuvre m = build_swerve(v, kG, kP);
    const double y_c = frac(rng) * kP.alpha;
    const ClearanceResult c = clearance(m, y_c);
    const oracles::BicycleSample s = first_crossing(m, y_c);
    CHECK(std::fabs(c.x_c - s.x) < 0.01);
    CHECK(std::fabs(c.t_c - s.t) < 0.001);
    CHECK(c.t_c <= m.duration + 1e-9);
    CHECK(c.x_c <= v * c.t_c + 1e-9);
  }
}
