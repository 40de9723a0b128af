#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "swervesafe/rss_core.hpp"

using namespace swervesafe;

namespace {
const Config kCfg = default_config();
const SafetyParams& kP = kCfg.safety;
const VehicleGeometry& kG = kCfg.geometry;
}  // namespace

TEST_CASE("positive part") {
  CHECK(positive_part(-3.2) == 0.0);
  CHECK(positive_part(0.0) == 0.0);
  CHECK(positive_part(79.02) == 79.02);
}

TEST_CASE("longitudinal distance: published-parameter pins") {
  CHECK(d_long_brake_brake({20.0, 20.0}, kP) == doctest::Approx(79.02).epsilon(1e-9));

  SafetyParams p0 = kP;
  p0.rho = 0.0;
  CHECK(d_long_brake_brake({0.0, 0.0}, p0) == 0.0);
  CHECK(d_long_brake_brake({0.0, 30.0}, p0) == 0.0);
}

TEST_CASE("longitudinal distance matches the braking simulation oracle") {
  // Spacing at the computed distance must never close the gap; spacing a bit
  // under it must close for the pinned scenario.
  const double d = d_long_brake_brake({20.0, 20.0}, kP);
  CHECK(oracles::min_gap_brake_brake(20.0, 20.0, d, kP) >= -1e-6);
  CHECK(oracles::min_gap_brake_brake(20.0, 20.0, d - 0.1, kP) < 0.0);
}

TEST_CASE("oracle equivalence over random scenarios") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> speed(0.0, 30.0);
  int tight_hits = 0, tight_total = 0;
  for (int i = 0; i < 1000; ++i) {
    const double v_r = speed(rng), v_f = speed(rng);
    const double d = d_long_brake_brake({v_r, v_f}, kP);
    // 1 ms discretization bias is a few millimetres at these speeds.
    CHECK(oracles::min_gap_brake_brake(v_r, v_f, d, kP) >= -0.01);
    if (d > 0.5) {
      ++tight_total;
      if (oracles::min_gap_brake_brake(v_r, v_f, 0.95 * d, kP) < 0.0)
        ++tight_hits;
    }
  }
  // 95% spacing must collide in some scenarios (the bound is not vacuous).
  CHECK(tight_total > 0);
  CHECK(tight_hits > 0);
}

TEST_CASE("literal mode evaluates the braking term as printed") {
  const double corrected = d_long_brake_brake({20.0, 20.0}, kP);
  const double literal =
      d_long_brake_brake({20.0, 20.0}, kP, FormulaMode::Literal);
  // (v_r + v_rp)^2 vs v_rp^2 in the braking term.
  const double v_rp = 20.0 + kP.a_max_accel * kP.rho;
  const double expected_gap =
      ((20.0 + v_rp) * (20.0 + v_rp) - v_rp * v_rp) / (2.0 * kP.a_min_brake);
  CHECK(literal - corrected == doctest::Approx(expected_gap).epsilon(1e-12));
}

TEST_CASE("monotonicity in both speeds") {
  double prev = -1.0;
  for (double v = 0.0; v <= 30.0; v += 0.5) {
    const double d = d_long_brake_brake({v, 10.0}, kP);
    CHECK(d >= prev);
    prev = d;
  }
  prev = 1e9;
  for (double v = 0.0; v <= 30.0; v += 0.5) {
    const double d = d_long_brake_brake({15.0, v}, kP);
    CHECK(d <= prev);
    prev = d;
  }
}

TEST_CASE("lateral distance: pins and oracle") {
  SafetyParams p0 = kP;
  p0.rho = 0.0;
  CHECK(d_lat({0.0, 0.0}, p0) == doctest::Approx(kP.mu).epsilon(1e-15));

  const double d0 = d_lat({0.0, 0.0}, kP);
  CHECK(d0 == doctest::Approx(0.22).epsilon(1e-9));
  CHECK(oracles::min_lat_gap(0.0, 0.0, d0, kP) >= kP.mu - 1e-4);

  // Positive lateral speed means moving away; the first vehicle closing at
  // 0.5 m/s enters as -0.5. The oracle's bottom agent plays the second
  // vehicle's role (its worst case accelerates upward), the top agent the
  // first vehicle's.
  const double d1 = d_lat({-0.5, 0.0}, kP);
  CHECK(d1 > d0);
  CHECK(oracles::min_lat_gap(0.0, -0.5, d1, kP) >= kP.mu - 1e-4);
  CHECK(oracles::min_lat_gap(0.0, -0.5, d1 - 0.05, kP) < kP.mu);
}

TEST_CASE("lateral distance never drops below the buffer") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> lat(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    CHECK(d_lat({lat(rng), lat(rng)}, kP) >= kP.mu);
  }
}

TEST_CASE("adjacency predicates use closed intervals") {
  CHECK(laterally_adjacent(5.0, 5.0, kG));
  CHECK(laterally_adjacent(0.0, kG.d_f + kG.d_r, kG));
  CHECK_FALSE(laterally_adjacent(0.0, kG.d_f + kG.d_r + 0.01, kG));

  const double dl = 0.22;
  CHECK(longitudinally_adjacent(0.0, kG.b_l + kG.b_r + dl, dl, kG));
  CHECK_FALSE(longitudinally_adjacent(0.0, kG.b_l + kG.b_r + dl + 0.01, dl, kG));
}
