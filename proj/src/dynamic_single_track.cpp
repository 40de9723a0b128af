#include "swervesafe/dynamic_single_track.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "swervesafe/kinematic_swerve.hpp"
#include "swervesafe/rotation_geometry.hpp"

namespace swervesafe {

namespace {

constexpr double kMinSpeed = 0.5;  // below this the slip angles degenerate

double pacejka(const PacejkaCoefficients& c, double slip) {
  const double ba = c.B * slip;
  return c.D * std::sin(c.C * std::atan(ba - c.E * (ba - std::atan(ba))));
}

struct Derivative {
  double dx, dy, dv, dbeta, dpsi, domega, ddelta;
};

Derivative deriv(const DynamicState& s, double omega_delta, double f_lr,
                 const DynamicParams& dp, const VehicleGeometry& g) {
  if (s.v < kMinSpeed) {
    throw DomainError("single-track model: speed below slip-angle validity");
  }
  const double cb = std::cos(s.beta);
  const double sb = std::sin(s.beta);
  const double alpha_f =
      s.delta - std::atan((g.l_f * s.omega_z - s.v * sb) / (s.v * cb));
  const double alpha_r =
      std::atan((g.l_r * s.omega_z + s.v * sb) / (s.v * cb));
  const double f_sf = pacejka(dp.pacejka_front, alpha_f);
  const double f_sr = pacejka(dp.pacejka_rear, alpha_r);
  const double f_ax = 0.5 * dp.c_w * dp.rho_drag * dp.A * s.v * s.v;
  const double cd = std::cos(s.delta + s.beta);
  const double sd = std::sin(s.delta + s.beta);

  Derivative d;
  d.dx = s.v * std::cos(s.psi - s.beta);
  d.dy = s.v * std::sin(s.psi - s.beta);
  d.dv = ((f_lr - f_ax) * cb - f_sr * sb - f_sf * sd) / dp.m;
  d.dbeta = s.omega_z -
            ((f_lr - f_ax) * sb + f_sr * cb + f_sf * cd) / (dp.m * s.v);
  d.dpsi = s.omega_z;
  d.domega = (f_sf * g.l_f * std::cos(s.delta) - f_sr * g.l_r) / dp.I_zz;
  d.ddelta = omega_delta;
  return d;
}

DynamicState advance(const DynamicState& s, const Derivative& d, double h) {
  return {s.x + h * d.dx,       s.y + h * d.dy,
          s.v + h * d.dv,       s.beta + h * d.dbeta,
          s.psi + h * d.dpsi,   s.omega_z + h * d.domega,
          s.delta + h * d.ddelta};
}

}  // namespace

DynamicState step(const DynamicState& s, double omega_delta,
                  double f_long_demand, double dt, const DynamicParams& dp,
                  const VehicleGeometry& g) {
  // Longitudinal demand maps to rear-wheel force; front drive force is zero.
  const double f_lr = dp.m * f_long_demand;
  const Derivative k1 = deriv(s, omega_delta, f_lr, dp, g);
  const Derivative k2 = deriv(advance(s, k1, dt / 2), omega_delta, f_lr, dp, g);
  const Derivative k3 = deriv(advance(s, k2, dt / 2), omega_delta, f_lr, dp, g);
  const Derivative k4 = deriv(advance(s, k3, dt), omega_delta, f_lr, dp, g);
  DynamicState out = s;
  out.x += dt / 6 * (k1.dx + 2 * k2.dx + 2 * k3.dx + k4.dx);
  out.y += dt / 6 * (k1.dy + 2 * k2.dy + 2 * k3.dy + k4.dy);
  out.v += dt / 6 * (k1.dv + 2 * k2.dv + 2 * k3.dv + k4.dv);
  out.beta += dt / 6 * (k1.dbeta + 2 * k2.dbeta + 2 * k3.dbeta + k4.dbeta);
  out.psi += dt / 6 * (k1.dpsi + 2 * k2.dpsi + 2 * k3.dpsi + k4.dpsi);
  out.omega_z +=
      dt / 6 * (k1.domega + 2 * k2.domega + 2 * k3.domega + k4.domega);
  out.delta +=
      dt / 6 * (k1.ddelta + 2 * k2.ddelta + 2 * k3.ddelta + k4.ddelta);
  return out;
}

std::vector<DynamicState> simulate(double v0, const ManoeuvreControl& c,
                                   double dt, const DynamicParams& dp,
                                   const VehicleGeometry& g,
                                   const SafetyParams& p) {
  if (!(c.t_f > 0.0) || !(dt > 0.0)) {
    throw DomainError("simulate: t_f and dt must be > 0");
  }
  // Step count is rounded so each steering interval holds an integer number
  // of steps; switching times are then exact regardless of dt.
  const long n = 4 * std::max(1L, std::lround(std::ceil(c.t_f / (4.0 * dt))));
  const double h = c.t_f / static_cast<double>(n);
  const long per_quarter = n / 4;

  std::vector<DynamicState> traj;
  traj.reserve(static_cast<size_t>(n) + 1);
  DynamicState s{0.0, 0.0, v0, 0.0, 0.0, 0.0, 0.0};
  traj.push_back(s);
  for (long i = 0; i < n; ++i) {
    const double rate = c.steering_rates[static_cast<size_t>(i / per_quarter)];
    s = step(s, rate, -c.brake_input, h, dp, g);
    if (std::fabs(s.delta) > p.delta_max) {
      s.delta = std::copysign(p.delta_max, s.delta);
    }
    traj.push_back(s);
  }
  return traj;
}

namespace {

struct Candidate {
  double x_c = 0.0;
  double t_c = 0.0;
  double w1 = 0.0;
  double w3 = 0.0;
  double brake = 0.0;
  double t_f = 0.0;
  double peak_lat_accel = 0.0;
  double mean_lat_accel = 0.0;
};

struct TrajStats {
  double y_final, theta_final, theta_max, peak_lat_accel, mean_lat_accel;
};

TrajStats stats_of(const std::vector<DynamicState>& traj, double h) {
  TrajStats st{traj.back().y, traj.back().psi, 0.0, 0.0, 0.0};
  for (size_t i = 1; i < traj.size(); ++i) {
    st.theta_max = std::max(st.theta_max, std::fabs(traj[i].psi));
    const double dcourse = (traj[i].psi - traj[i - 1].psi) -
                           (traj[i].beta - traj[i - 1].beta);
    const double a_lat = std::fabs(traj[i].v * dcourse / h);
    st.peak_lat_accel = std::max(st.peak_lat_accel, a_lat);
    st.mean_lat_accel += a_lat;
  }
  st.mean_lat_accel /= static_cast<double>(traj.size() - 1);
  return st;
}

// (+w1, -w1, -w3, +w3): steer in, unwind, counter-steer, unwind. Ends with
// delta back at zero when unclamped.
ManoeuvreControl make_control(double w1, double w3, double brake, double t_f) {
  return {{w1, -w1, -w3, w3}, brake, t_f};
}

constexpr double kRateMax = 3.0;  // bisection bracket on steering rates [rad/s]
// Bracket width over 2^iters must resolve the boundary tolerances; the final
// heading is less sensitive to its rate than the final offset is to w1.
constexpr int kOuterIters = 17;
constexpr int kInnerIters = 13;

// Finds the counter-steer magnitude zeroing the final heading; nullopt when
// the simulation stalls (speed collapses under heavy braking).
std::optional<double> solve_w3(double v0, double w1, double brake, double t_f,
                               double dt, const DynamicParams& dp,
                               const VehicleGeometry& g,
                               const SafetyParams& p) {
  double lo = 0.0, hi = kRateMax;
  for (int it = 0; it < kInnerIters; ++it) {
    const double w3 = (lo + hi) / 2.0;
    double theta_final;
    try {
      theta_final =
          simulate(v0, make_control(w1, w3, brake, t_f), dt, dp, g, p)
              .back()
              .psi;
    } catch (const DomainError&) {
      return std::nullopt;
    }
    if (theta_final > 0.0) {
      lo = w3;  // still heading left: more counter-steer
    } else {
      hi = w3;
    }
  }
  return (lo + hi) / 2.0;
}

std::optional<Candidate> solve_grid_point(double v0, double brake, double t_f,
                                          double dt, const DynamicParams& dp,
                                          const VehicleGeometry& g,
                                          const SafetyParams& p,
                                          const SwerveSearchOptions& opt) {
  double lo = 0.0, hi = kRateMax;
  for (int it = 0; it < kOuterIters; ++it) {
    const double w1 = (lo + hi) / 2.0;
    const auto w3 = solve_w3(v0, w1, brake, t_f, dt, dp, g, p);
    if (!w3) {
      hi = w1;
      continue;
    }
    double y_final;
    try {
      y_final = simulate(v0, make_control(w1, *w3, brake, t_f), dt, dp, g, p)
                    .back()
                    .y;
    } catch (const DomainError&) {
      hi = w1;
      continue;
    }
    if (y_final < p.alpha) {
      lo = w1;
    } else {
      hi = w1;
    }
  }

  const double w1 = (lo + hi) / 2.0;
  const auto w3 = solve_w3(v0, w1, brake, t_f, dt, dp, g, p);
  if (!w3) return std::nullopt;
  std::vector<DynamicState> traj;
  try {
    traj = simulate(v0, make_control(w1, *w3, brake, t_f), dt, dp, g, p);
  } catch (const DomainError&) {
    return std::nullopt;
  }
  const long n = static_cast<long>(traj.size()) - 1;
  const double h = t_f / static_cast<double>(n);
  const TrajStats st = stats_of(traj, h);
  if (std::fabs(st.y_final - p.alpha) > opt.y_tol) return std::nullopt;
  if (std::fabs(st.theta_final) > opt.theta_tol) return std::nullopt;

  // Clearance against the rotation the manoeuvre actually exhibited.
  const double theta =
      std::min(st.theta_max, std::numbers::pi / 2.0);
  const double y_c = lateral_clearance(g, g, theta, p);
  const double d_prime = rotated_extents(g, theta).d_prime;
  for (size_t i = 0; i < traj.size(); ++i) {
    if (traj[i].y >= y_c) {
      Candidate c;
      c.x_c = traj[i].x + d_prime;
      c.t_c = static_cast<double>(i) * h;
      c.w1 = w1;
      c.w3 = *w3;
      c.brake = brake;
      c.t_f = t_f;
      c.peak_lat_accel = st.peak_lat_accel;
      c.mean_lat_accel = st.mean_lat_accel;
      return c;
    }
  }
  return std::nullopt;
}

}  // namespace

SwerveSearchResult find_swerve(double v0, bool constrained,
                               const DynamicParams& dp,
                               const VehicleGeometry& g,
                               const SafetyParams& p,
                               const SwerveSearchOptions& opt) {
  if (v0 < 2.0 * kMinSpeed) {
    throw DomainError("find_swerve: speed too low for the dynamic model");
  }
  const SwerveManoeuvre kin = build_swerve(v0, g, p);

  // Comfort mode brakes at most a_min_brake; feasibility mode is limited by
  // the driven rear axle's peak tire force.
  const double brake_cap =
      constrained ? p.a_min_brake : dp.pacejka_rear.D / dp.m;
  std::vector<double> brakes;
  for (double b = 0.0; b <= brake_cap + 1e-9; b += opt.brake_step)
    brakes.push_back(b);
  std::vector<double> times;
  for (double t = opt.t_f_min_factor * kin.duration;
       t <= opt.t_f_max_factor * kin.duration + 1e-9; t += opt.t_f_step)
    times.push_back(t);

  const long total = static_cast<long>(brakes.size() * times.size());
  std::vector<std::optional<Candidate>> found(static_cast<size_t>(total));

#ifdef _OPENMP
  const int threads = opt.jobs > 0 ? opt.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (long idx = 0; idx < total; ++idx) {
    const double brake = brakes[static_cast<size_t>(idx) / times.size()];
    const double t_f = times[static_cast<size_t>(idx) % times.size()];
    // Braking alone stalls the model before t_f: skip without simulating.
    if (v0 - brake * t_f < kMinSpeed) continue;
    found[static_cast<size_t>(idx)] =
        solve_grid_point(v0, brake, t_f, opt.search_dt, dp, g, p, opt);
  }

  // Lateral limits: instantaneous peaks are bounded by feasibility in both
  // modes; comfort additionally bounds the sustained (mean) level, matching
  // the constant a_lat_min arcs the kinematic swerve holds.
  const Candidate* best = nullptr;
  for (const auto& c : found) {
    if (!c) continue;
    if (c->peak_lat_accel > p.a_lat_max * 1.01) continue;
    if (constrained && c->mean_lat_accel > p.a_lat_min * 1.01) continue;
    if (!best || c->x_c < best->x_c) best = &*c;
  }
  if (!best) {
    throw DomainError("find_swerve: no manoeuvre met the boundary tolerances");
  }

  // Re-integrate the winning control at the fine step for the result.
  SwerveSearchResult r;
  r.control = make_control(best->w1, best->w3, best->brake, best->t_f);
  r.trajectory = simulate(v0, r.control, opt.dt, dp, g, p);
  const long n = static_cast<long>(r.trajectory.size()) - 1;
  r.dt = best->t_f / static_cast<double>(n);
  const TrajStats st = stats_of(r.trajectory, r.dt);
  r.y_final = st.y_final;
  r.theta_final = st.theta_final;
  r.theta_max = st.theta_max;
  r.peak_lat_accel = st.peak_lat_accel;
  r.mean_lat_accel = st.mean_lat_accel;

  const double theta = std::min(st.theta_max, std::numbers::pi / 2.0);
  const double y_c = lateral_clearance(g, g, theta, p);
  const double d_prime = rotated_extents(g, theta).d_prime;
  r.x_c = best->x_c;
  r.t_c = best->t_c;
  for (size_t i = 0; i < r.trajectory.size(); ++i) {
    if (r.trajectory[i].y >= y_c) {
      r.x_c = r.trajectory[i].x + d_prime;
      r.t_c = static_cast<double>(i) * r.dt;
      break;
    }
  }
  return r;
}

}  // namespace swervesafe
