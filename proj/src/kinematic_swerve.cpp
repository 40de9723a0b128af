#include "swervesafe/kinematic_swerve.hpp"

#include <cmath>
#include <numbers>

namespace swervesafe {

double min_turn_radius_steering(const VehicleGeometry& g,
                                const SafetyParams& p, FormulaMode mode) {
  const double L = g.wheelbase();
  const double t = std::tan(p.delta_max);
  if (mode == FormulaMode::Literal) {
    // As printed: the l_r^2 term shares the denominator with tan^2.
    return std::sqrt(L * L / (t * t + g.l_r * g.l_r));
  }
  // Radius of the centre of mass when the steering is held at delta_max.
  return std::sqrt((L / t) * (L / t) + g.l_r * g.l_r);
}

SwerveManoeuvre build_swerve(double v, const VehicleGeometry& g,
                             const SafetyParams& p, FormulaMode mode) {
  if (!(v > 0.0)) throw DomainError("build_swerve: manoeuvre speed must be > 0");
  const double L = g.wheelbase();

  SwerveManoeuvre m;
  m.v = v;
  m.alpha = p.alpha;
  m.R_c = std::max(min_turn_radius_steering(g, p, mode),
                   v * v / p.a_lat_min);
  if (m.R_c * m.R_c <= g.l_r * g.l_r) {
    throw DomainError("build_swerve: turn radius not larger than l_r");
  }
  m.delta_c = std::atan(std::sqrt(L * L / (m.R_c * m.R_c - g.l_r * g.l_r)));
  m.beta_c = std::atan(g.l_r * std::tan(m.delta_c) / L);
  m.R_r = L / std::tan(m.delta_c);

  const double arg = 1.0 - p.alpha / (2.0 * m.R_r);
  if (arg < -1.0) {
    throw DomainError("build_swerve: lane offset unreachable at this radius");
  }
  m.theta_max = std::acos(arg);
  m.psi_max = m.theta_max + m.beta_c;
  if (m.psi_max > std::numbers::pi / 2.0 + 1e-12) {
    throw DomainError("build_swerve: course angle would exceed pi/2");
  }
  m.duration = 2.0 * m.R_c * m.theta_max / v;
  return m;
}

ClearanceResult clearance(const SwerveManoeuvre& m, double y_c) {
  if (y_c < 0.0) throw DomainError("clearance: y_c must be >= 0");
  ClearanceResult r;
  if (y_c == 0.0) return r;  // clears at the start
  if (y_c > m.alpha + 1e-9) {
    throw DomainError("clearance: swerve never reaches y_c");
  }

  const double Rc = m.R_c;
  const double cb = std::cos(m.beta_c);
  // Lateral travel over the first arc (centre of mass).
  const double y_hat = Rc * (cb - std::cos(m.psi_max));

  if (y_c <= y_hat) {
    r.arc_case = ArcCase::FirstArc;
    r.psi_c = std::acos(cb - y_c / Rc);
    r.x_c = Rc * (std::sin(r.psi_c) - std::sin(m.beta_c));
    r.t_c = Rc * (r.psi_c - m.beta_c) / m.v;
    return r;
  }

  r.arc_case = ArcCase::SecondArc;
  const double psi_hat = m.psi_max - 2.0 * m.beta_c;
  const double x_hat = Rc * (std::sin(m.psi_max) - std::sin(m.beta_c));
  double arg = (y_c - y_hat) / Rc + std::cos(psi_hat);
  if (arg > 1.0) arg = 1.0;
  // Past the course-angle zero crossing the same cosine value corresponds to
  // the negative angle.
  const double y_at_zero = y_hat + Rc * (1.0 - std::cos(psi_hat));
  r.psi_c = y_c <= y_at_zero ? std::acos(arg) : -std::acos(arg);
  r.x_c = Rc * (std::sin(psi_hat) - std::sin(r.psi_c)) + x_hat;
  r.t_c = Rc * (m.psi_max - m.beta_c + psi_hat - r.psi_c) / m.v;
  return r;
}

TrajectorySample state_at(const SwerveManoeuvre& m, double t) {
  TrajectorySample s;
  s.t = t;
  if (m.duration <= 0.0) return s;
  if (t < 0.0) t = 0.0;
  if (t > m.duration) t = m.duration;

  const double Rc = m.R_c;
  const double half = m.duration / 2.0;
  if (t <= half) {
    const double psi = m.beta_c + m.v * t / Rc;
    s.psi = psi;
    s.theta = psi - m.beta_c;
    s.x = Rc * (std::sin(psi) - std::sin(m.beta_c));
    s.y = Rc * (std::cos(m.beta_c) - std::cos(psi));
    return s;
  }
  const double psi_hat = m.psi_max - 2.0 * m.beta_c;
  const double x_hat = Rc * (std::sin(m.psi_max) - std::sin(m.beta_c));
  const double y_hat = Rc * (std::cos(m.beta_c) - std::cos(m.psi_max));
  const double psi = psi_hat - m.v * (t - half) / Rc;
  s.psi = psi;
  s.theta = psi + m.beta_c;
  s.x = x_hat + Rc * (std::sin(psi_hat) - std::sin(psi));
  s.y = y_hat + Rc * (std::cos(psi) - std::cos(psi_hat));
  return s;
}

std::vector<TrajectorySample> sample_trajectory(const SwerveManoeuvre& m,
                                                double dt) {
  if (!(dt > 0.0)) throw DomainError("sample_trajectory: dt must be > 0");
  std::vector<TrajectorySample> out;
  const long n = static_cast<long>(std::floor(m.duration / dt + 1e-12));
  out.reserve(static_cast<size_t>(n) + 2);
  for (long k = 0; k <= n; ++k) out.push_back(state_at(m, k * dt));
  if (n * dt < m.duration - 1e-12) out.push_back(state_at(m, m.duration));
  return out;
}

}  // namespace swervesafe
