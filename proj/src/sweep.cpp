#include "swervesafe/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "swervesafe/kinematic_swerve.hpp"
#include "swervesafe/particle_lower_bound.hpp"
#include "swervesafe/rotation_geometry.hpp"
#include "swervesafe/universal_distance.hpp"

namespace swervesafe {

std::vector<double> make_grid(double start, double stop, double step) {
  if (!(step > 0.0) || start > stop) {
    throw DomainError("make_grid: need step > 0 and start <= stop");
  }
  std::vector<double> grid;
  const long n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
  grid.reserve(static_cast<size_t>(n) + 1);
  for (long i = 0; i <= n; ++i) grid.push_back(start + i * step);
  return grid;
}

namespace {

SweepRow eval_row(double v, const Config& c, const ScenarioOptions& opt) {
  const VehicleGeometry& g = c.geometry;
  const SafetyParams& p = c.safety;
  SweepRow r;
  r.v = v;
  r.d_bb = d_brake_for_brake(v, v, p.rho, g, g, p, opt).distance;
  r.d_sb = d_swerve_for_brake(v, v, p.rho, g, g, p, opt).distance;
  r.d_bs = d_brake_for_swerve(v, v, p.rho, g, g, p, opt).distance;
  r.d_ss = d_swerve_for_swerve(v, v, p.rho, g, g, p, opt).distance;
  r.d_hat = uniform_illustration(v, p, g, opt);
  return r;
}

}  // namespace

std::vector<SweepRow> uniform_sweep_serial(const std::vector<double>& grid,
                                           const Config& c,
                                           const ScenarioOptions& opt) {
  std::vector<SweepRow> rows(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) rows[i] = eval_row(grid[i], c, opt);
  return rows;
}

std::vector<SweepRow> uniform_sweep(const std::vector<double>& grid,
                                    const Config& c,
                                    const ScenarioOptions& opt, int jobs) {
  std::vector<SweepRow> rows(grid.size());
  const long n = static_cast<long>(grid.size());
#ifdef _OPENMP
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
#endif
  for (long i = 0; i < n; ++i) {
    rows[static_cast<size_t>(i)] =
        eval_row(grid[static_cast<size_t>(i)], c, opt);
  }
  return rows;
}

std::vector<DynSweepRow> dynamic_sweep(const std::vector<double>& grid,
                                       const Config& c,
                                       const SwerveSearchOptions& sopt,
                                       int jobs) {
  const VehicleGeometry& g = c.geometry;
  const SafetyParams& p = c.safety;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  SwerveSearchOptions so = sopt;
  so.jobs = jobs;

  std::vector<DynSweepRow> rows(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) {
    const double v0 = grid[i];
    DynSweepRow& r = rows[i];
    r.v0 = v0;
    const SwerveManoeuvre m = build_swerve(v0, g, p);
    const double y_c = lateral_clearance(g, g, m.theta_max, p);
    r.x_c_kinematic =
        clearance(m, y_c).x_c + rotated_extents(g, m.theta_max).d_prime;
    r.x_c_lower = particle_clearance(v0, y_c, g, p).x_bar_c;
    try {
      r.x_c_dyn_constrained = find_swerve(v0, true, c.dynamic, g, p, so).x_c;
    } catch (const DomainError&) {
      r.x_c_dyn_constrained = nan;
    }
    try {
      r.x_c_dyn_unconstrained = find_swerve(v0, false, c.dynamic, g, p, so).x_c;
    } catch (const DomainError&) {
      r.x_c_dyn_unconstrained = nan;
    }
  }
  return rows;
}

namespace {

std::string format_row(std::initializer_list<double> vals) {
  std::string line;
  char buf[32];
  bool first = true;
  for (double v : vals) {
    if (!first) line += ',';
    first = false;
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    line += buf;
  }
  line += '\n';
  return line;
}

}  // namespace

std::string sweep_csv(const std::vector<SweepRow>& rows, const Config& c) {
  std::string out = "# config " + config_hash(c) + "\n";
  out += "v,d_bb,d_sb,d_bs,d_ss,d_hat\n";
  for (const SweepRow& r : rows) {
    out += format_row({r.v, r.d_bb, r.d_sb, r.d_bs, r.d_ss, r.d_hat});
  }
  return out;
}

std::string dyn_sweep_csv(const std::vector<DynSweepRow>& rows,
                          const Config& c) {
  std::string out = "# config " + config_hash(c) + "\n";
  out += "v0,x_c_kinematic,x_c_lower,x_c_dyn_constrained,x_c_dyn_unconstrained\n";
  for (const DynSweepRow& r : rows) {
    out += format_row({r.v0, r.x_c_kinematic, r.x_c_lower,
                       r.x_c_dyn_constrained, r.x_c_dyn_unconstrained});
  }
  return out;
}

}  // namespace swervesafe
