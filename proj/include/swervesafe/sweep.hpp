#pragma once

#include <string>
#include <vector>

#include "swervesafe/config.hpp"
#include "swervesafe/dynamic_single_track.hpp"
#include "swervesafe/scenario_distances.hpp"

namespace swervesafe {

// One grid point of the uniform-speed sweep.
struct SweepRow {
  double v = 0.0;
  double d_bb = 0.0;
  double d_sb = 0.0;
  double d_bs = 0.0;
  double d_ss = 0.0;
  double d_hat = 0.0;  // uniform universal following distance
};

// One grid point of the dynamic-model validation sweep. NaN marks a column
// whose search failed (recorded, not fatal).
struct DynSweepRow {
  double v0 = 0.0;
  double x_c_kinematic = 0.0;
  double x_c_lower = 0.0;
  double x_c_dyn_constrained = 0.0;
  double x_c_dyn_unconstrained = 0.0;
};

std::vector<double> make_grid(double start, double stop, double step);

// OpenMP-parallel over grid points; jobs = 0 uses all available threads,
// jobs = 1 matches uniform_sweep_serial bit for bit.
std::vector<SweepRow> uniform_sweep(const std::vector<double>& grid,
                                    const Config& c,
                                    const ScenarioOptions& opt = {},
                                    int jobs = 0);

// Plain serial loop kept as the reference implementation for testing and
// benchmarking the parallel kernel.
std::vector<SweepRow> uniform_sweep_serial(const std::vector<double>& grid,
                                           const Config& c,
                                           const ScenarioOptions& opt = {});

std::vector<DynSweepRow> dynamic_sweep(const std::vector<double>& grid,
                                       const Config& c,
                                       const SwerveSearchOptions& sopt = {},
                                       int jobs = 0);

// CSV with a `# config <hash>` provenance header, 9 significant digits.
std::string sweep_csv(const std::vector<SweepRow>& rows, const Config& c);
std::string dyn_sweep_csv(const std::vector<DynSweepRow>& rows,
                          const Config& c);

}  // namespace swervesafe
