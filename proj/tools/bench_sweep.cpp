// Benchmarks the OpenMP sweep kernel against the serial reference and checks
// that both produce identical rows.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "swervesafe/sweep.hpp"

using namespace swervesafe;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  const double step = argc > 1 ? std::stod(argv[1]) : 2e-4;
  const Config cfg = default_config();
  const std::vector<double> grid = make_grid(0.0, 30.0, step);
  std::printf("grid points: %zu\n", grid.size());

  auto t0 = std::chrono::steady_clock::now();
  const auto serial = uniform_sweep_serial(grid, cfg);
  const double t_serial = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  const auto parallel = uniform_sweep(grid, cfg);
  const double t_parallel = seconds_since(t0);

  size_t mismatches = 0;
  for (size_t i = 0; i < grid.size(); ++i) {
    if (serial[i].d_bb != parallel[i].d_bb ||
        serial[i].d_sb != parallel[i].d_sb ||
        serial[i].d_bs != parallel[i].d_bs ||
        serial[i].d_ss != parallel[i].d_ss ||
        serial[i].d_hat != parallel[i].d_hat) {
      ++mismatches;
    }
  }

  std::printf("serial:   %.3f s\n", t_serial);
  std::printf("parallel: %.3f s  (speedup %.2fx)\n", t_parallel,
              t_serial / t_parallel);
  std::printf("mismatching rows: %zu\n", mismatches);
  return mismatches == 0 ? 0 : 1;
}
