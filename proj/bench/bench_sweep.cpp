// Serial reference versus OpenMP kernels on the resonator sweeps.
#include <chrono>
#include <cstdio>
#include <algorithm>
#include <cmath>
#include <cstdlib>

#include <omp.h>

#include "ycoupler/gallery.hpp"
#include "ycoupler/spectral.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <class Fn>
double best_seconds(int repeats, Fn fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = Clock::now();
    fn();
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    if (s < best) best = s;
  }
  return best;
}

double max_record_difference(const ycoupler::spectral::SweepResult& a, const ycoupler::spectral::SweepResult& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    d = std::max(d, std::abs(a.records[i].R - b.records[i].R));
    d = std::max(d, std::abs(a.records[i].T - b.records[i].T));
  }
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace ycoupler;
  const std::size_t closed_points = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 2000000;
  const std::size_t solver_points = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 20000;
  const spectral::SpectralArm arm1{1.5, 1e-3};
  const spectral::SpectralArm arm2{1.5, 1.2e-3};
  const auto net = gallery::resonator_netlist({0.0, 0.0});

  std::printf("threads=%d\n", omp_get_max_threads());
  std::printf("%-16s %10s %12s %12s %8s %10s\n", "kernel", "points", "serial_s", "parallel_s", "speedup", "max_diff");

  {
    const auto k = spectral::linear_k_grid(1e6, 2e7, closed_points);
    spectral::SweepResult s, p;
    const double ts = best_seconds(3, [&] { s = spectral::sweep_resonator_serial(arm1, arm2, k); });
    const double tp = best_seconds(3, [&] { p = spectral::sweep_resonator(arm1, arm2, k); });
    std::printf("%-16s %10zu %12.4f %12.4f %8.2f %10.3g\n", "closed_form", closed_points, ts, tp, ts / tp,
                max_record_difference(s, p));
  }
  {
    const auto k = spectral::linear_k_grid(1e6, 2e7, solver_points);
    spectral::SweepResult s, p;
    const double ts = best_seconds(3, [&] { s = spectral::sweep_netlist_serial(net, arm1, arm2, k); });
    const double tp = best_seconds(3, [&] { p = spectral::sweep_netlist(net, arm1, arm2, k); });
    std::printf("%-16s %10zu %12.4f %12.4f %8.2f %10.3g\n", "network_solve", solver_points, ts, tp, ts / tp,
                max_record_difference(s, p));
  }
  return 0;
}
