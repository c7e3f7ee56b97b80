#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "ycoupler/network.hpp"

/// Wavelength sweeps of the two-coupler resonator.
///
/// Every sweep exists twice: a serial reference (`*_serial`) and an OpenMP
/// kernel that splits the k grid across threads. Both write record k from
/// grid point k only, so their outputs are identical element for element.
namespace ycoupler::spectral {

/// Dispersion-free arm: phi(k) = k * n * length, k the free-space wavenumber (rad/m).
struct SpectralArm {
  double n = 1.0;
  double length = 0.0;

  double optical_length() const noexcept { return n * length; }
  double phase(double k) const noexcept { return k * n * length; }
};

struct SweepRecord {
  double k;
  double lambda;
  double R;
  double T;
};

struct SweepResult {
  std::vector<SweepRecord> records;
  SpectralArm arm1;
  SpectralArm arm2;
};

struct Notch {
  double center_k;
  double width_k;
  double min_T;
};

/// `points` evenly spaced wavenumbers on [kmin, kmax].
std::vector<double> linear_k_grid(double kmin, double kmax, std::size_t points);

/// Closed-form resonator response at each k.
SweepResult sweep_resonator(const SpectralArm& arm1, const SpectralArm& arm2, std::span<const double> k_grid);
SweepResult sweep_resonator_serial(const SpectralArm& arm1, const SpectralArm& arm2,
                                   std::span<const double> k_grid);

/// Network-solver response: drives the links labeled "arm1" and "arm2",
/// reads R = |S_11|^2 and T = |S_21|^2 over the first two externals.
SweepResult sweep_netlist(const network::Netlist& n, const SpectralArm& arm1, const SpectralArm& arm2,
                          std::span<const double> k_grid, double tol = kDefaultTol);
SweepResult sweep_netlist_serial(const network::Netlist& n, const SpectralArm& arm1, const SpectralArm& arm2,
                                 std::span<const double> k_grid, double tol = kDefaultTol);

/// Contiguous runs with T < threshold. The center is the grid point of
/// minimum T inside the run; the width is measured between the threshold
/// crossings, linearly interpolated (clipped to the grid at the edges).
/// Runs whose minimum falls on the first or last grid point are dropped.
std::vector<Notch> notch_metrics(const SweepResult& s, double threshold);

/// Wavenumbers in [kmin, kmax] where B = 0, i.e. phi1 - phi2 = pi mod 2pi.
std::vector<double> b_zeros(const SpectralArm& arm1, const SpectralArm& arm2, double kmin, double kmax);
/// Wavenumbers in [kmin, kmax] where phi1 + phi2 = 0 mod 2pi while C != 0.
/// The resonator reflects fully there (r = 1) as well.
std::vector<double> resonance_zeros(const SpectralArm& arm1, const SpectralArm& arm2, double kmin, double kmax);

/// Header "k,lambda,R,T", then one record per line with 12 significant digits.
void write_csv(std::ostream& os, const SweepResult& s);

}  // namespace ycoupler::spectral
