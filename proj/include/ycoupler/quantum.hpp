#pragma once

#include <span>
#include <vector>

#include "ycoupler/catalog.hpp"

namespace ycoupler::quantum {

/// Two fully indistinguishable monochromatic photons entering adjacent ports
/// of a constrained beam-splitter.
struct TwoPhotonInput {
  catalog::BeamSplitterParams splitter;
};

/// Amplitude of the a^dagger b^dagger (one photon per output) term: r1 r2 + t1 t2.
/// The coefficients are read from the catalog beam-splitter matrix.
Complex coincidence_amplitude(const TwoPhotonInput& in);

struct CoincidencePoint {
  double r_mag;
  double probability;
};

/// |r1 r2 + t1 t2|^2 per grid point with all free phases at zero.
std::vector<CoincidencePoint> coincidence_probability_scan(std::span<const double> r_mag_grid);

/// N evenly spaced reflection magnitudes covering [0, 1].
std::vector<double> unit_grid(std::size_t points);

}  // namespace ycoupler::quantum
