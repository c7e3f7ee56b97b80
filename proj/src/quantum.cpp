#include "ycoupler/quantum.hpp"

#include "ycoupler/error.hpp"

namespace ycoupler::quantum {

Complex coincidence_amplitude(const TwoPhotonInput& in) {
  const ScatteringMatrix bs = catalog::beam_splitter(in.splitter);
  // Photons enter ports 3 and 4 and leave through ports 1 (a) and 2 (b).
  const Complex r1 = bs(0, 2);
  const Complex t1 = bs(1, 2);
  const Complex r2 = bs(1, 3);
  const Complex t2 = bs(0, 3);
  return r1 * r2 + t1 * t2;
}

std::vector<CoincidencePoint> coincidence_probability_scan(std::span<const double> r_mag_grid) {
  std::vector<CoincidencePoint> out(r_mag_grid.size());
  for (std::size_t k = 0; k < r_mag_grid.size(); ++k) {
    const double r = r_mag_grid[k];
    if (!(r >= 0.0 && r <= 1.0)) throw InvalidArgument("coincidence scan: r_mag grid must lie in [0, 1]");
    TwoPhotonInput in;
    in.splitter.r_mag = r;
    out[k] = {r, std::norm(coincidence_amplitude(in))};
  }
  return out;
}

std::vector<double> unit_grid(std::size_t points) {
  if (points < 2) throw InvalidArgument("grid needs at least two points");
  std::vector<double> g(points);
  for (std::size_t k = 0; k < points; ++k) g[k] = static_cast<double>(k) / static_cast<double>(points - 1);
  return g;
}

}  // namespace ycoupler::quantum
