#include <catch_amalgamated.hpp>

#include "support.hpp"
#include "ycoupler/error.hpp"
#include "ycoupler/quantum.hpp"

using namespace ycoupler;
using namespace ycoupler::quantum;
using testing::uniform;

TEST_CASE("coincidence amplitude") {
  const double half = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(coincidence_amplitude({{half, 0, 0, 0}})) < 1e-15);
  CHECK(std::abs(std::abs(coincidence_amplitude({{1.0, 0.4, -2.0, 1.0}})) - 1.0) < 1e-15);
  CHECK(std::abs(std::abs(coincidence_amplitude({{std::sqrt(1.0 / 3.0), 0, 0, 0}})) - 1.0 / 3.0) < 1e-15);

  std::mt19937_64 rng(51);
  for (int i = 0; i < 100; ++i) {
    const catalog::BeamSplitterParams p{uniform(rng, 0, 1), uniform(rng, -kPi, kPi), uniform(rng, -kPi, kPi),
                                        uniform(rng, -kPi, kPi)};
    // amplitude reduces to e^{i theta} (|r|^2 - |t|^2) under the phase constraint
    const double r2 = p.r_mag * p.r_mag;
    const Complex amp = coincidence_amplitude({p});
    CHECK(std::abs(std::abs(amp) - std::abs(2 * r2 - 1)) < 1e-12);
    CHECK(std::abs(amp - std::polar(1.0, p.arg_r1 + p.arg_r2) * (2 * r2 - 1)) < 1e-12);

    catalog::BeamSplitterParams balanced = p;
    balanced.r_mag = half;
    CHECK(std::abs(coincidence_amplitude({balanced})) < 1e-12);
  }
}

TEST_CASE("coincidence probability scan") {
  const std::vector<double> grid{0.0, 1.0 / std::sqrt(2.0), 0.6, 1.0};
  const auto scan = coincidence_probability_scan(grid);
  REQUIRE(scan.size() == 4);
  CHECK(scan[0].probability == Catch::Approx(1.0).margin(1e-15));
  CHECK(scan[1].probability < 1e-24);
  CHECK(scan[2].probability == Catch::Approx(0.0784).margin(1e-15));
  CHECK(scan[3].probability == Catch::Approx(1.0).margin(1e-15));

  const auto g = unit_grid(101);
  REQUIRE(g.size() == 101);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 1.0);
  for (const auto& pt : coincidence_probability_scan(g)) {
    const double r2 = pt.r_mag * pt.r_mag;
    CHECK(std::abs(pt.probability - (2 * r2 - 1) * (2 * r2 - 1)) < 1e-12);
  }
  CHECK_THROWS_AS(coincidence_probability_scan(std::vector<double>{0.5, 1.1}), InvalidArgument);
  CHECK_THROWS_AS(unit_grid(1), InvalidArgument);
}
