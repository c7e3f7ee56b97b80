#include <catch_amalgamated.hpp>

#include "support.hpp"
#include "ycoupler/error.hpp"
#include "ycoupler/gallery.hpp"

using namespace ycoupler;
using namespace ycoupler::gallery;
using testing::uniform;

TEST_CASE("resonator phases") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    const ResonatorPhases p{uniform(rng, -10, 10), uniform(rng, -10, 10)};
    CHECK(std::abs(std::norm(p.b()) + std::norm(p.c()) - 1.0) < 1e-14);
  }
  CHECK(std::abs(ResonatorPhases{0.0, kPi}.b()) < 1e-15);
  CHECK(std::abs(ResonatorPhases{1.3, 1.3}.c()) == 0.0);
}

TEST_CASE("generalized Grover four-port") {
  CHECK(max_abs_difference(generalized_grover(0.0), catalog::grover(4)) == 0.0);
  const auto g = generalized_grover(kPi);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const bool cross = (i < 2) != (j < 2);
      const double expect = i == j ? -0.5 : (cross ? -0.5 : 0.5);
      CHECK(std::abs(g(i, j) - expect) < 1e-15);
    }
  std::mt19937_64 rng(42);
  for (int i = 0; i < 30; ++i) {
    const auto s = generalized_grover(uniform(rng, -kPi, kPi));
    CHECK(testing::unitarity_gap(s) < 1e-12);
    CHECK(testing::reciprocity_gap(s) == 0.0);
  }
}

TEST_CASE("loop mirror") {
  CHECK(std::abs(std::abs(loop_mirror_reflection(0.0)) - 1.0) < 1e-12);
  CHECK(std::abs(loop_mirror_reflection(0.0)) == Catch::Approx(std::abs(loop_mirror_reflection(1.3))).margin(1e-12));
  std::mt19937_64 rng(43);
  for (int i = 0; i < 50; ++i) {
    const double phi = uniform(rng, -kPi, kPi);
    const Complex r = loop_mirror_reflection(phi);
    CHECK(std::abs(std::abs(r) - 1.0) < 1e-12);
    const double dress = uniform(rng, -kPi, kPi);
    CHECK(std::abs(std::abs(loop_mirror_reflection(phi, catalog::symmetric_y_phase(dress))) - 1.0) < 1e-12);
  }
  CHECK_THROWS_AS(loop_mirror_reflection(0.0, catalog::grover(4)), DimensionMismatch);
}

TEST_CASE("Michelson outputs") {
  const auto m0 = michelson_outputs(0.0);
  CHECK(std::abs(m0.back) == 0.0);
  CHECK(std::abs(m0.through - 1.0) == 0.0);
  const auto mp = michelson_outputs(kPi);
  CHECK(std::abs(mp.back + 1.0) < 1e-15);
  CHECK(std::abs(mp.through) < 1e-15);
  const auto mh = michelson_outputs(kPi / 2);
  CHECK(mh.p_back() == Catch::Approx(0.5).margin(1e-15));
  CHECK(mh.p_through() == Catch::Approx(0.5).margin(1e-15));
  std::mt19937_64 rng(44);
  for (int i = 0; i < 50; ++i) {
    const double phi = uniform(rng, -kPi, kPi);
    const auto m = michelson_outputs(phi);
    CHECK(std::abs(m.p_back() + m.p_through() - 1.0) < 1e-12);
    CHECK(std::abs(m.p_back() - std::pow(std::sin(phi / 2), 2)) < 1e-12);
  }
}

TEST_CASE("resonator closed form") {
  const auto eq = resonator_rt({kPi / 2, kPi / 2});
  CHECK(std::abs(eq.r) < 1e-15);
  CHECK(std::abs(eq.t - Complex(0, 1)) < 1e-15);
  CHECK_FALSE(eq.limit_rule);

  const auto notch = resonator_rt({0.0, kPi});
  CHECK(std::abs(notch.r + 1.0) < 1e-15);
  CHECK(std::abs(notch.t) < 1e-15);

  const auto limit = resonator_rt({0.0, 0.0});
  CHECK(limit.limit_rule);
  CHECK(limit.r == Complex(0, 0));
  CHECK(limit.t == Complex(1, 0));

  SECTION("near the double zero the raw formula still holds") {
    const auto near = resonator_rt({1e-6, 0.0});
    CHECK_FALSE(near.limit_rule);
    CHECK(std::abs(near.r) < 1e-6);
    CHECK(std::abs(std::norm(near.r) + std::norm(near.t) - 1.0) < 1e-12);
  }

  SECTION("zeros of T: B = 0 and the resonance phi1 + phi2 = 0 mod 2pi") {
    std::mt19937_64 rng(45);
    for (int i = 0; i < 40; ++i) {
      const double a = uniform(rng, -kPi, kPi);
      CHECK(std::norm(resonator_rt({a, a + kPi}).t) < 1e-24);
      const double d = uniform(rng, 0.1, 2 * kPi - 0.1);
      const double p1 = 0.5 * d;
      CHECK(std::norm(resonator_rt({p1, -p1 + 2 * kPi * (i % 3)}).t) < 1e-24);
    }
  }

  SECTION("lossless and symmetric over the phase torus") {
    constexpr int kN = 200;
    for (int i = 0; i < kN; ++i) {
      for (int j = 0; j < kN; ++j) {
        const double p1 = 2 * kPi * i / kN;
        const double p2 = 2 * kPi * j / kN;
        const auto a = resonator_rt({p1, p2});
        const auto b = resonator_rt({p2, p1});
        REQUIRE(std::abs(std::norm(a.r) + std::norm(a.t) - 1.0) < 1e-12);
        REQUIRE(std::abs(a.r - b.r) < 1e-12);
        REQUIRE(std::abs(a.t - b.t) < 1e-12);
      }
    }
  }
}

TEST_CASE("supermode recursion") {
  SECTION("equal arms leave the supermode dark") {
    const auto k = supermode_roundtrip_coeffs({0.8, 0.8});
    CHECK(std::abs(k.feedback - std::polar(1.0, 1.6)) < 1e-15);
    CHECK(k.leak_a == Complex(0, 0));
  }
  SECTION("opposite arms empty in one round trip") {
    const auto k = supermode_roundtrip_coeffs({0.0, kPi});
    CHECK(std::abs(k.feedback) < 1e-15);
  }
  SECTION("geometric sum converges to the steady state within the tail bound") {
    std::mt19937_64 rng(46);
    for (int i = 0; i < 50; ++i) {
      const ResonatorPhases p{uniform(rng, -kPi, kPi), uniform(rng, -kPi, kPi)};
      const double b2 = std::norm(p.b());
      if (b2 > 0.99) continue;
      const auto k = supermode_roundtrip_coeffs(p);
      const auto inf = supermode_steady_state(p);
      CHECK(std::abs(inf.a - std::sqrt(2.0) * p.c() / (1.0 - p.b() * p.b())) < 1e-12);
      for (std::size_t t : {1, 5, 30}) {
        const auto part = supermode_series(p, t);
        const double tail = std::pow(b2, static_cast<double>(t)) / (1 - b2);
        CHECK(std::abs(part.a - inf.a) <= tail * std::abs(k.leak_a) + 1e-14);
        CHECK(std::abs(part.b - inf.b) <= tail * std::abs(k.leak_b) + 1e-14);
      }
    }
  }
  SECTION("released amplitudes reproduce the closed-form reflection") {
    // light entering port 1 of the first coupler splits 1/sqrt2 into each arm
    // and the antisymmetric part returns as -C^2/(1 - B^2)
    std::mt19937_64 rng(47);
    for (int i = 0; i < 50; ++i) {
      const ResonatorPhases p{uniform(rng, -kPi, kPi), uniform(rng, -kPi, kPi)};
      const auto s = supermode_steady_state(p);
      const Complex c = p.c();
      if (std::abs(1.0 - p.b() * p.b()) < 1e-6) continue;
      CHECK(std::abs(-s.a * c / std::sqrt(2.0) - resonator_rt(p).r) < 1e-12);
    }
  }
}

TEST_CASE("builders describe the intended topologies") {
  const auto g = grover4_netlist(0.3);
  CHECK(g.links.size() == 1);
  CHECK(g.links[0].label == "bridge");
  CHECK(g.externals.size() == 4);
  CHECK(loop_mirror_netlist(0.0).externals.size() == 1);
  const auto m = michelson_netlist(1.0);
  CHECK(m.links[0].phase == 0.5);
  const auto r = resonator_netlist({0.1, 0.2});
  CHECK(r.links[0].label == "arm1");
  CHECK(r.links[1].phase == 0.2);
}
