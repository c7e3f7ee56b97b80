#include "ycoupler/gallery.hpp"

#include <cmath>

#include "ycoupler/error.hpp"

namespace ycoupler::gallery {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;
constexpr std::size_t kLoopBounceLimit = 100000;
constexpr double kLoopEmpty = 1e-15;

network::Device y_device(std::string id) { return {std::move(id), catalog::symmetric_y()}; }

}  // namespace

Complex ResonatorPhases::b() const { return 0.5 * (std::polar(1.0, phi1) + std::polar(1.0, phi2)); }
Complex ResonatorPhases::c() const { return 0.5 * (std::polar(1.0, phi1) - std::polar(1.0, phi2)); }

ScatteringMatrix generalized_grover(double phi) {
  const Complex e = 0.5 * std::polar(1.0, phi);
  return ScatteringMatrix::from_rows({{-0.5, 0.5, e, e},
                                      {0.5, -0.5, e, e},
                                      {e, e, -0.5, 0.5},
                                      {e, e, 0.5, -0.5}});
}

Complex loop_mirror_reflection(double loop_phase, const ScatteringMatrix& y) {
  if (y.dim() != 3) throw DimensionMismatch("loop mirror needs a three-port coupler");
  const Complex e = std::polar(1.0, loop_phase);
  Complex r = y(0, 0);
  // amplitudes leaving ports 2 and 3 into the loop
  Complex out2 = y(1, 0);
  Complex out3 = y(2, 0);
  for (std::size_t bounce = 0; bounce < kLoopBounceLimit; ++bounce) {
    if (std::abs(out2) + std::abs(out3) <= kLoopEmpty) return r;
    // each leg of the loop feeds the opposite port
    const Complex in2 = e * out3;
    const Complex in3 = e * out2;
    r += y(0, 1) * in2 + y(0, 2) * in3;
    out2 = y(1, 1) * in2 + y(1, 2) * in3;
    out3 = y(2, 1) * in2 + y(2, 2) * in3;
  }
  throw NotConverged("loop mirror: light still circulating after the bounce limit", kLoopBounceLimit);
}

MichelsonOutputs michelson_outputs(double phi) {
  const Complex e = std::polar(1.0, phi);
  return {(e - 1.0) / 2.0, (e + 1.0) / 2.0};
}

ResonatorAmplitudes resonator_rt(const ResonatorPhases& p) {
  const Complex b = p.b();
  const Complex c = p.c();
  const Complex denom = 1.0 - b * b;
  if (std::abs(c) < kResonatorLimitTol && std::abs(denom) < kResonatorLimitTol) {
    return {0.0, b, true};
  }
  const Complex r = -(c * c) / denom;
  return {r, b * (1.0 - r), false};
}

SupermodeCoeffs supermode_roundtrip_coeffs(const ResonatorPhases& p) {
  const Complex b = p.b();
  const Complex c = p.c();
  return {b * b, kSqrt2 * c, -kSqrt2 * b * c};
}

SupermodeRelease supermode_series(const ResonatorPhases& p, std::size_t round_trips) {
  const SupermodeCoeffs k = supermode_roundtrip_coeffs(p);
  SupermodeRelease sum{0.0, 0.0};
  Complex weight = 1.0;
  for (std::size_t n = 0; n < round_trips; ++n) {
    sum.a += weight * k.leak_a;
    sum.b += weight * k.leak_b;
    weight *= k.feedback;
  }
  return sum;
}

SupermodeRelease supermode_steady_state(const ResonatorPhases& p) {
  const Complex b = p.b();
  const Complex c = p.c();
  const Complex denom = 1.0 - b * b;
  return {kSqrt2 * c / denom, -kSqrt2 * b * c / denom};
}

network::Netlist grover4_netlist(double phi) {
  network::Netlist n;
  n.devices = {y_device("Y1"), y_device("Y2")};
  n.links = {{{"Y1", 0}, {"Y2", 0}, phi, "bridge"}};
  n.externals = {{"Y1", 1}, {"Y1", 2}, {"Y2", 1}, {"Y2", 2}};
  return n;
}

network::Netlist loop_mirror_netlist(double loop_phase) {
  network::Netlist n;
  n.devices = {y_device("Y")};
  n.links = {{{"Y", 1}, {"Y", 2}, loop_phase, "loop"}};
  n.externals = {{"Y", 0}};
  return n;
}

network::Netlist michelson_netlist(double phi) {
  network::Netlist n;
  n.devices = {y_device("Y"), {"M", catalog::mirror(0.0)}};
  // the link is crossed twice per round trip
  n.links = {{{"Y", 0}, {"M", 0}, 0.5 * phi, "arm"}};
  n.externals = {{"Y", 1}, {"Y", 2}};
  return n;
}

network::Netlist resonator_netlist(const ResonatorPhases& p) {
  network::Netlist n;
  n.devices = {y_device("Y1"), y_device("Y2")};
  n.links = {{{"Y1", 1}, {"Y2", 1}, p.phi1, "arm1"}, {{"Y1", 2}, {"Y2", 2}, p.phi2, "arm2"}};
  n.externals = {{"Y1", 0}, {"Y2", 0}};
  return n;
}

}  // namespace ycoupler::gallery
