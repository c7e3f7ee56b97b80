#pragma once

#include <cstddef>

#include "ycoupler/catalog.hpp"
#include "ycoupler/core.hpp"
#include "ycoupler/network.hpp"

/// Closed forms for the composite devices built from symmetric Y-couplers,
/// and the netlists that realize them. The closed forms serve as oracles for
/// the network solver.
namespace ycoupler::gallery {

/// Arm phases of the two-coupler resonator: phi1 on the 2-2' arm, phi2 on 3-3'.
struct ResonatorPhases {
  double phi1 = 0.0;
  double phi2 = 0.0;

  /// (e^{i phi1} + e^{i phi2}) / 2, symmetric supermode factor
  Complex b() const;
  /// (e^{i phi1} - e^{i phi2}) / 2, antisymmetric supermode factor
  Complex c() const;
};

struct ResonatorAmplitudes {
  Complex r;
  Complex t;
  /// The double zero C = 0, B^2 = 1 was hit and the analytic limit returned.
  bool limit_rule = false;
};

struct MichelsonOutputs {
  Complex back;     // returned to the input port 2
  Complex through;  // leaves port 3
  double p_back() const { return std::norm(back); }
  double p_through() const { return std::norm(through); }
};

/// Per-round-trip map of the antisymmetric supermode (a1 - a2):
/// it returns to itself times `feedback` and leaks `leak_a` to port 1' and `leak_b` to port 1.
struct SupermodeCoeffs {
  Complex feedback;
  Complex leak_a;
  Complex leak_b;
};

/// Outgoing amplitudes (port 1', port 1) released by a unit supermode excitation.
struct SupermodeRelease {
  Complex a;
  Complex b;
};

ScatteringMatrix generalized_grover(double phi);

/// Reflection of a Y-coupler whose ports 2 and 3 are joined by a reciprocal
/// loop with phase `loop_phase`. The amplitude is obtained by propagating the
/// light through `y` around the loop until nothing circulates, so any phase
/// convention of the coupler flows through.
Complex loop_mirror_reflection(double loop_phase, const ScatteringMatrix& y = catalog::symmetric_y());

/// Input at port 2 of a symmetric Y-coupler whose port 1 is closed by a
/// mirror with round-trip phase `phi`.
MichelsonOutputs michelson_outputs(double phi);

/// Threshold on |C| and |1 - B^2| below which resonator_rt returns (0, B).
inline constexpr double kResonatorLimitTol = 1e-12;

/// r = -C^2 / (1 - B^2), t = B (1 - r).
ResonatorAmplitudes resonator_rt(const ResonatorPhases& p);

SupermodeCoeffs supermode_roundtrip_coeffs(const ResonatorPhases& p);
/// Sum of the first `round_trips` terms of the supermode leakage series.
SupermodeRelease supermode_series(const ResonatorPhases& p, std::size_t round_trips);
/// Limit of the series: sqrt2 (C/(1-B^2), -BC/(1-B^2)).
SupermodeRelease supermode_steady_state(const ResonatorPhases& p);

/// Two symmetric Y-couplers joined at their feed-forward ports by a bridge
/// of phase `phi`; externals Y1.2, Y1.3, Y2.2, Y2.3.
network::Netlist grover4_netlist(double phi);
/// One symmetric Y-coupler with ports 2 and 3 looped; external Y.1.
network::Netlist loop_mirror_netlist(double loop_phase);
/// Symmetric Y-coupler with a mirror on port 1 (round-trip phase `phi`);
/// externals Y.2, Y.3.
network::Netlist michelson_netlist(double phi);
/// Two symmetric Y-couplers with arms 2-2' ("arm1") and 3-3' ("arm2");
/// externals Y1.1 (port 1) and Y2.1 (port 1').
network::Netlist resonator_netlist(const ResonatorPhases& p);

}  // namespace ycoupler::gallery
