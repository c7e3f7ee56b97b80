#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ycoupler/core.hpp"

namespace ycoupler::network {

/// A device port. `port` is 0-based; the text form "id.k" is 1-based.
struct PortRef {
  std::string device;
  std::size_t port = 0;

  friend bool operator==(const PortRef&, const PortRef&) = default;
};

std::string to_string(const PortRef& p);
/// Parses "id.k" with k >= 1. Throws InvalidArgument.
PortRef parse_port_ref(std::string_view text);

struct Device {
  std::string id;
  ScatteringMatrix matrix;
};

/// Reciprocal link: the same factor e^{i phase} is applied in both directions.
struct Link {
  PortRef a;
  PortRef b;
  double phase = 0.0;
  /// Optional tag, used by sweeps to find the arms whose phase they drive.
  std::string label;
};

struct Netlist {
  std::vector<Device> devices;
  std::vector<Link> links;
  /// Ordered; row/column k of the effective matrix belongs to externals[k].
  std::vector<PortRef> externals;
};

/// Structural problems, one human-readable line each. Empty means well formed.
std::vector<std::string> validate(const Netlist& n);

/// Copy of `n` with the phase of every link carrying `label` replaced.
/// Throws InvalidArgument when no link has that label.
Netlist with_link_phase(Netlist n, std::string_view label, double phase);

/// Block form of a netlist over device ports, split into external (e) and
/// internal (i) sets: outgoing = S * incoming per block, incoming_i = C * outgoing_i.
struct ModeSystem {
  CMatrix s_ee, s_ei, s_ie, s_ii;
  /// Internal connection map: symmetric partial permutation with link phase factors.
  /// Diagonal entries appear only for folded terminations.
  CMatrix c;
  /// "id.k" for each internal port, in internal order.
  std::vector<std::string> internal_labels;
};

/// Throws NetlistError if validate() reports problems. With `fold_terminations`,
/// a one-port device linked to a multiport is absorbed into the port it closes
/// as a diagonal entry e^{2i phase} * S_device of `c`.
ModeSystem assemble(const Netlist& n, bool fold_terminations = false);

struct SolveReport {
  ScatteringMatrix effective;
  /// 1-norm condition estimate of (I - S_ii C); 1 when there is no feedback.
  double condition_estimate = 1.0;
  /// max |eigenvalue| of S_ii C.
  double roundtrip_spectral_radius = 0.0;
  /// The feedback operator was singular and the solve went through the
  /// least-squares path with an unexcited dark state.
  bool dark_state_projected = false;
};

/// Condition estimates above this are treated as singular feedback.
inline constexpr double kConditionLimit = 1e12;

/// Effective scattering matrix on the externals,
///   S_ee + S_ei C (I - S_ii C)^{-1} S_ie,
/// computed by a linear solve.
///
/// When the condition estimate exceeds kConditionLimit the system is solved
/// in the least-squares sense. The result is accepted if the residual stays
/// within `tol` (the resonant supermode is not driven). Otherwise
/// DarkStateSingular is thrown when the smallest singular value is within
/// `tol` of zero and IllConditioned when it is not. Both carry the
/// eigenvector of S_ii C whose eigenvalue is closest to 1.
SolveReport solve_steady_state(const Netlist& n, double tol = kDefaultTol);

struct RoundTripResult {
  /// Accumulated outgoing amplitudes on the externals.
  CVector amplitudes;
  bool converged = false;
  /// Link traversals performed after the initial scattering event.
  std::size_t bounces = 0;
  /// Euclidean norm of the amplitude still circulating inside.
  double residual_norm = 0.0;
};

/// Injects unit amplitude at externals[input] and follows it bounce by bounce,
/// adding each bounce's leakage to the external outputs. One bounce is one
/// traversal of every internal link followed by scattering at the devices;
/// one-port terminations are folded so a mirror round trip is one bounce.
///
/// Stops when the circulating amplitude norm drops to `tol` or after
/// `max_bounces`. Returns the partial sums either way; throws NotConverged
/// only when the bounce budget runs out while the feedback map has spectral
/// radius 1 (a loop that never empties).
RoundTripResult iterate_roundtrips(const Netlist& n, std::size_t input, std::size_t max_bounces,
                                   double tol = kDefaultTol);

/// Spectral radius of S_ii C for the unfolded netlist.
double roundtrip_spectral_radius(const Netlist& n);

}  // namespace ycoupler::network
