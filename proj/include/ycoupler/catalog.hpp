#pragma once

#include <cstddef>

#include "ycoupler/core.hpp"

/// Closed-form device matrices. Every constructor fixes one phase gauge;
/// other conventions are reachable through dress_phases.
namespace ycoupler::catalog {

/// Reciprocal circulant d-port family. `x` is cos(phi_r - phi_t).
struct CirculantParams {
  int d = 4;
  double x = -1.0;
};

/// Asymmetric feed-forward Y-coupler: `t` is the port 1 -> 2 amplitude and
/// `delta` the phase of the port 1 -> 3 amplitude.
struct AsymmetricParams {
  double t = 0.7071067811865476;
  double delta = 0.0;
};

/// Directionally-unbiased symmetric Y-coupler.
/// `a_mag` = |a| (back-reflection at ports 2/3), `x` = cos(phi_a - phi_b).
/// `class_sign` selects the port-1 gauge: +1 keeps r real and non-negative,
/// -1 rotates port 1 by -pi/2 so r is real and non-positive. On the x = -1
/// family this maps the two reflection classes onto y_pm(r) and y_pm(-r).
struct UnbiasedParams {
  double a_mag = 0.5;
  double x = -1.0;
  int class_sign = +1;
};

/// Four-port beam-splitter in the direction-resolved basis. arg_t2 is derived
/// from arg r1 + arg r2 = arg t1 + arg t2 + pi.
struct BeamSplitterParams {
  double r_mag = 0.7071067811865476;
  double arg_r1 = 0.0;
  double arg_r2 = 0.0;
  double arg_t1 = 0.0;

  double arg_t2() const noexcept { return arg_r1 + arg_r2 - arg_t1 - kPi; }
  double t_mag() const;
};

/// Magnitudes and phases derived for an unbiased Y-coupler, exposed for tests.
struct UnbiasedSolution {
  double a_mag = 0;
  double b_mag = 0;
  double t_mag = 0;
  double r_mag = 0;
  double phi_a = 0;
  double delta = 0;
  /// residual of the real-part orthogonality constraint for the chosen cos(delta) sign
  double residual = 0;
  bool routed_to_symmetric = false;
};

ScatteringMatrix symmetric_y();
ScatteringMatrix symmetric_y_phase(double phi);
ScatteringMatrix grover(int d);
ScatteringMatrix circulant_family(const CirculantParams& p);
/// |r|^2 on the circulant family for a given x.
double circulant_reflectivity(int d, double x);
double min_reflectivity(int d);
/// Permutation routing port m to (m + j) mod n.
ScatteringMatrix circulator(int n, int j);
ScatteringMatrix beam_splitter(const BeamSplitterParams& p);
ScatteringMatrix mirror(double phase);
ScatteringMatrix asymmetric_y(const AsymmetricParams& p);
UnbiasedSolution solve_unbiased(const UnbiasedParams& p);
ScatteringMatrix unbiased_y(const UnbiasedParams& p);
/// Signed-r form of the x = -1 unbiased family; r in (-1, 1).
ScatteringMatrix y_pm(double r);

}  // namespace ycoupler::catalog
