#include "ycoupler/catalog.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "ycoupler/error.hpp"

namespace ycoupler::catalog {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
// |t| below this is a mirror, not a coupler.
constexpr double kDegenerateT = 1e-14;
// |r| below this makes the reflection phase meaningless.
constexpr double kZeroReflection = 1e-12;
constexpr double kSignResidual = 1e-9;

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw InvalidArgument(std::string(name) + " must be finite");
}

}  // namespace

double BeamSplitterParams::t_mag() const { return std::sqrt(std::max(0.0, 1.0 - r_mag * r_mag)); }

ScatteringMatrix symmetric_y() {
  return ScatteringMatrix::from_rows({{0.0, kInvSqrt2, kInvSqrt2},
                                      {kInvSqrt2, -0.5, 0.5},
                                      {kInvSqrt2, 0.5, -0.5}});
}

ScatteringMatrix symmetric_y_phase(double phi) {
  require_finite(phi, "phi");
  const Complex h = 0.5 * std::polar(1.0, phi);
  return ScatteringMatrix::from_rows({{0.0, kInvSqrt2, kInvSqrt2},
                                      {kInvSqrt2, -h, h},
                                      {kInvSqrt2, h, -h}});
}

ScatteringMatrix grover(int d) {
  if (d < 3) throw InvalidArgument("grover: d must be >= 3, got " + std::to_string(d));
  const auto n = static_cast<Eigen::Index>(d);
  const double off = 2.0 / d;
  CMatrix m = CMatrix::Constant(n, n, off);
  m.diagonal().setConstant(off - 1.0);
  return ScatteringMatrix(std::move(m));
}

double circulant_reflectivity(int d, double x) {
  if (d < 3) throw InvalidArgument("circulant family: d must be >= 3");
  const double c0 = (2.0 - d) / (2.0 * std::sqrt(d - 1.0));
  return c0 * c0 / (c0 * c0 + x * x);
}

ScatteringMatrix circulant_family(const CirculantParams& p) {
  require_finite(p.x, "x");
  if (p.d < 3) throw InvalidArgument("circulant family: d must be >= 3, got " + std::to_string(p.d));
  if (p.x < -1.0 || p.x > 0.0) {
    throw InvalidArgument("circulant family: x = cos(phi_r - phi_t) must lie in [-1, 0]");
  }
  const double r2 = circulant_reflectivity(p.d, p.x);
  const double t_mag = std::sqrt((1.0 - r2) / (p.d - 1));
  // gauge phi_t = 0, phi_r = arccos(x)
  const Complex r = std::polar(std::sqrt(r2), std::acos(p.x));
  const auto n = static_cast<Eigen::Index>(p.d);
  CMatrix m = CMatrix::Constant(n, n, Complex(t_mag, 0.0));
  m.diagonal().setConstant(r);
  return ScatteringMatrix(std::move(m));
}

double min_reflectivity(int d) {
  const double dd = d;
  return (dd - 2.0) * (dd - 2.0) / (dd * dd);
}

ScatteringMatrix circulator(int n, int j) {
  if (n < 3) throw InvalidArgument("circulator: need at least 3 ports");
  const int shift = ((j % n) + n) % n;
  if (shift == 0) throw InvalidArgument("circulator: j = 0 mod N is the identity, not a circulator");
  const auto en = static_cast<Eigen::Index>(n);
  CMatrix m = CMatrix::Zero(en, en);
  for (int p = 0; p < n; ++p) m((p + shift) % n, p) = 1.0;
  return ScatteringMatrix(std::move(m));
}

ScatteringMatrix beam_splitter(const BeamSplitterParams& p) {
  for (double v : {p.r_mag, p.arg_r1, p.arg_r2, p.arg_t1}) require_finite(v, "beam splitter parameter");
  if (p.r_mag < 0.0 || p.r_mag > 1.0) throw InvalidArgument("beam splitter: r_mag must lie in [0, 1]");
  const double t = p.t_mag();
  const Complex r1 = std::polar(p.r_mag, p.arg_r1);
  const Complex r2 = std::polar(p.r_mag, p.arg_r2);
  const Complex t1 = std::polar(t, p.arg_t1);
  const Complex t2 = std::polar(t, p.arg_t2());
  return ScatteringMatrix::from_rows({{0.0, 0.0, r1, t2},
                                      {0.0, 0.0, t1, r2},
                                      {r1, t2, 0.0, 0.0},
                                      {t1, r2, 0.0, 0.0}});
}

ScatteringMatrix mirror(double phase) {
  require_finite(phase, "phase");
  return ScatteringMatrix::from_rows({{std::polar(1.0, phase)}});
}

ScatteringMatrix asymmetric_y(const AsymmetricParams& p) {
  require_finite(p.t, "t");
  require_finite(p.delta, "delta");
  if (p.t <= 0.0 || p.t >= 1.0) {
    throw DegenerateDevice("asymmetric Y-coupler: t must lie strictly inside (0, 1), got " +
                           std::to_string(p.t));
  }
  const double t = p.t;
  const double s = std::sqrt(1.0 - t * t);
  const Complex e = std::polar(1.0, p.delta);
  return ScatteringMatrix::from_rows({{0.0, t, e * s},
                                      {t, -(s * s) * std::conj(e), t * s},
                                      {e * s, t * s, -(t * t) * e}});
}

UnbiasedSolution solve_unbiased(const UnbiasedParams& p) {
  require_finite(p.a_mag, "|a|");
  require_finite(p.x, "x");
  if (p.a_mag < 0.0 || p.a_mag > 1.0) throw InvalidArgument("unbiased Y-coupler: |a| must lie in [0, 1]");
  if (p.x < -1.0 || p.x > 0.0) throw InvalidArgument("unbiased Y-coupler: x must lie in [-1, 0]");
  if (p.class_sign != 1 && p.class_sign != -1) throw InvalidArgument("unbiased Y-coupler: class must be +1 or -1");

  UnbiasedSolution s;
  const double a = p.a_mag;
  const double x = p.x;
  const double root = std::sqrt(std::max(0.0, a * a * (x * x - 1.0) + 1.0));
  s.a_mag = a;
  s.b_mag = a * x + root;  // positive root keeps |b| >= 0
  const double t2 = 1.0 - a * a - s.b_mag * s.b_mag;
  if (t2 < -1e-12) throw InvalidArgument("unbiased Y-coupler: |a|^2 + |b|^2 exceeds 1");
  if (t2 <= kDegenerateT * kDegenerateT) {
    throw DegenerateDevice("unbiased Y-coupler: |t| = 0, the device is a mirror");
  }
  s.t_mag = std::sqrt(t2);
  s.r_mag = std::sqrt(std::max(0.0, 1.0 - 2.0 * t2));
  const double sin_a = std::sqrt(std::max(0.0, 1.0 - x * x));
  s.phi_a = std::atan2(sin_a, x);

  if (s.r_mag <= kZeroReflection) {
    s.routed_to_symmetric = true;
    return s;
  }
  const double sin_d = std::clamp(-(a / s.r_mag) * sin_a, -1.0, 1.0);
  // |cos delta| = |2|a|x + root| / |r|, the same quantity as sqrt(1 - sin^2) without the cancellation.
  const double cos_mag = std::min(1.0, std::abs(2.0 * a * x + root) / s.r_mag);
  const double real_part = 2.0 * a * x + root;
  const double res_plus = std::abs(s.r_mag * cos_mag + real_part);
  const double res_minus = std::abs(-s.r_mag * cos_mag + real_part);
  const double cos_d = res_plus <= res_minus ? cos_mag : -cos_mag;
  s.residual = std::min(res_plus, res_minus);
  if (s.residual > kSignResidual) {
    throw Error("unbiased Y-coupler: neither sign of cos(delta) satisfies the orthogonality constraint");
  }
  s.delta = std::atan2(sin_d, cos_d);
  return s;
}

ScatteringMatrix unbiased_y(const UnbiasedParams& p) {
  const UnbiasedSolution s = solve_unbiased(p);
  if (s.routed_to_symmetric) return symmetric_y_phase(s.phi_a - kPi);
  const Complex r(s.r_mag, 0.0);
  const Complex t = std::polar(s.t_mag, 0.5 * s.delta);
  const Complex a = std::polar(s.a_mag, s.phi_a);
  const Complex b(s.b_mag, 0.0);
  const ScatteringMatrix y = ScatteringMatrix::from_rows({{r, t, t}, {t, a, b}, {t, b, a}});
  if (p.class_sign > 0) return y;
  const std::array<double, 3> gauge{-0.5 * kPi, 0.0, 0.0};
  return dress_phases(y, gauge);
}

ScatteringMatrix y_pm(double r) {
  require_finite(r, "r");
  if (std::abs(r) == 1.0) throw DegenerateDevice("y_pm: |r| = 1 is a mirror");
  if (std::abs(r) > 1.0) throw InvalidArgument("y_pm: r must lie in (-1, 1)");
  const double t = std::sqrt((1.0 - r * r) / 2.0);
  const double a = -(1.0 + r) / 2.0;
  const double b = (1.0 - r) / 2.0;
  return ScatteringMatrix::from_rows({{r, t, t}, {t, a, b}, {t, b, a}});
}

}  // namespace ycoupler::catalog
