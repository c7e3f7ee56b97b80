#include "ycoupler/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include "ycoupler/error.hpp"

namespace ycoupler {

namespace {

Check make_check(double deviation, double tol) { return Check{deviation <= tol, deviation}; }

}  // namespace

ScatteringMatrix::ScatteringMatrix(CMatrix m) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.rows() != m_.cols()) {
    throw DimensionMismatch("scattering matrix must be square and non-empty, got " +
                            std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()));
  }
  for (Eigen::Index i = 0; i < m_.size(); ++i) {
    const Complex z = m_.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw InvalidArgument("scattering matrix has a non-finite entry");
    }
  }
}

ScatteringMatrix ScatteringMatrix::identity(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return ScatteringMatrix(CMatrix::Identity(k, k));
}

ScatteringMatrix ScatteringMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  CMatrix m(n, n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != n) {
      throw DimensionMismatch("from_rows: ragged rows");
    }
    Eigen::Index j = 0;
    for (const Complex z : row) m(i, j++) = z;
    ++i;
  }
  return ScatteringMatrix(std::move(m));
}

Check check_unitary(const ScatteringMatrix& s, double tol) {
  const auto n = static_cast<Eigen::Index>(s.dim());
  const CMatrix g = s.matrix().adjoint() * s.matrix() - CMatrix::Identity(n, n);
  return make_check(g.cwiseAbs().maxCoeff(), tol);
}

Check check_reciprocal(const ScatteringMatrix& s, double tol) {
  const CMatrix& m = s.matrix();
  return make_check((m - m.transpose()).cwiseAbs().maxCoeff(), tol);
}

Check check_circulant(const ScatteringMatrix& s, double tol) {
  const CMatrix& m = s.matrix();
  const Eigen::Index n = m.rows();
  double dev = 0.0;
  // Column 0 fixes the value on every cyclic diagonal.
  for (Eigen::Index j = 1; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const Eigen::Index k = ((i - j) % n + n) % n;
      dev = std::max(dev, std::abs(m(i, j) - m(k, 0)));
    }
  }
  return make_check(dev, tol);
}

Check check_side_blocked(const ScatteringMatrix& s, std::span<const std::size_t> side,
                         double tol) {
  double dev = 0.0;
  for (const std::size_t i : side) {
    for (const std::size_t j : side) {
      if (i >= s.dim() || j >= s.dim()) throw InvalidArgument("port index out of range");
      dev = std::max(dev, std::abs(s(i, j)));
    }
  }
  return make_check(dev, tol);
}

SymmetryReport symmetry_report(const ScatteringMatrix& s, double tol) {
  SymmetryReport r;
  r.unitary = check_unitary(s, tol);
  r.reciprocal = check_reciprocal(s, tol);
  r.circulant = check_circulant(s, tol);
  r.feed_forward.resize(s.dim());
  for (std::size_t p = 0; p < s.dim(); ++p) r.feed_forward[p] = std::abs(s(p, p)) <= tol;
  return r;
}

ScatteringMatrix dress_phases(const ScatteringMatrix& s, std::span<const double> phases) {
  if (phases.size() != s.dim()) {
    throw DimensionMismatch("dress_phases: expected " + std::to_string(s.dim()) +
                            " phases, got " + std::to_string(phases.size()));
  }
  const auto n = static_cast<Eigen::Index>(s.dim());
  CVector d(n);
  for (Eigen::Index k = 0; k < n; ++k) d(k) = std::polar(1.0, phases[static_cast<std::size_t>(k)]);
  return ScatteringMatrix(d.asDiagonal() * s.matrix() * d.asDiagonal());
}

ScatteringMatrix permute_ports(const ScatteringMatrix& s, std::span<const std::size_t> perm) {
  const std::size_t n = s.dim();
  if (perm.size() != n) throw DimensionMismatch("permutation length does not match port count");
  std::vector<bool> seen(n, false);
  for (const std::size_t p : perm) {
    if (p >= n || seen[p]) throw InvalidArgument("ports must be relabeled by a bijection");
    seen[p] = true;
  }
  const auto en = static_cast<Eigen::Index>(n);
  CMatrix out(en, en);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(static_cast<Eigen::Index>(perm[i]), static_cast<Eigen::Index>(perm[j])) = s(i, j);
    }
  }
  return ScatteringMatrix(std::move(out));
}

CVector apply(const ScatteringMatrix& s, const CVector& in) {
  if (static_cast<std::size_t>(in.size()) != s.dim()) {
    throw DimensionMismatch("apply: vector length " + std::to_string(in.size()) +
                            " does not match port count " + std::to_string(s.dim()));
  }
  return s.matrix() * in;
}

double max_abs_difference(const ScatteringMatrix& a, const ScatteringMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("matrices differ in port count");
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

double global_phase_distance(const ScatteringMatrix& a, const ScatteringMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("matrices differ in port count");
  Eigen::Index bi = 0;
  Eigen::Index bj = 0;
  a.matrix().cwiseAbs().maxCoeff(&bi, &bj);
  const Complex ref = b.matrix()(bi, bj);
  if (std::abs(ref) == 0.0) return std::numeric_limits<double>::infinity();
  const Complex rot = std::polar(1.0, std::arg(a.matrix()(bi, bj)) - std::arg(ref));
  return (a.matrix() - rot * b.matrix()).cwiseAbs().maxCoeff();
}

void write_matrix(std::ostream& os, const ScatteringMatrix& s) {
  const std::size_t n = s.dim();
  os << n << '\n';
  char buf[64];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex z = s(i, j);
      std::snprintf(buf, sizeof buf, "%.17g,%.17g", z.real(), z.imag());
      if (j) os << ' ';
      os << buf;
    }
    os << '\n';
  }
}

ScatteringMatrix read_matrix(std::istream& is) {
  long long n = 0;
  if (!(is >> n) || n <= 0) throw InvalidArgument("matrix text: missing or invalid dimension");
  const auto en = static_cast<Eigen::Index>(n);
  CMatrix m(en, en);
  for (Eigen::Index i = 0; i < en; ++i) {
    for (Eigen::Index j = 0; j < en; ++j) {
      std::string tok;
      if (!(is >> tok)) throw InvalidArgument("matrix text: truncated input");
      const auto comma = tok.find(',');
      if (comma == std::string::npos) throw InvalidArgument("matrix text: expected re,im, got '" + tok + "'");
      try {
        std::size_t used_re = 0;
        std::size_t used_im = 0;
        const std::string re = tok.substr(0, comma);
        const std::string im = tok.substr(comma + 1);
        const double x = std::stod(re, &used_re);
        const double y = std::stod(im, &used_im);
        if (used_re != re.size() || used_im != im.size()) throw std::invalid_argument(tok);
        m(i, j) = Complex(x, y);
      } catch (const std::logic_error&) {
        throw InvalidArgument("matrix text: bad number '" + tok + "'");
      }
    }
  }
  return ScatteringMatrix(std::move(m));
}

}  // namespace ycoupler
