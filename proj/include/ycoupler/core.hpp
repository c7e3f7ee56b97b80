#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace ycoupler {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kDefaultTol = 1e-10;

/// Square matrix of complex mode amplitudes. Entry (i, j) is the amplitude
/// leaving port i for unit amplitude entering port j. Ports are 0-based here;
/// file formats and the CLI use 1-based labels.
///
/// Immutable once built: every operation below returns a new matrix.
class ScatteringMatrix {
 public:
  /// Throws DimensionMismatch for non-square or empty input and
  /// InvalidArgument for non-finite entries.
  explicit ScatteringMatrix(CMatrix m);

  static ScatteringMatrix identity(std::size_t n);
  static ScatteringMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  Complex operator()(std::size_t out_port, std::size_t in_port) const {
    return m_(static_cast<Eigen::Index>(out_port), static_cast<Eigen::Index>(in_port));
  }
  const CMatrix& matrix() const noexcept { return m_; }

 private:
  CMatrix m_;
};

struct Check {
  bool holds = false;
  double deviation = 0.0;
};

struct SymmetryReport {
  Check unitary;
  Check reciprocal;
  Check circulant;
  /// feed_forward[p]: no back-reflection into port p, |S(p, p)| <= tol.
  std::vector<bool> feed_forward;
};

/// max |(S^dagger S - I)_ij|
Check check_unitary(const ScatteringMatrix& s, double tol = kDefaultTol);
/// max |S_ij - S_ji|
Check check_reciprocal(const ScatteringMatrix& s, double tol = kDefaultTol);
/// max deviation of S_ij from the value on its cyclic diagonal (i - j) mod N.
Check check_circulant(const ScatteringMatrix& s, double tol = kDefaultTol);
/// True when the block S restricted to `side` x `side` vanishes: light entering
/// any port on that side cannot leave through the same side.
Check check_side_blocked(const ScatteringMatrix& s, std::span<const std::size_t> side,
                         double tol = kDefaultTol);
SymmetryReport symmetry_report(const ScatteringMatrix& s, double tol = kDefaultTol);

/// D S D with D = diag(e^{i phases[k]}): entry (i, j) picks up e^{i(phi_i + phi_j)}.
ScatteringMatrix dress_phases(const ScatteringMatrix& s, std::span<const double> phases);

/// Relabels port k as perm[k] (0-based): result(perm[i], perm[j]) = S(i, j).
ScatteringMatrix permute_ports(const ScatteringMatrix& s, std::span<const std::size_t> perm);

/// out = S in
CVector apply(const ScatteringMatrix& s, const CVector& in);

/// Largest entrywise difference after rotating `b` so that its entry at the
/// position of the largest-magnitude entry of `a` carries the same phase.
double global_phase_distance(const ScatteringMatrix& a, const ScatteringMatrix& b);

/// Plain entrywise max |a_ij - b_ij|. Throws DimensionMismatch on size mismatch.
double max_abs_difference(const ScatteringMatrix& a, const ScatteringMatrix& b);

/// Text form: N, then N rows of whitespace-separated "re,im" pairs printed with
/// 17 significant digits, which round-trips doubles exactly.
void write_matrix(std::ostream& os, const ScatteringMatrix& s);
ScatteringMatrix read_matrix(std::istream& is);

}  // namespace ycoupler
