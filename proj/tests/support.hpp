#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "ycoupler/core.hpp"

namespace testing {

using ycoupler::CMatrix;
using ycoupler::Complex;
using ycoupler::kPi;
using ycoupler::ScatteringMatrix;

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Naive triple-loop product, kept independent of Eigen's kernels.
inline std::vector<std::vector<Complex>> dagger_times(const ScatteringMatrix& s) {
  const std::size_t n = s.dim();
  std::vector<std::vector<Complex>> p(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) p[i][j] += std::conj(s(k, i)) * s(k, j);
  return p;
}

inline double unitarity_gap(const ScatteringMatrix& s) {
  const auto p = dagger_times(s);
  double w = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) w = std::max(w, std::abs(p[i][j] - (i == j ? 1.0 : 0.0)));
  return w;
}

inline double reciprocity_gap(const ScatteringMatrix& s) {
  double w = 0;
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) w = std::max(w, std::abs(s(i, j) - s(j, i)));
  return w;
}

inline double max_gap(const ScatteringMatrix& s, const std::vector<std::vector<Complex>>& ref) {
  double w = 0;
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) w = std::max(w, std::abs(s(i, j) - ref[i][j]));
  return w;
}

inline CMatrix random_unitary(std::mt19937_64& rng, int n) {
  CMatrix g(n, n);
  std::normal_distribution<double> gauss;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<CMatrix> qr(g);
  return qr.householderQ() * CMatrix::Identity(n, n);
}

}  // namespace testing
