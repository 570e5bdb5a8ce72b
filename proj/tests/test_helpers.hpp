#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <random>
#include <vector>

#include "fermigauss/matrix_kernel.hpp"

namespace fermigauss::testing {

using Rng = std::mt19937_64;

inline Mat random_matrix(Rng& rng, int rows, int cols, double scale = 1.0) {
  std::normal_distribution<double> dist(0.0, scale);
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

inline Mat random_antisymmetric(Rng& rng, int n, double scale = 1.0) {
  return antisymmetrize(random_matrix(rng, n, n, scale));
}

inline Mat random_symmetric(Rng& rng, int n, double scale = 1.0) {
  return symmetrize(random_matrix(rng, n, n, scale));
}

inline Mat random_orthogonal(Rng& rng, int n, double scale = 1.0) {
  return expm(random_antisymmetric(rng, n, scale));
}

inline CMat random_complex_matrix(Rng& rng, int n, double scale = 1.0) {
  std::normal_distribution<double> dist(0.0, scale);
  CMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(dist(rng), dist(rng));
  return m;
}

inline CMat random_hermitian(Rng& rng, int n, double scale = 1.0) {
  const CMat m = random_complex_matrix(rng, n, scale);
  return 0.5 * (m + m.adjoint());
}

// Hermitian positive semidefinite, O(1) entries.
inline CMat random_psd(Rng& rng, int n, double scale = 1.0) {
  const CMat b = random_complex_matrix(rng, n, scale / std::sqrt(2.0 * n));
  return b * b.adjoint();
}

// A with all eigenvalue real parts < -margin.
inline Mat random_hurwitz(Rng& rng, int n, double margin = 0.3) {
  const Mat m = random_matrix(rng, n, n, 0.5);
  return m - (m.cwiseAbs().rowwise().sum().maxCoeff() + margin) *
                 Mat::Identity(n, n);
}

inline double max_abs_diff(const Mat& a, const Mat& b) { return max_abs(a - b); }

inline double max_abs_diff(const CMat& a, const CMat& b) {
  return max_abs(a - b);
}

// Multiset comparison of complex spectra, sorted by (re, im).
inline bool spectra_match(std::vector<Complex> got, std::vector<Complex> want,
                          double tol) {
  if (got.size() != want.size()) return false;
  auto lex = [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  };
  std::sort(got.begin(), got.end(), lex);
  std::sort(want.begin(), want.end(), lex);
  for (size_t i = 0; i < got.size(); ++i) {
    if (std::abs(got[i] - want[i]) > tol) return false;
  }
  return true;
}

inline std::vector<Complex> to_vector(const CVec& v) {
  return {v.data(), v.data() + v.size()};
}

}  // namespace fermigauss::testing
