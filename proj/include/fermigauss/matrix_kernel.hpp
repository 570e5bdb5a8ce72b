#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

// Dense real/complex matrix primitives shared by every other header:
// Hermitian eigendecomposition, matrix exponential, continuous Lyapunov
// solve, and the structural predicates (antisymmetry, orthogonality, ...)
// the phase-space formalism leans on.  Everything is plain Eigen underneath.

namespace fermigauss {

using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using Complex = std::complex<double>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonHermitianInput : Error {
  using Error::Error;
};

struct SingularLyapunov : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

// Default tolerances. Structural checks are relative to the max-abs entry;
// spectral ones are absolute on eigenvalues of O(1) certificate matrices.
namespace tol {
inline constexpr double kStructural = 1e-12;
inline constexpr double kSpectral = 1e-10;
inline constexpr double kCp = 1e-10;
inline constexpr double kPhysicality = 1e-10;
inline constexpr double kClassPresence = 1e-12;
inline constexpr double kRateCutoff = 1e-12;
}  // namespace tol

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.rows() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline bool is_antisymmetric(const Mat& m, double tol = tol::kStructural) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m + m.transpose()) <= tol * std::max(1.0, max_abs(m));
}

inline bool is_symmetric(const Mat& m, double tol = tol::kStructural) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.transpose()) <= tol * std::max(1.0, max_abs(m));
}

inline bool is_hermitian(const CMat& m, double tol = tol::kStructural) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.adjoint()) <= tol * std::max(1.0, max_abs(m));
}

inline bool is_orthogonal(const Mat& m, double tol = tol::kSpectral) {
  if (m.rows() != m.cols()) return false;
  const Mat gram = m * m.transpose() - Mat::Identity(m.rows(), m.cols());
  return max_abs(gram) <= tol;
}

inline Mat antisymmetrize(const Mat& m) { return 0.5 * (m - m.transpose()); }

inline Mat symmetrize(const Mat& m) { return 0.5 * (m + m.transpose()); }

struct HermitianEig {
  Vec eigenvalues;    // ascending
  CMat eigenvectors;  // orthonormal columns, same order
};

// Eigendecomposition of a Hermitian matrix. Eigenvalues of a Hermitian
// operator are real, so they are returned as a real vector outright.
inline HermitianEig eig_hermitian(const CMat& m,
                                  double structural_tol = tol::kStructural) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("eig_hermitian: matrix must be square");
  }
  if (!is_hermitian(m, structural_tol)) {
    throw NonHermitianInput("eig_hermitian: input is not Hermitian within " +
                            std::to_string(structural_tol));
  }
  Eigen::SelfAdjointEigenSolver<CMat> solver(m);
  if (solver.info() != Eigen::Success) {
    throw Error("eig_hermitian: eigensolver failed to converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

inline HermitianEig eig_symmetric(const Mat& m,
                                  double structural_tol = tol::kStructural) {
  return eig_hermitian(m.cast<Complex>(), structural_tol);
}

// e^{Mt} by scaling-and-squaring with a [6/6] Pade approximant. The matrices
// here never exceed ~12x12, so a fixed order with aggressive scaling is both
// simple and accurate to machine precision.
inline Mat expm(const Mat& m, double t = 1.0) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("expm: matrix must be square");
  }
  const Eigen::Index n = m.rows();
  Mat x = m * t;
  const double norm = x.cwiseAbs().rowwise().sum().maxCoeff();  // inf-norm
  int squarings = 0;
  if (norm > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    x /= std::pow(2.0, squarings);
  }
  // exp(x) ~ p(x)/p(-x), p the [6/6] Pade numerator.
  constexpr double b0 = 1.0, b1 = 1.0 / 2.0, b2 = 5.0 / 44.0, b3 = 1.0 / 66.0,
                   b4 = 1.0 / 792.0, b5 = 1.0 / 15840.0, b6 = 1.0 / 665280.0;
  const Mat id = Mat::Identity(n, n);
  const Mat x2 = x * x;
  const Mat x4 = x2 * x2;
  const Mat u = x * (b1 * id + b3 * x2 + b5 * x4);
  const Mat v = b0 * id + b2 * x2 + b4 * x4 + b6 * (x2 * x4);
  Mat result = (v - u).partialPivLu().solve(v + u);
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

// Solves A S + S A^T + C = 0 via complex Schur reduction of A and a
// triangular back-substitution (Bartels-Stewart). Requires that no two
// eigenvalues of A sum to zero; otherwise the solution is not unique.
inline Mat lyapunov_solve(const Mat& a, const Mat& c,
                          double resonance_tol = tol::kSpectral) {
  if (a.rows() != a.cols() || c.rows() != c.cols() || a.rows() != c.rows()) {
    throw DimensionMismatch("lyapunov_solve: A and C must be square, equal size");
  }
  const Eigen::Index n = a.rows();
  Eigen::ComplexSchur<CMat> schur(a.cast<Complex>());
  if (schur.info() != Eigen::Success) {
    throw Error("lyapunov_solve: Schur factorization failed");
  }
  const CMat& u = schur.matrixU();
  const CMat& s = schur.matrixT();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      if (std::abs(s(i, i) + s(j, j)) <= resonance_tol) {
        throw SingularLyapunov(
            "lyapunov_solve: eigenvalues of A sum to zero; no unique solution");
      }
    }
  }
  // A = U S U*; with Y = U* X conj(U) the equation becomes
  // S Y + Y S^T = -U* C conj(U), solvable entrywise from the bottom-right.
  const CMat rhs = -(u.adjoint() * c.cast<Complex>() * u.conjugate());
  CMat y = CMat::Zero(n, n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    for (Eigen::Index j = n - 1; j >= 0; --j) {
      Complex accum = rhs(i, j);
      for (Eigen::Index k = i + 1; k < n; ++k) accum -= s(i, k) * y(k, j);
      for (Eigen::Index k = j + 1; k < n; ++k) accum -= y(i, k) * s(j, k);
      y(i, j) = accum / (s(i, i) + s(j, j));
    }
  }
  Mat solution = (u * y * u.transpose()).real();
  if (is_antisymmetric(c, 1e-9)) solution = antisymmetrize(solution);
  return solution;
}

// 2x2 basis elements of the per-mode block algebra.
inline Eigen::Matrix2d omega2() {
  Eigen::Matrix2d w;
  w << 0.0, 1.0, -1.0, 0.0;
  return w;
}

inline Eigen::Matrix2d pauli_x() {
  Eigen::Matrix2d x;
  x << 0.0, 1.0, 1.0, 0.0;
  return x;
}

inline Eigen::Matrix2d pauli_z() {
  Eigen::Matrix2d z;
  z << 1.0, 0.0, 0.0, -1.0;
  return z;
}

}  // namespace fermigauss
