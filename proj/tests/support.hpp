#pragma once

// Test-only helpers and independent oracles. Everything here must stay
// independent of the implementation paths it is used to check: elementary
// symmetric polynomials are built by direct polynomial expansion, the
// determinant-form coefficients by dense LU, the eigenvalue-bound closed form
// by complex arithmetic.

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "entdet/linalg.hpp"
#include "entdet/states.hpp"

namespace testsupport {

using entdet::Complex;
using entdet::ComplexMatrix;

inline entdet::detail::GaussianStream rng(std::uint64_t seed) {
  return entdet::detail::GaussianStream(seed);
}

inline ComplexMatrix random_complex(int rows, int cols, std::uint64_t seed) {
  entdet::detail::GaussianStream g(seed);
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = g.complex_normal();
  return m;
}

inline ComplexMatrix random_hermitian(int dim, std::uint64_t seed) {
  ComplexMatrix m = random_complex(dim, dim, seed);
  return 0.5 * (m + m.adjoint()).eval();
}

inline ComplexMatrix random_psd(int dim, std::uint64_t seed) {
  ComplexMatrix m = random_complex(dim, dim, seed);
  ComplexMatrix p = m * m.adjoint();
  return 0.5 * (p + p.adjoint()).eval();
}

/// Haar-ish random unitary via QR orthonormalization of a Gaussian matrix.
inline ComplexMatrix random_unitary(int dim, std::uint64_t seed) {
  const ComplexMatrix m = random_complex(dim, dim, seed);
  Eigen::HouseholderQR<ComplexMatrix> qr(m);
  return qr.householderQ() * ComplexMatrix::Identity(dim, dim);
}

/// i-th elementary symmetric polynomial of `values`, by expanding
/// prod_j (1 + values[j] x) coefficient-by-coefficient.
inline double elementary_symmetric(const std::vector<double>& values, int order) {
  std::vector<double> coeff(values.size() + 1, 0.0);
  coeff[0] = 1.0;
  size_t used = 0;
  for (double v : values) {
    ++used;
    for (size_t k = used; k >= 1; --k) coeff[k] += v * coeff[k - 1];
  }
  if (order < 0 || order >= static_cast<int>(coeff.size())) return 0.0;
  return coeff[static_cast<size_t>(order)];
}

/// Dense determinant by LU with partial pivoting (small matrices only).
inline double determinant(std::vector<std::vector<double>> m) {
  const size_t n = m.size();
  double det = 1.0;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    for (size_t row = col + 1; row < n; ++row)
      if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
    if (m[pivot][col] == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t row = col + 1; row < n; ++row) {
      const double factor = m[row][col] / m[col][col];
      for (size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return det;
}

/// Characteristic-polynomial coefficient D_i from power traces via the
/// textbook determinant formula: D_i = (-1)^i (1/i!) det(M) with first row
/// (T_1 ... T_i), subdiagonal (1, 2, ..., i-1) and Toeplitz T bands above.
inline double newton_coefficient_determinant_form(const std::vector<double>& t, int order) {
  std::vector<std::vector<double>> m(static_cast<size_t>(order),
                                     std::vector<double>(static_cast<size_t>(order), 0.0));
  for (int j = 0; j < order; ++j) m[0][static_cast<size_t>(j)] = t[static_cast<size_t>(j)];
  for (int row = 1; row < order; ++row) {
    m[static_cast<size_t>(row)][static_cast<size_t>(row - 1)] = static_cast<double>(row);
    for (int j = row; j < order; ++j)
      m[static_cast<size_t>(row)][static_cast<size_t>(j)] = t[static_cast<size_t>(j - row)];
  }
  double factorial = 1.0;
  for (int i = 2; i <= order; ++i) factorial *= i;
  const double sign = order % 2 == 0 ? 1.0 : -1.0;
  return sign * determinant(m) / factorial;
}

/// Closed-form largest cubic root for the eigenvalue upper bound, evaluated
/// with complex arithmetic on the principal branches.
inline double closed_form_lambda_upper(double t1, double t2, double t3) {
  const double p = -27.0 * t1 * t1 * t2 * t2 + 16.0 * t2 * t2 * t2 + 27.0 * t1 * t1 * t1 * t3 -
                   18.0 * t1 * t2 * t3;
  const double r = 4.0 * t2 * t2 - 3.0 * t1 * t3;
  const double q = p * p - 4.0 * r * r * r;
  const std::complex<double> root_q = std::sqrt(std::complex<double>(q, 0.0));
  const std::complex<double> w = std::pow(p + root_q, 1.0 / 3.0);
  const std::complex<double> g =
      (4.0 * t2 + 2.0 * std::cbrt(2.0) * r / w + std::pow(2.0, 2.0 / 3.0) * w) / (6.0 * t1);
  return g.real();
}

inline double frobenius_norm(const ComplexMatrix& m) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) sum += std::norm(m(i, j));
  return std::sqrt(sum);
}

/// Kronecker product, independent of any library routine.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

}  // namespace testsupport
