#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "entdet/tolerances.hpp"

namespace entdet {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// True iff every entry has finite real and imaginary part.
bool all_finite(const ComplexMatrix& m);

/// Max entrywise |m - m^dagger| (0 for empty / non-square returns +inf).
double hermiticity_deviation(const ComplexMatrix& m);

/// Singular values of an arbitrary complex matrix, sorted descending.
/// Throws ValidationError on non-finite input.
std::vector<double> singular_values(const ComplexMatrix& m);

/// Eigenvalues of a Hermitian matrix, sorted descending.
/// Throws ValidationError if m is non-square, non-finite, or deviates from
/// Hermiticity by more than herm_tol (entrywise max).
std::vector<double> eigvals_hermitian(const ComplexMatrix& m, double herm_tol = Tolerances{}.hermiticity);

/// Sum of singular values. Zero matrix gives 0.
double trace_norm(const ComplexMatrix& m);

/**
 * [tr(H^1), ..., tr(H^K)] for a Hermitian PSD matrix, computed by repeated
 * matrix multiplication (no eigenvalue shortcut). Throws ValidationError for
 * K < 1 or if H is not Hermitian PSD within tolerance.
 */
std::vector<double> power_traces(const ComplexMatrix& h, int k_max, const Tolerances& tol = {});

/// Number of singular values above rel_tol * sigma_max; 0 for the zero matrix.
int numerical_rank(const ComplexMatrix& m, double rel_tol = Tolerances{}.rank_rel_tol);

/// Rank helper on a precomputed descending singular spectrum.
int numerical_rank(const std::vector<double>& sigma, double rel_tol = Tolerances{}.rank_rel_tol);

}  // namespace entdet
