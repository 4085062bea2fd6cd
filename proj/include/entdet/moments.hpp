#pragma once

#include <string>
#include <vector>

#include "entdet/maps.hpp"
#include "entdet/states.hpp"

namespace entdet {

enum class MomentKind { Realigned, PartialTranspose, Zhang };

/// Power-trace sequence indexed from k = 1 (values[0] holds the k = 1 moment).
struct MomentSet {
  MomentKind kind;
  BipartiteDims dims;
  std::vector<double> values;

  /// 1-based accessor: at(k) = k-th moment.
  double at(int k) const;
  int count() const { return static_cast<int>(values.size()); }
};

/**
 * Realigned moments T_k = tr([(rho^R)^dagger rho^R]^k), k = 1..K, computed
 * from the Gram matrix of the smaller side ((rho^R)^dagger rho^R when n <= m,
 * rho^R (rho^R)^dagger otherwise); the nonzero spectrum and hence every trace
 * of powers coincide between the two.
 */
MomentSet realigned_moments(const DensityMatrix& rho, int k_max);

/// Partial-transpose moments p_k = tr[(rho^tau_B)^k]. p_1 = 1; odd moments may
/// be negative when the partial transpose has negative eigenvalues.
MomentSet pt_moments(const DensityMatrix& rho, int k_max);

/// Singular-value moments r_k = sum_i sigma_i(rho^R)^k, realized through the
/// singular spectrum (half-integer powers of the Gram matrix).
MomentSet zhang_moments(const DensityMatrix& rho, int k_max);

/// Characteristic-polynomial coefficients D_1..D_k of a Hermitian matrix
/// recovered from its first k power traces; D_i = (-1)^i e_i with e_i the
/// i-th elementary symmetric polynomial of the eigenvalues.
struct NewtonCoefficients {
  int order = 0;
  std::vector<double> values;  // values[i-1] = D_i

  double at(int i) const;
};

/**
 * Newton's-identity recursion e_0 = 1, e_i = (1/i) sum_{j=1..i} (-1)^{j-1}
 * e_{i-j} T_j, D_i = (-1)^i e_i. Mathematically identical to the textbook
 * determinant formula but O(k^2) and numerically stable.
 */
NewtonCoefficients newton_coefficients(const std::vector<double>& power_traces, int k);
NewtonCoefficients newton_coefficients(const MomentSet& t, int k);

/**
 * Lower bound on the largest eigenvalue of an n x n Hermitian matrix from its
 * first three power traces:
 *
 *   f = T1/n + (b + sqrt(b^2 + 4 a^3)) / (2a),
 *   a = T2/n - (T1/n)^2,  b = (n^2 T3 - 3 n T2 T1 + 2 T1^3) / n^3.
 *
 * a is a spectral variance and is clamped to 0 when within -1e-12 (the f =
 * T1/n equal-spectrum branch); more negative values throw NumericalError.
 */
double lambda_max_lower(double t1, double t2, double t3, int n);

/// Upper bound on the largest eigenvalue of a PSD matrix: the largest real
/// root of T1 x^3 - 2 T2 x^2 + T3 x + T2^2 - T1 T3 = 0, found via the
/// companion matrix. Throws ValidationError when T1 <= 0 (degenerate cubic).
double lambda_max_upper(double t1, double t2, double t3);

}  // namespace entdet
