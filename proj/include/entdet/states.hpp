#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>

#include "entdet/linalg.hpp"
#include "entdet/tolerances.hpp"

namespace entdet {

/// Local dimensions of a bipartite system; subsystem A has dimension m,
/// subsystem B has dimension n. Product basis |i>_A |j>_B is ordered
/// lexicographically, composite index = i*n + j.
struct BipartiteDims {
  int m = 2;
  int n = 2;

  int total() const { return m * n; }
  bool operator==(const BipartiteDims& o) const { return m == o.m && n == o.n; }
};

/// A validated bipartite density matrix: Hermitian, unit trace, PSD within
/// the tolerance ledger. Construct through validate() or a family generator.
struct DensityMatrix {
  BipartiteDims dims;
  ComplexMatrix mat;
};

/**
 * Checks raw against all density-matrix invariants and returns the validated
 * state. Throws ValidationError naming the violated invariant ("shape",
 * "hermitian", "trace", "psd") with the offending numbers.
 */
DensityMatrix validate(const ComplexMatrix& raw, BipartiteDims dims, const Tolerances& tol = {});

// --- State families ---------------------------------------------------------
//
// Family generators construct the literal matrices from the published
// parameterizations. Parameter windows are quoted to 6 decimal places in the
// source material and may overshoot the exact PSD boundary by ~1e-7, so the
// generators validate positivity with a relaxed slack (1e-6) while keeping
// Hermiticity and trace checks strict. validate() itself stays at the ledger
// default.

/// Two-qubit isotropic state (1-f)/3 I + (4f-1)/3 |psi+><psi+|, f in [0,1],
/// |psi+> = (|00> + |11>)/sqrt(2).
DensityMatrix isotropic(double f);

/// 4x4-dimensional family mixing four Bell-like vectors (weight p) and two
/// additional vectors (weight q), 4p + 2q = 1, q in [0, 1/2]. PPT at
/// q = (sqrt(2)-1)/2, NPT elsewhere.
DensityMatrix toth_family(double q);

/// 3x3 NPT family: 9x9 matrix with diagonal ((1-a)/2, 0,0,0, 1/2-a, a, 0,0, a/2)
/// and symmetric off-diagonal entries -11/50 at (1,9) and (5,6) (1-indexed).
/// Admissible window a in [(25-sqrt(141))/50, (25+sqrt(141))/100].
DensityMatrix garg_family(double a);

/// Two-parameter 2x2 family with diagonal (5/8, 0, (s-1/4)/2, (1-s)/2) and
/// corner entries t/2; NPT for every t != 0. s in (1/4, 1]. t = 0 is accepted
/// here as a separability control even though the family is usually quoted
/// with t != 0.
DensityMatrix rudolph_family(double s, double t);

/// Two-qubit state reachable by local filtering:
/// (1/2) [[1+c,0,0,d],[0,0,0,0],[0,0,b-c,0],[d,0,0,1-b]] with
/// b in [-1,1], c in [-1,b], d^2 <= (1-b)(1+c).
DensityMatrix filtered_family(double b, double c, double d);

/// Mixture of the four Bell states in the order (Phi+, Phi-, Psi+, Psi-).
/// Weights must be non-negative and sum to 1.
DensityMatrix bell_diagonal(const std::array<double, 4>& p);

// --- Seeded random states ---------------------------------------------------
//
// All sampling is driven by std::mt19937_64 with Gaussian variates produced
// by an explicit Box-Muller transform over 53-bit uniforms, so a fixed seed
// reproduces the identical matrix on any standard-conforming platform.

/// G G^dagger / tr(G G^dagger) with G an (mn x rank) matrix of independent
/// standard complex Gaussian entries. 1 <= rank <= mn.
DensityMatrix random_density(BipartiteDims dims, int rank, std::uint64_t seed);

/// Convex mixture of `terms` random pure product states with random simplex
/// weights; separable by construction.
DensityMatrix random_separable(BipartiteDims dims, int terms, std::uint64_t seed);

// --- Serialization -----------------------------------------------------------
//
// File format: a JSON document {"m": int, "n": int, "matrix": [[[re, im], ...],
// ...]} row-major; the writer emits 17 significant digits so doubles
// round-trip exactly.

DensityMatrix load_state(const std::string& path, const Tolerances& tol = {});
void save_state(const DensityMatrix& state, const std::string& path);

namespace detail {

/// Deterministic standard-normal sampler (Box-Muller over mt19937_64).
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}
  double uniform();  // in [0, 1), 53-bit resolution
  double normal();
  Complex complex_normal();

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace detail

}  // namespace entdet
