#pragma once

#include <map>
#include <string>
#include <vector>

#include "entdet/moments.hpp"
#include "entdet/states.hpp"
#include "entdet/tolerances.hpp"

namespace entdet {

/// Sequence convention for the Hankel positivity check.
///
/// Normalized (default): h_p = r_{p+1} / r_1, so h_0 = 1 and the sequence is
/// the moment sequence of a genuine unit-mass measure on the singular
/// spectrum; separable states provably satisfy positivity under this reading.
/// Raw: h = (1, r_1, r_2, ...), the literal published sequence; it can flag
/// states the normalized reading cannot, but is not a proven necessary
/// condition. Both are exposed because the source formulation leaves r_0 and
/// the role of "r_1 = 1" open.
enum class HankelMode { Normalized, Raw };

struct CriterionOptions {
  Tolerances tol;
  HankelMode hankel_mode = HankelMode::Normalized;
};

/**
 * Outcome of one criterion on one state. `value` is the criterion's scalar;
 * inequality-type criteria (r1, r2, p3ppt, d3, p3oppt, zhang, ccnr) detect
 * when value > verdict_tol, spectrum-type criteria (ppt, hankel) when
 * value < -verdict_tol. `details` carries the intermediates (rank, bounds,
 * moments) keyed by short names.
 */
struct CriterionResult {
  std::string id;
  double value = 0.0;
  bool detects = false;
  std::map<std::string, double> details;
};

/// Criterion identifiers in canonical order (used by "all").
const std::vector<std::string>& all_criterion_ids();

/// True for criteria whose verdict is a negative-eigenvalue test.
bool is_spectral_criterion(const std::string& id);

/// True if the criterion can be evaluated on states of these dimensions
/// (everything except r2, which is defined for 2x2 only).
bool criterion_applicable(const std::string& id, BipartiteDims dims);

/// Signed detection margin: positive iff the result detects. Used by the
/// boundary bisection so both verdict polarities look alike.
double detect_margin(const CriterionResult& result, const Tolerances& tol);

/**
 * General realigned-moment criterion: with k the numerical rank of rho^R,
 * value = k(k-1) D_k^{1/k} + T_1 - 1. D_k is recovered from the first k
 * realigned moments via Newton's identities (reported in details); the k-th
 * root is evaluated in log space over the top-k singular values to avoid
 * underflow at high rank. For full-rank 2x2 realignments this is
 * 12 D_4^{1/4} + T_1 - 1.
 */
CriterionResult r_moment_general(const DensityMatrix& rho, const CriterionOptions& opt = {});

/**
 * Two-qubit realigned-moment criterion built from T_1..T_3 only:
 * value = sqrt(3 X^{2/3} + 2 Y - 2 T_1) - 1 with
 *   X = f sqrt(2 sqrt(D_2) + T_1) + sqrt(|D_3|),
 *   Y = T_1 - g + sqrt(max(0, D_2 - g T_1 + f^2)),
 * where f and g bound the largest Gram eigenvalue from below and above.
 * Radicands that are provably non-negative are clamped when within
 * -verdict_tol and abort with NumericalError beyond that.
 */
CriterionResult r_moment_two_qubit(const DensityMatrix& rho, const CriterionOptions& opt = {});

/// L1 = p_2^2 - p_3 p_1 over partial-transpose moments.
CriterionResult p3_ppt(const DensityMatrix& rho, const CriterionOptions& opt = {});

/// L2 = (3/2) p_1 p_2 - (1/2) p_1^3 - p_3.
CriterionResult d3(const DensityMatrix& rho, const CriterionOptions& opt = {});

/// L3 = mu x^3 + (1 - mu x)^3 - p_3 with mu = floor(1/p_2) and
/// x = (mu + sqrt(mu [p_2 (mu+1) - 1])) / (mu (mu+1)). The moment in the
/// radicand is read as p_2 of the partial transpose.
CriterionResult p3_oppt(const DensityMatrix& rho, const CriterionOptions& opt = {});

/// L4 = r_2^2 - r_3 over singular-value moments of rho^R.
CriterionResult zhang_l4(const DensityMatrix& rho, const CriterionOptions& opt = {});

/// Min eigenvalue over the Hankel matrices H_k = [h_{i+j}] and shifted
/// B_l = [h_{i+j+1}] built from the selected sequence convention, with all
/// subscripts bounded by max_order (pass 0 for the default min(m^2, n^2)).
CriterionResult hankel_check(const DensityMatrix& rho, int max_order = 0,
                             const CriterionOptions& opt = {});

/// Min eigenvalue of rho^tau_B.
CriterionResult ppt_check(const DensityMatrix& rho, const CriterionOptions& opt = {});

/// Trace norm of rho^R minus 1.
CriterionResult ccnr_check(const DensityMatrix& rho, const CriterionOptions& opt = {});

/// Dispatch by criterion id; throws std::invalid_argument for unknown ids and
/// ValidationError when the criterion does not apply to the state's dims.
CriterionResult evaluate_criterion(const DensityMatrix& rho, const std::string& id,
                                   const CriterionOptions& opt = {});

}  // namespace entdet
