#pragma once

namespace entdet {

/**
 * Pinned numerical tolerance ledger, shared by every module.
 *
 * The defaults reproduce all published detection values at 5-6 significant
 * digits while suppressing floating-point false positives on separable
 * controls. The CLI exposes rank_rel_tol and verdict_tol as flags.
 */
struct Tolerances {
  /// Max entrywise deviation |H - H^dagger| accepted as Hermitian.
  double hermiticity = 1e-10;
  /// Min eigenvalue slack: PSD means lambda_min >= -psd_slack.
  double psd_slack = 1e-10;
  /// Singular value sigma_i counts toward rank iff sigma_i > rank_rel_tol * sigma_max.
  double rank_rel_tol = 1e-10;
  /// Inequality criteria detect iff value > verdict_tol; spectral criteria
  /// detect iff value < -verdict_tol. Ties resolve to "no detection".
  double verdict_tol = 1e-9;
};

}  // namespace entdet
