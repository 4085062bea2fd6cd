#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "entdet/criteria.hpp"
#include "entdet/maps.hpp"
#include "entdet/states.hpp"

namespace entdet {

/// One-parameter slice through a state family: `sweep_param` runs over a
/// closed [from, to] grid with `steps` points (step count, not step size);
/// every other family parameter must appear in `fixed`.
struct FamilySpec {
  std::string family;
  std::string sweep_param;
  double from = 0.0;
  double to = 0.0;
  int steps = 0;
  std::map<std::string, double> fixed;
};

/// Parameter names a family requires, in canonical order.
/// Families: isotropic(f), toth(q), garg(a), rudolph(s,t), filtered(b,c,d),
/// belldiag(p1,p2,p3,p4). Throws std::invalid_argument for unknown names.
const std::vector<std::string>& family_parameters(const std::string& family);

/// Instantiate a family state from a full parameter assignment. Unknown
/// family or wrong parameter set throws std::invalid_argument; out-of-window
/// parameters surface as ValidationError from the generator.
DensityMatrix make_family_state(const std::string& family,
                                const std::map<std::string, double>& params);

/// Split a comma-separated criterion list ("all" expands to every criterion
/// applicable to `dims`). Unknown ids throw std::invalid_argument; an
/// explicitly requested criterion that cannot run on these dims throws
/// ValidationError.
std::vector<std::string> parse_criteria(const std::string& list, BipartiteDims dims);

/// Evaluate the requested criteria on one state, in request order.
std::vector<CriterionResult> run_check(const DensityMatrix& rho,
                                       const std::vector<std::string>& criteria,
                                       const CriterionOptions& opt = {});

struct SweepRow {
  double param = 0.0;
  std::string criterion;
  double value = 0.0;
  bool detects = false;
};

struct SweepReport {
  FamilySpec spec;
  std::vector<std::string> criteria;
  std::vector<double> grid;
  std::vector<SweepRow> rows;  // grid-major, criteria in request order
  /// Verdict-flip locations per criterion, refined by bisection between the
  /// bracketing grid points.
  std::map<std::string, std::vector<double>> boundaries;
};

/// Deterministic grid evaluation; rows ordered by grid point then criterion.
SweepReport run_sweep(const FamilySpec& spec, const std::vector<std::string>& criteria,
                      const CriterionOptions& opt = {});

/**
 * Bisect `spec.sweep_param` in [lo, hi] for the point where the criterion's
 * detection margin changes sign, to within param_tol. The verdicts at lo and
 * hi must differ (std::invalid_argument otherwise). Ties exactly at the
 * threshold count as "no detection".
 */
double find_boundary(const FamilySpec& spec, const std::string& criterion, double lo, double hi,
                     double param_tol, const CriterionOptions& opt = {});

struct SurveyReport {
  BipartiteDims dims;
  int samples = 0;
  int rank = 0;
  int terms = 0;
  std::uint64_t seed = 0;
  std::string sampler;  // "density" or "separable"
  std::vector<std::string> criteria;
  std::map<std::string, int> counts;  // detections per criterion
  /// cross[a][b] = number of states detected by a but not by b.
  std::map<std::string, std::map<std::string, int>> cross;
};

/// Detection statistics over seeded random states; sample i uses seed + i, so
/// a fixed seed reproduces the identical report. sampler "density" draws
/// rank-constrained mixed states, "separable" draws `terms`-term product
/// mixtures (rank is ignored).
SurveyReport run_survey(BipartiteDims dims, int samples, int rank, std::uint64_t seed,
                        const std::vector<std::string>& criteria, const CriterionOptions& opt = {},
                        const std::string& sampler = "density", int terms = 0);

// --- Emission ----------------------------------------------------------------
// CSV uses 10 significant digits, JSON 17. Sweep CSV columns are exactly
// param,criterion,value,detects.

void emit_check_csv(const std::vector<CriterionResult>& results, std::ostream& out);
void emit_check_json(const std::vector<CriterionResult>& results, std::ostream& out);
void emit_check_table(const std::vector<CriterionResult>& results, std::ostream& out);

void emit_sweep_csv(const SweepReport& report, std::ostream& out);
void emit_sweep_json(const SweepReport& report, std::ostream& out);
void emit_sweep_table(const SweepReport& report, std::ostream& out);

void emit_survey_json(const SurveyReport& report, std::ostream& out);
void emit_survey_table(const SurveyReport& report, std::ostream& out);

/// Debug dump of a rearranged matrix in the state-file JSON layout plus an
/// "origin" field.
void emit_rearranged_json(const RearrangedMatrix& mat, std::ostream& out);

}  // namespace entdet
