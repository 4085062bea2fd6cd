#include "entdet/criteria.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "entdet/errors.hpp"

namespace entdet {

namespace {

bool detects_inequality(double value, const Tolerances& tol) { return value > tol.verdict_tol; }
bool detects_spectral(double value, const Tolerances& tol) { return value < -tol.verdict_tol; }

}  // namespace

const std::vector<std::string>& all_criterion_ids() {
  static const std::vector<std::string> ids = {"r1",    "r2",     "p3ppt", "d3",  "p3oppt",
                                               "zhang", "hankel", "ppt",   "ccnr"};
  return ids;
}

bool is_spectral_criterion(const std::string& id) { return id == "ppt" || id == "hankel"; }

bool criterion_applicable(const std::string& id, BipartiteDims dims) {
  if (id == "r2") return dims.m == 2 && dims.n == 2;
  return true;
}

double detect_margin(const CriterionResult& result, const Tolerances& tol) {
  if (is_spectral_criterion(result.id)) return -tol.verdict_tol - result.value;
  return result.value - tol.verdict_tol;
}

CriterionResult r_moment_general(const DensityMatrix& rho, const CriterionOptions& opt) {
  const ComplexMatrix r = realign(rho).mat;
  const auto sigma = singular_values(r);
  const int k = numerical_rank(sigma, opt.tol.rank_rel_tol);

  const MomentSet t = realigned_moments(rho, std::max(k, 1));
  const double t1 = t.at(1);

  CriterionResult out;
  out.id = "r1";
  out.details["k"] = static_cast<double>(k);
  out.details["T1"] = t1;

  double root = 0.0;
  if (k >= 1) {
    double log_prod = 0.0;
    for (int i = 0; i < k; ++i) log_prod += 2.0 * std::log(sigma[static_cast<size_t>(i)]);
    root = std::exp(log_prod / k);
    const NewtonCoefficients d = newton_coefficients(t, k);
    out.details["Dk_newton"] = d.at(k);
    out.details["Dk_sigma"] = std::exp(log_prod);
    out.details["Dk_root"] = root;
  }
  out.value = static_cast<double>(k) * (k - 1) * root + t1 - 1.0;
  out.detects = detects_inequality(out.value, opt.tol);
  return out;
}

CriterionResult r_moment_two_qubit(const DensityMatrix& rho, const CriterionOptions& opt) {
  if (rho.dims.m != 2 || rho.dims.n != 2) {
    std::ostringstream msg;
    msg << "r2: requires a 2x2 state, got " << rho.dims.m << "x" << rho.dims.n;
    throw ValidationError(msg.str());
  }
  const MomentSet t = realigned_moments(rho, 3);
  const double t1 = t.at(1), t2 = t.at(2), t3 = t.at(3);
  const NewtonCoefficients d = newton_coefficients(t, 3);

  // D2, D3 and the Y radicand are exact zeros on boundary states (pure
  // products), but the Newton cancellations leave them at ~eps * T1^k, and
  // sqrt turns that into ~1e-8, above the verdict threshold. Round anything
  // below the floating-point noise floor of its own computation down to 0.
  const double noise2 = 1e-13 * t1 * t1;
  const double noise3 = noise2 * t1;
  double d2 = d.at(2);
  if (std::abs(d2) <= noise2) d2 = 0.0;
  double d3c = d.at(3);
  if (std::abs(d3c) <= noise3) d3c = 0.0;

  if (d2 < -opt.tol.verdict_tol) {
    std::ostringstream msg;
    msg << "r2: D2 = " << d2 << " is negative beyond tolerance";
    throw NumericalError(msg.str());
  }
  const double sqrt_d2 = std::sqrt(std::max(0.0, d2));

  const double f = lambda_max_lower(t1, t2, t3, 4);
  const double g = lambda_max_upper(t1, t2, t3);

  const double x = f * std::sqrt(2.0 * sqrt_d2 + t1) + std::sqrt(std::abs(d3c));
  double y_rad = d2 - g * t1 + f * f;
  if (std::abs(y_rad) <= noise2) y_rad = 0.0;
  const double y = t1 - g + std::sqrt(std::max(0.0, y_rad));

  const double cbrt_x = std::cbrt(x);
  const double radicand = 3.0 * cbrt_x * cbrt_x + 2.0 * y - 2.0 * t1;
  if (radicand < -opt.tol.verdict_tol) {
    std::ostringstream msg;
    msg << "r2: radicand " << radicand << " is negative beyond tolerance";
    throw NumericalError(msg.str());
  }

  CriterionResult out;
  out.id = "r2";
  out.value = std::sqrt(std::max(0.0, radicand)) - 1.0;
  out.detects = detects_inequality(out.value, opt.tol);
  out.details["T1"] = t1;
  out.details["T2"] = t2;
  out.details["T3"] = t3;
  out.details["D2"] = d2;
  out.details["D3"] = d3c;
  out.details["f"] = f;
  out.details["g"] = g;
  out.details["X"] = x;
  out.details["Y"] = y;
  return out;
}

CriterionResult p3_ppt(const DensityMatrix& rho, const CriterionOptions& opt) {
  const MomentSet p = pt_moments(rho, 3);
  CriterionResult out;
  out.id = "p3ppt";
  out.value = p.at(2) * p.at(2) - p.at(3) * p.at(1);
  out.detects = detects_inequality(out.value, opt.tol);
  out.details["p1"] = p.at(1);
  out.details["p2"] = p.at(2);
  out.details["p3"] = p.at(3);
  return out;
}

CriterionResult d3(const DensityMatrix& rho, const CriterionOptions& opt) {
  const MomentSet p = pt_moments(rho, 3);
  const double p1 = p.at(1), p2 = p.at(2), p3 = p.at(3);
  CriterionResult out;
  out.id = "d3";
  out.value = 1.5 * p1 * p2 - 0.5 * p1 * p1 * p1 - p3;
  out.detects = detects_inequality(out.value, opt.tol);
  out.details["p1"] = p1;
  out.details["p2"] = p2;
  out.details["p3"] = p3;
  return out;
}

CriterionResult p3_oppt(const DensityMatrix& rho, const CriterionOptions& opt) {
  const MomentSet p = pt_moments(rho, 3);
  const double p3 = p.at(3);
  double p2 = p.at(2);
  if (!(p2 > 0.0)) {
    std::ostringstream msg;
    msg << "p3oppt: p2 = " << p2 << " must be positive";
    throw ValidationError(msg.str());
  }
  // p2 = tr(rho^2) <= 1 exactly; rounding can push it a hair above, which
  // would make floor(1/p2) = 0 and break the division below.
  p2 = std::min(p2, 1.0);
  const double mu = std::floor(1.0 / p2);
  double rad = mu * (p2 * (mu + 1.0) - 1.0);
  if (rad < -1e-12) {
    std::ostringstream msg;
    msg << "p3oppt: radicand " << rad << " is negative beyond tolerance";
    throw NumericalError(msg.str());
  }
  rad = std::max(0.0, rad);
  const double x = (mu + std::sqrt(rad)) / (mu * (mu + 1.0));
  CriterionResult out;
  out.id = "p3oppt";
  out.value = mu * x * x * x + std::pow(1.0 - mu * x, 3) - p3;
  out.detects = detects_inequality(out.value, opt.tol);
  out.details["p2"] = p2;
  out.details["p3"] = p3;
  out.details["mu"] = mu;
  out.details["x"] = x;
  return out;
}

CriterionResult zhang_l4(const DensityMatrix& rho, const CriterionOptions& opt) {
  const MomentSet r = zhang_moments(rho, 3);
  CriterionResult out;
  out.id = "zhang";
  out.value = r.at(2) * r.at(2) - r.at(3);
  out.detects = detects_inequality(out.value, opt.tol);
  out.details["r2"] = r.at(2);
  out.details["r3"] = r.at(3);
  return out;
}

CriterionResult hankel_check(const DensityMatrix& rho, int max_order, const CriterionOptions& opt) {
  const int side = std::min(rho.dims.m * rho.dims.m, rho.dims.n * rho.dims.n);
  if (max_order == 0) max_order = side;
  if (max_order < 2) {
    std::ostringstream msg;
    msg << "hankel: max_order must be >= 2, got " << max_order;
    throw ValidationError(msg.str());
  }
  const auto sigma = singular_values(realign(rho).mat);

  // r_k = sum_i sigma_i^k for k = 1 .. max_order + 1 (the normalized sequence
  // shifts indices up by one).
  std::vector<double> r(static_cast<size_t>(max_order) + 2, 0.0);
  for (double s : sigma) {
    double power = 1.0;
    for (int k = 1; k <= max_order + 1; ++k) {
      power *= s;
      r[static_cast<size_t>(k)] += power;
    }
  }

  std::vector<double> h(static_cast<size_t>(max_order) + 1, 0.0);
  h[0] = 1.0;
  if (opt.hankel_mode == HankelMode::Normalized) {
    const double r1 = r[1];
    if (r1 > 0.0)
      for (int p = 1; p <= max_order; ++p) h[static_cast<size_t>(p)] = r[static_cast<size_t>(p + 1)] / r1;
  } else {
    for (int p = 1; p <= max_order; ++p) h[static_cast<size_t>(p)] = r[static_cast<size_t>(p)];
  }

  double min_eig = 0.0;
  bool first = true;
  int matrices = 0;
  auto scan = [&](int size, int shift) {
    Eigen::MatrixXd mat(size, size);
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) mat(i, j) = h[static_cast<size_t>(i + j + shift)];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mat, Eigen::EigenvaluesOnly);
    const double low = solver.eigenvalues().minCoeff();
    if (first || low < min_eig) min_eig = low;
    first = false;
    ++matrices;
  };
  for (int k = 1; 2 * k <= max_order; ++k) scan(k + 1, 0);
  for (int l = 1; 2 * l + 1 <= max_order; ++l) scan(l + 1, 1);

  CriterionResult out;
  out.id = "hankel";
  out.value = min_eig;
  out.detects = detects_spectral(out.value, opt.tol);
  out.details["max_order"] = static_cast<double>(max_order);
  out.details["matrices"] = static_cast<double>(matrices);
  out.details["mode_raw"] = opt.hankel_mode == HankelMode::Raw ? 1.0 : 0.0;
  return out;
}

CriterionResult ppt_check(const DensityMatrix& rho, const CriterionOptions& opt) {
  const auto ev = eigvals_hermitian(partial_transpose(rho).mat, opt.tol.hermiticity);
  CriterionResult out;
  out.id = "ppt";
  out.value = ev.back();
  out.detects = detects_spectral(out.value, opt.tol);
  out.details["max_eig"] = ev.front();
  return out;
}

CriterionResult ccnr_check(const DensityMatrix& rho, const CriterionOptions& opt) {
  const double norm = trace_norm(realign(rho).mat);
  CriterionResult out;
  out.id = "ccnr";
  out.value = norm - 1.0;
  out.detects = detects_inequality(out.value, opt.tol);
  out.details["trace_norm"] = norm;
  return out;
}

CriterionResult evaluate_criterion(const DensityMatrix& rho, const std::string& id,
                                   const CriterionOptions& opt) {
  if (id == "r1") return r_moment_general(rho, opt);
  if (id == "r2") return r_moment_two_qubit(rho, opt);
  if (id == "p3ppt") return p3_ppt(rho, opt);
  if (id == "d3") return d3(rho, opt);
  if (id == "p3oppt") return p3_oppt(rho, opt);
  if (id == "zhang") return zhang_l4(rho, opt);
  if (id == "hankel") return hankel_check(rho, 0, opt);
  if (id == "ppt") return ppt_check(rho, opt);
  if (id == "ccnr") return ccnr_check(rho, opt);
  throw std::invalid_argument("unknown criterion id '" + id + "'");
}

}  // namespace entdet
