#include "entdet/moments.hpp"

#include <cmath>
#include <sstream>

#include "entdet/errors.hpp"

namespace entdet {

double MomentSet::at(int k) const {
  if (k < 1 || k > count()) {
    std::ostringstream msg;
    msg << "MomentSet: moment k=" << k << " not available (have " << count() << ")";
    throw ValidationError(msg.str());
  }
  return values[static_cast<size_t>(k - 1)];
}

double NewtonCoefficients::at(int i) const {
  if (i < 1 || i > order) {
    std::ostringstream msg;
    msg << "NewtonCoefficients: D_" << i << " not available (order " << order << ")";
    throw ValidationError(msg.str());
  }
  return values[static_cast<size_t>(i - 1)];
}

MomentSet realigned_moments(const DensityMatrix& rho, int k_max) {
  if (k_max < 1) throw ValidationError("realigned_moments: moment order must be >= 1");
  const ComplexMatrix r = realign(rho).mat;
  ComplexMatrix gram;
  if (rho.dims.n <= rho.dims.m)
    gram = r.adjoint() * r;
  else
    gram = r * r.adjoint();
  gram = 0.5 * (gram + gram.adjoint()).eval();
  return MomentSet{MomentKind::Realigned, rho.dims, power_traces(gram, k_max)};
}

MomentSet pt_moments(const DensityMatrix& rho, int k_max) {
  if (k_max < 1) throw ValidationError("pt_moments: moment order must be >= 1");
  const ComplexMatrix pt = partial_transpose(rho).mat;
  std::vector<double> traces;
  traces.reserve(static_cast<size_t>(k_max));
  ComplexMatrix power = pt;
  for (int k = 1; k <= k_max; ++k) {
    if (k > 1) power = (power * pt).eval();
    traces.push_back(power.trace().real());
  }
  return MomentSet{MomentKind::PartialTranspose, rho.dims, std::move(traces)};
}

MomentSet zhang_moments(const DensityMatrix& rho, int k_max) {
  if (k_max < 1) throw ValidationError("zhang_moments: moment order must be >= 1");
  const auto sigma = singular_values(realign(rho).mat);
  std::vector<double> values;
  values.reserve(static_cast<size_t>(k_max));
  for (int k = 1; k <= k_max; ++k) {
    double sum = 0.0;
    for (double s : sigma) sum += std::pow(s, k);
    values.push_back(sum);
  }
  return MomentSet{MomentKind::Zhang, rho.dims, std::move(values)};
}

NewtonCoefficients newton_coefficients(const std::vector<double>& power_traces, int k) {
  if (k < 1) throw ValidationError("newton_coefficients: order must be >= 1");
  if (k > static_cast<int>(power_traces.size())) {
    std::ostringstream msg;
    msg << "newton_coefficients: order " << k << " exceeds available moments ("
        << power_traces.size() << ")";
    throw ValidationError(msg.str());
  }
  std::vector<double> e(static_cast<size_t>(k) + 1, 0.0);
  e[0] = 1.0;
  for (int i = 1; i <= k; ++i) {
    double acc = 0.0;
    double sign = 1.0;
    for (int j = 1; j <= i; ++j) {
      acc += sign * e[static_cast<size_t>(i - j)] * power_traces[static_cast<size_t>(j - 1)];
      sign = -sign;
    }
    e[static_cast<size_t>(i)] = acc / static_cast<double>(i);
  }
  NewtonCoefficients out;
  out.order = k;
  out.values.resize(static_cast<size_t>(k));
  for (int i = 1; i <= k; ++i)
    out.values[static_cast<size_t>(i - 1)] = (i % 2 == 0 ? 1.0 : -1.0) * e[static_cast<size_t>(i)];
  return out;
}

NewtonCoefficients newton_coefficients(const MomentSet& t, int k) {
  return newton_coefficients(t.values, k);
}

double lambda_max_lower(double t1, double t2, double t3, int n) {
  if (n < 1) throw ValidationError("lambda_max_lower: n must be >= 1");
  const double mean = t1 / n;
  double a = t2 / n - mean * mean;
  if (a < -1e-12) {
    std::ostringstream msg;
    msg << "lambda_max_lower: inconsistent moments, spectral variance " << a;
    throw NumericalError(msg.str());
  }
  // Treat nearly flat spectra as the a = 0 limit to avoid dividing by a
  // rounded-off variance.
  const double a_scale = std::max(std::abs(t2 / n), mean * mean);
  if (a <= 1e-13 * std::max(1.0, a_scale)) return mean;
  const double n3 = static_cast<double>(n) * n * n;
  const double b = (n * n * t3 - 3.0 * n * t2 * t1 + 2.0 * t1 * t1 * t1) / n3;
  return mean + (b + std::sqrt(b * b + 4.0 * a * a * a)) / (2.0 * a);
}

namespace {

/// Largest real root of x^3 + p x^2 + q x + r. Multiple roots are common
/// here (flat spectra give a discriminant of exactly zero), so the
/// near-zero-discriminant region is routed to the trigonometric three-real
/// branch rather than Cardano, whose single-real-root answer is
/// discontinuous across the split.
double largest_real_root_monic_cubic(double p, double q, double r) {
  const double shift = p / 3.0;
  const double a = q - p * p / 3.0;                         // depressed: y^3 + a y + b
  const double b = 2.0 * p * p * p / 27.0 - p * q / 3.0 + r;
  const double term_b = 0.25 * b * b;
  const double term_a = a * a * a / 27.0;
  const double disc = term_b + term_a;
  const double scale = std::max(term_b, std::abs(term_a));
  double y;
  if (disc > 1e-12 * scale) {
    const double s = std::sqrt(disc);
    y = std::cbrt(-0.5 * b + s) + std::cbrt(-0.5 * b - s);
  } else if (a < 0.0) {
    const double m = 2.0 * std::sqrt(-a / 3.0);
    const double arg = std::clamp(3.0 * b / (a * m), -1.0, 1.0);
    y = m * std::cos(std::acos(arg) / 3.0);  // top branch of the three roots
  } else {
    y = std::cbrt(-b);  // a ~ 0: near-triple root
  }
  return y - shift;
}

}  // namespace

double lambda_max_upper(double t1, double t2, double t3) {
  if (!(t1 > 0.0) || !std::isfinite(t1)) {
    std::ostringstream msg;
    msg << "lambda_max_upper: degenerate cubic, T1 = " << t1;
    throw ValidationError(msg.str());
  }
  return largest_real_root_monic_cubic(-2.0 * t2 / t1, t3 / t1, (t2 * t2 - t1 * t3) / t1);
}

}  // namespace entdet
