#include "entdet/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "entdet/errors.hpp"

namespace entdet {

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

double hermiticity_deviation(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  double dev = 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i <= j; ++i)
      dev = std::max(dev, std::abs(m(i, j) - std::conj(m(j, i))));
  return dev;
}

namespace {

void require_finite(const ComplexMatrix& m, const char* op) {
  if (!all_finite(m)) {
    std::ostringstream msg;
    msg << op << ": matrix has non-finite entries";
    throw ValidationError(msg.str());
  }
}

}  // namespace

std::vector<double> singular_values(const ComplexMatrix& m) {
  require_finite(m, "singular_values");
  if (m.size() == 0) return {};
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto& sv = svd.singularValues();
  return std::vector<double>(sv.data(), sv.data() + sv.size());
}

std::vector<double> eigvals_hermitian(const ComplexMatrix& m, double herm_tol) {
  require_finite(m, "eigvals_hermitian");
  if (m.rows() != m.cols()) {
    std::ostringstream msg;
    msg << "eigvals_hermitian: matrix is " << m.rows() << "x" << m.cols() << ", expected square";
    throw ValidationError(msg.str());
  }
  const double dev = hermiticity_deviation(m);
  if (dev > herm_tol) {
    std::ostringstream msg;
    msg << "eigvals_hermitian: not Hermitian, max deviation " << dev << " > " << herm_tol;
    throw ValidationError(msg.str());
  }
  ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  Eigen::VectorXd ev = solver.eigenvalues();  // ascending
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::reverse(out.begin(), out.end());
  return out;
}

double trace_norm(const ComplexMatrix& m) {
  const auto sigma = singular_values(m);
  double sum = 0.0;
  for (double s : sigma) sum += s;
  return sum;
}

std::vector<double> power_traces(const ComplexMatrix& h, int k_max, const Tolerances& tol) {
  if (k_max < 1) throw ValidationError("power_traces: moment order must be >= 1");
  const auto ev = eigvals_hermitian(h, tol.hermiticity);  // validates square/Hermitian
  if (!ev.empty() && ev.back() < -tol.psd_slack) {
    std::ostringstream msg;
    msg << "power_traces: matrix not PSD, min eigenvalue " << ev.back();
    throw ValidationError(msg.str());
  }
  std::vector<double> traces;
  traces.reserve(static_cast<size_t>(k_max));
  ComplexMatrix power = h;
  for (int k = 1; k <= k_max; ++k) {
    if (k > 1) power = (power * h).eval();
    traces.push_back(power.trace().real());
  }
  return traces;
}

int numerical_rank(const std::vector<double>& sigma, double rel_tol) {
  if (sigma.empty()) return 0;
  const double smax = sigma.front();
  if (!(smax > 0.0)) return 0;
  int rank = 0;
  for (double s : sigma)
    if (s > rel_tol * smax) ++rank;
  return rank;
}

int numerical_rank(const ComplexMatrix& m, double rel_tol) {
  return numerical_rank(singular_values(m), rel_tol);
}

}  // namespace entdet
