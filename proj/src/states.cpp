#include "entdet/states.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "entdet/errors.hpp"

namespace entdet {

namespace {

constexpr double kFamilyPsdSlack = 1e-6;

void check_dims(BipartiteDims dims) {
  if (dims.m < 2 || dims.n < 2) {
    std::ostringstream msg;
    msg << "dims: local dimensions must be >= 2, got " << dims.m << "x" << dims.n;
    throw ValidationError(msg.str());
  }
}

DensityMatrix validate_family(const ComplexMatrix& raw, BipartiteDims dims) {
  Tolerances tol;
  tol.psd_slack = kFamilyPsdSlack;
  return validate(raw, dims, tol);
}

ComplexMatrix projector(const Eigen::VectorXcd& v) { return v * v.adjoint(); }

}  // namespace

DensityMatrix validate(const ComplexMatrix& raw, BipartiteDims dims, const Tolerances& tol) {
  check_dims(dims);
  const int d = dims.total();
  if (raw.rows() != d || raw.cols() != d) {
    std::ostringstream msg;
    msg << "shape: expected " << d << "x" << d << " for dims " << dims.m << "x" << dims.n
        << ", got " << raw.rows() << "x" << raw.cols();
    throw ValidationError(msg.str());
  }
  if (!all_finite(raw)) throw ValidationError("entries: matrix has non-finite entries");

  double dev = 0.0;
  int dev_i = 0, dev_j = 0;
  for (int j = 0; j < d; ++j)
    for (int i = 0; i <= j; ++i) {
      const double e = std::abs(raw(i, j) - std::conj(raw(j, i)));
      if (e > dev) {
        dev = e;
        dev_i = i;
        dev_j = j;
      }
    }
  if (dev > tol.hermiticity) {
    std::ostringstream msg;
    msg << "hermitian: max deviation " << dev << " at (" << dev_i << "," << dev_j << ")";
    throw ValidationError(msg.str());
  }

  const Complex tr = raw.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol.hermiticity) {
    std::ostringstream msg;
    msg << "trace: " << tr.real();
    if (std::abs(tr.imag()) > 0.0) msg << (tr.imag() < 0 ? "-" : "+") << std::abs(tr.imag()) << "i";
    msg << ", expected 1";
    throw ValidationError(msg.str());
  }

  const auto ev = eigvals_hermitian(raw, tol.hermiticity);
  if (!ev.empty() && ev.back() < -tol.psd_slack) {
    std::ostringstream msg;
    msg << "psd: min eigenvalue " << ev.back();
    throw ValidationError(msg.str());
  }
  return DensityMatrix{dims, raw};
}

DensityMatrix isotropic(double f) {
  if (!(f >= 0.0 && f <= 1.0)) {
    std::ostringstream msg;
    msg << "isotropic: f must be in [0,1], got " << f;
    throw ValidationError(msg.str());
  }
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
  psi(0) = psi(3) = 1.0 / std::numbers::sqrt2;
  ComplexMatrix rho = ((1.0 - f) / 3.0) * ComplexMatrix::Identity(4, 4) +
                      Complex((4.0 * f - 1.0) / 3.0) * projector(psi);
  return validate_family(rho, {2, 2});
}

DensityMatrix toth_family(double q) {
  if (!(q >= 0.0 && q <= 0.5)) {
    std::ostringstream msg;
    msg << "toth: q must be in [0, 1/2], got " << q;
    throw ValidationError(msg.str());
  }
  const double p = (1.0 - 2.0 * q) / 4.0;
  const double s2 = 1.0 / std::numbers::sqrt2;

  // |ij> with i,j in {0..3} maps to index 4i + j.
  auto vec = [](std::initializer_list<std::pair<int, double>> amps) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(16);
    for (const auto& [idx, a] : amps) v(idx) = a;
    return v;
  };
  const std::array<Eigen::VectorXcd, 4> bell_like = {
      vec({{1, s2}, {11, s2}}),    // (|01> + |23>)/sqrt2
      vec({{4, s2}, {14, s2}}),    // (|10> + |32>)/sqrt2
      vec({{5, s2}, {10, s2}}),    // (|11> + |22>)/sqrt2
      vec({{0, s2}, {15, -s2}}),   // (|00> - |33>)/sqrt2
  };
  const std::array<Eigen::VectorXcd, 2> extra = {
      vec({{3, 0.5}, {6, 0.5}, {9, s2}}),    // (|03> + |12>)/2 + |21>/sqrt2
      vec({{3, -0.5}, {6, 0.5}, {12, s2}}),  // (-|03> + |12>)/2 + |30>/sqrt2
  };

  ComplexMatrix rho = ComplexMatrix::Zero(16, 16);
  for (const auto& v : bell_like) rho += Complex(p) * projector(v);
  for (const auto& v : extra) rho += Complex(q) * projector(v);
  return validate_family(rho, {4, 4});
}

DensityMatrix garg_family(double a) {
  ComplexMatrix rho = ComplexMatrix::Zero(9, 9);
  const double w = -11.0 / 50.0;
  rho(0, 0) = (1.0 - a) / 2.0;
  rho(0, 8) = rho(8, 0) = w;
  rho(4, 4) = 0.5 - a;
  rho(4, 5) = rho(5, 4) = w;
  rho(5, 5) = a;
  rho(8, 8) = a / 2.0;
  return validate_family(rho, {3, 3});
}

DensityMatrix rudolph_family(double s, double t) {
  if (!(s > 0.25 && s <= 1.0)) {
    std::ostringstream msg;
    msg << "rudolph: s must be in (1/4, 1], got " << s;
    throw ValidationError(msg.str());
  }
  ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
  rho(0, 0) = 5.0 / 8.0;
  rho(0, 3) = rho(3, 0) = t / 2.0;
  rho(2, 2) = (s - 0.25) / 2.0;
  rho(3, 3) = (1.0 - s) / 2.0;
  return validate_family(rho, {2, 2});
}

DensityMatrix filtered_family(double b, double c, double d) {
  ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
  rho(0, 0) = 0.5 * (1.0 + c);
  rho(0, 3) = rho(3, 0) = 0.5 * d;
  rho(2, 2) = 0.5 * (b - c);
  rho(3, 3) = 0.5 * (1.0 - b);
  return validate_family(rho, {2, 2});
}

DensityMatrix bell_diagonal(const std::array<double, 4>& p) {
  double sum = 0.0;
  for (double w : p) {
    if (!(w >= 0.0)) {
      std::ostringstream msg;
      msg << "bell_diagonal: weights must be non-negative, got " << w;
      throw ValidationError(msg.str());
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-10) {
    std::ostringstream msg;
    msg << "bell_diagonal: weights sum to " << sum << ", expected 1";
    throw ValidationError(msg.str());
  }
  const double s2 = 1.0 / std::numbers::sqrt2;
  auto bell = [&](int i, int j, double sign) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
    v(i) = s2;
    v(j) = sign * s2;
    return v;
  };
  // Order: Phi+, Phi-, Psi+, Psi-.
  const std::array<Eigen::VectorXcd, 4> basis = {bell(0, 3, 1.0), bell(0, 3, -1.0),
                                                 bell(1, 2, 1.0), bell(1, 2, -1.0)};
  ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) rho += Complex(p[i]) * projector(basis[i]);
  return validate_family(rho, {2, 2});
}

namespace detail {

double GaussianStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double GaussianStream::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

Complex GaussianStream::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

}  // namespace detail

DensityMatrix random_density(BipartiteDims dims, int rank, std::uint64_t seed) {
  check_dims(dims);
  const int d = dims.total();
  if (rank < 1 || rank > d) {
    std::ostringstream msg;
    msg << "random_density: rank must be in [1, " << d << "], got " << rank;
    throw ValidationError(msg.str());
  }
  detail::GaussianStream rng(seed);
  ComplexMatrix g(d, rank);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < rank; ++j) g(i, j) = rng.complex_normal();
  ComplexMatrix rho = g * g.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  rho /= rho.trace().real();
  return validate(rho, dims);
}

DensityMatrix random_separable(BipartiteDims dims, int terms, std::uint64_t seed) {
  check_dims(dims);
  if (terms < 1) {
    std::ostringstream msg;
    msg << "random_separable: terms must be >= 1, got " << terms;
    throw ValidationError(msg.str());
  }
  detail::GaussianStream rng(seed);

  std::vector<double> w(static_cast<size_t>(terms));
  double wsum = 0.0;
  for (double& x : w) {
    x = -std::log(1.0 - rng.uniform());
    wsum += x;
  }
  if (wsum <= 0.0) {
    w.assign(w.size(), 1.0);
    wsum = static_cast<double>(terms);
  }

  auto random_pure = [&](int dim) {
    Eigen::VectorXcd v(dim);
    for (int i = 0; i < dim; ++i) v(i) = rng.complex_normal();
    v.normalize();
    return v;
  };

  const int d = dims.total();
  ComplexMatrix rho = ComplexMatrix::Zero(d, d);
  for (int term = 0; term < terms; ++term) {
    const ComplexMatrix a = projector(random_pure(dims.m));
    const ComplexMatrix b = projector(random_pure(dims.n));
    const double weight = w[static_cast<size_t>(term)] / wsum;
    for (int i = 0; i < dims.m; ++i)
      for (int j = 0; j < dims.m; ++j)
        for (int k = 0; k < dims.n; ++k)
          for (int l = 0; l < dims.n; ++l)
            rho(i * dims.n + k, j * dims.n + l) += weight * a(i, j) * b(k, l);
  }
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return validate(rho, dims);
}

namespace {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

void save_state(const DensityMatrix& state, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("save_state: cannot open '" + path + "' for writing");
  const int d = state.dims.total();
  out << "{\n  \"m\": " << state.dims.m << ",\n  \"n\": " << state.dims.n
      << ",\n  \"matrix\": [\n";
  for (int i = 0; i < d; ++i) {
    out << "    [";
    for (int j = 0; j < d; ++j) {
      const Complex z = state.mat(i, j);
      out << "[" << format_double(z.real()) << ", " << format_double(z.imag()) << "]";
      if (j + 1 < d) out << ", ";
    }
    out << "]" << (i + 1 < d ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  if (!out) throw ValidationError("save_state: write to '" + path + "' failed");
}

DensityMatrix load_state(const std::string& path, const Tolerances& tol) {
  std::ifstream in(path);
  if (!in) throw ValidationError("load_state: cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("load_state: parse error: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("m") || !doc.contains("n") || !doc.contains("matrix"))
    throw ValidationError("load_state: document must contain \"m\", \"n\", \"matrix\"");
  if (!doc["m"].is_number_integer() || !doc["n"].is_number_integer())
    throw ValidationError("load_state: \"m\" and \"n\" must be integers");
  const BipartiteDims dims{doc["m"].get<int>(), doc["n"].get<int>()};
  check_dims(dims);
  const int d = dims.total();
  const auto& rows = doc["matrix"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != d) {
    std::ostringstream msg;
    msg << "load_state: \"matrix\" must have " << d << " rows, got "
        << (rows.is_array() ? rows.size() : 0);
    throw ValidationError(msg.str());
  }
  ComplexMatrix raw(d, d);
  for (int i = 0; i < d; ++i) {
    const auto& row = rows[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != d) {
      std::ostringstream msg;
      msg << "load_state: row " << i << " must have " << d << " entries";
      throw ValidationError(msg.str());
    }
    for (int j = 0; j < d; ++j) {
      const auto& cell = row[static_cast<size_t>(j)];
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number()) {
        std::ostringstream msg;
        msg << "load_state: entry (" << i << "," << j << ") must be [re, im]";
        throw ValidationError(msg.str());
      }
      raw(i, j) = Complex(cell[0].get<double>(), cell[1].get<double>());
      if (!std::isfinite(raw(i, j).real()) || !std::isfinite(raw(i, j).imag())) {
        std::ostringstream msg;
        msg << "load_state: non-finite entry at (" << i << "," << j << ")";
        throw ValidationError(msg.str());
      }
    }
  }
  return validate(raw, dims, tol);
}

}  // namespace entdet
