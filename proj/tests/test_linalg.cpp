#include "doctest.h"

#include <cmath>

#include "entdet/errors.hpp"
#include "entdet/linalg.hpp"
#include "entdet/maps.hpp"
#include "entdet/states.hpp"

#include "support.hpp"

using namespace entdet;
using testsupport::frobenius_norm;
using testsupport::random_complex;
using testsupport::random_hermitian;
using testsupport::random_psd;
using testsupport::random_unitary;

namespace {

ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST_CASE("singular values of simple matrices") {
  auto sv = singular_values(mat2(3, 0, 0, 4));
  REQUIRE(sv.size() == 2);
  CHECK(sv[0] == doctest::Approx(4.0));
  CHECK(sv[1] == doctest::Approx(3.0));

  sv = singular_values(mat2(0, 1, 0, 0));  // nilpotent Jordan block
  CHECK(sv[0] == doctest::Approx(1.0));
  CHECK(sv[1] < 1e-14);
}

TEST_CASE("realigned maximally mixed 2x2 state has sole singular value 1/2") {
  const auto rho = isotropic(0.25);  // I/4
  const auto sv = singular_values(realign(rho).mat);
  REQUIRE(sv.size() == 4);
  CHECK(std::abs(sv[0] - 0.5) < 1e-12);
  CHECK(sv[1] < 1e-12);
  CHECK(sv[3] < 1e-12);
}

TEST_CASE("singular values reject non-finite input") {
  ComplexMatrix bad = mat2(1, 0, 0, std::nan(""));
  CHECK_THROWS_AS(singular_values(bad), ValidationError);
  CHECK_THROWS_AS(trace_norm(bad), ValidationError);
}

TEST_CASE("sum of squared singular values equals squared Frobenius norm") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const int rows = 2 + static_cast<int>(seed % 5);
    const int cols = 2 + static_cast<int>((3 * seed) % 7);
    const ComplexMatrix m = random_complex(rows, cols, seed);
    double sum = 0.0;
    for (double s : singular_values(m)) sum += s * s;
    CHECK(std::abs(sum - frobenius_norm(m) * frobenius_norm(m)) < 1e-10);
  }
}

TEST_CASE("hermitian eigenvalues: identity, Pauli-X, Bell partial transpose") {
  auto ev = eigvals_hermitian(ComplexMatrix::Identity(3, 3));
  CHECK(ev == std::vector<double>{1.0, 1.0, 1.0});

  ev = eigvals_hermitian(mat2(0, 1, 1, 0));
  CHECK(ev[0] == doctest::Approx(1.0));
  CHECK(ev[1] == doctest::Approx(-1.0));

  // Analytic oracle: the partial transpose of |psi+><psi+| has spectrum
  // {1/2, 1/2, 1/2, -1/2}.
  const auto bell = isotropic(1.0);
  ev = eigvals_hermitian(partial_transpose(bell).mat);
  CHECK(std::abs(ev[0] - 0.5) < 1e-12);
  CHECK(std::abs(ev[1] - 0.5) < 1e-12);
  CHECK(std::abs(ev[2] - 0.5) < 1e-12);
  CHECK(std::abs(ev[3] + 0.5) < 1e-12);
}

TEST_CASE("hermitian eigenvalue input errors") {
  CHECK_THROWS_AS(eigvals_hermitian(random_complex(2, 3, 7)), ValidationError);
  ComplexMatrix skew = mat2(0, 1, -1, 0);  // anti-symmetric real: not Hermitian
  CHECK_THROWS_AS(eigvals_hermitian(skew), ValidationError);
}

TEST_CASE("eigenvalue sum matches trace on random Hermitian matrices") {
  for (std::uint64_t seed = 30; seed < 40; ++seed) {
    const ComplexMatrix h = random_hermitian(3 + static_cast<int>(seed % 6), seed);
    const auto ev = eigvals_hermitian(h);
    double sum = 0.0;
    for (double v : ev) sum += v;
    CHECK(std::abs(sum - h.trace().real()) < 1e-10);
  }
}

TEST_CASE("trace norm basics") {
  CHECK(trace_norm(mat2(3, 0, 0, 4)) == doctest::Approx(7.0));
  CHECK(trace_norm(ComplexMatrix::Zero(3, 3)) == 0.0);
}

TEST_CASE("trace norm is unitarily invariant") {
  for (std::uint64_t seed = 50; seed < 58; ++seed) {
    const int d = 3 + static_cast<int>(seed % 4);
    const ComplexMatrix m = random_complex(d, d, seed);
    const ComplexMatrix u = random_unitary(d, seed + 1000);
    const ComplexMatrix v = random_unitary(d, seed + 2000);
    CHECK(std::abs(trace_norm(u * m * v) - trace_norm(m)) < 1e-9);
  }
}

TEST_CASE("power traces by repeated multiplication match the eigenvalue route") {
  ComplexMatrix d12 = mat2(1, 0, 0, 2);
  auto t = power_traces(d12, 2);
  CHECK(t == std::vector<double>{3.0, 5.0});

  ComplexMatrix third = ComplexMatrix::Identity(3, 3) / 3.0;
  t = power_traces(third, 3);
  CHECK(std::abs(t[0] - 1.0) < 1e-15);
  CHECK(std::abs(t[1] - 1.0 / 3.0) < 1e-15);
  CHECK(std::abs(t[2] - 1.0 / 9.0) < 1e-15);

  for (std::uint64_t seed = 70; seed < 78; ++seed) {
    const ComplexMatrix h = random_psd(2 + static_cast<int>(seed % 7), seed);
    const auto traces = power_traces(h, 5);
    const auto ev = eigvals_hermitian(h);
    for (int k = 1; k <= 5; ++k) {
      double expect = 0.0;
      for (double v : ev) expect += std::pow(v, k);
      CHECK(std::abs(traces[static_cast<size_t>(k - 1)] - expect) <
            1e-10 * std::max(1.0, std::abs(expect)));
    }
  }
}

TEST_CASE("power traces input errors") {
  CHECK_THROWS_AS(power_traces(ComplexMatrix::Identity(2, 2), 0), ValidationError);
  CHECK_THROWS_AS(power_traces(mat2(1, 0, 0, -1), 2), ValidationError);  // not PSD
}

TEST_CASE("numerical rank") {
  CHECK(numerical_rank(ComplexMatrix::Identity(4, 4)) == 4);
  CHECK(numerical_rank(ComplexMatrix::Zero(3, 3)) == 0);

  // Pure product state: rank-1 realignment.
  const auto product = random_separable({2, 2}, 1, 11);
  CHECK(numerical_rank(realign(product).mat) == 1);

  // rho_a realignment has rank 5.
  CHECK(numerical_rank(realign(garg_family(0.3)).mat) == 5);
}
