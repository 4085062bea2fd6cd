#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "entdet/linalg.hpp"
#include "entdet/maps.hpp"
#include "entdet/states.hpp"

#include "support.hpp"

using namespace entdet;
using testsupport::kron;

namespace {

std::vector<Complex> sorted_entries(const ComplexMatrix& m) {
  std::vector<Complex> v;
  v.reserve(static_cast<size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  std::sort(v.begin(), v.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return v;
}

/// Alternate layout: both the block grid and each block flattened
/// column-major. Related to the row-major layout by row/column permutations.
ComplexMatrix realign_column_major(const DensityMatrix& rho) {
  const int m = rho.dims.m;
  const int n = rho.dims.n;
  ComplexMatrix out(m * m, n * n);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(b * m + a, j * n + i) = rho.mat(a * n + i, b * n + j);
  return out;
}

}  // namespace

TEST_CASE("realignment of a 2x3 state reproduces the vec-of-blocks layout") {
  // Build the rearrangement by hand the way the block display defines it:
  // rows are (vec Z11, vec Z12, vec Z21, vec Z22) with row-major vec.
  const auto rho = random_density({2, 3}, 5, 314);
  ComplexMatrix expected(4, 9);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const ComplexMatrix block = rho.mat.block(3 * a, 3 * b, 3, 3);
      int col = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) expected(2 * a + b, col++) = block(i, j);
    }
  const auto r = realign(rho);
  REQUIRE(r.mat.rows() == 4);
  REQUIRE(r.mat.cols() == 9);
  CHECK((r.mat - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("realignment of a product state is the rank-1 outer product of vecs") {
  // A (x) B with A, B pure local projectors.
  ComplexMatrix av = testsupport::random_complex(2, 1, 31);
  ComplexMatrix bv = testsupport::random_complex(3, 1, 32);
  av /= std::sqrt(av.squaredNorm());
  bv /= std::sqrt(bv.squaredNorm());
  const ComplexMatrix a = av * av.adjoint();
  const ComplexMatrix b = bv * bv.adjoint();
  const auto rho = validate(kron(a, b), {2, 3});

  const auto r = realign(rho).mat;
  CHECK(numerical_rank(r) == 1);

  ComplexMatrix vec_a(4, 1), vec_b(9, 1);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) vec_a(2 * i + j, 0) = a(i, j);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) vec_b(3 * i + j, 0) = b(i, j);
  const ComplexMatrix outer = vec_a * vec_b.transpose();
  CHECK((r - outer).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("realignment of the 2x2 maximally mixed state has trace norm 1/2") {
  CHECK(std::abs(trace_norm(realign(isotropic(0.25)).mat) - 0.5) < 1e-12);
}

TEST_CASE("realignment preserves Frobenius norm and the entry multiset") {
  for (std::uint64_t seed = 400; seed < 410; ++seed) {
    const auto rho = random_density({2, 3}, 4, seed);
    const auto r = realign(rho);
    CHECK(std::abs(testsupport::frobenius_norm(r.mat) - testsupport::frobenius_norm(rho.mat)) <
          1e-12);
    CHECK(sorted_entries(r.mat) == sorted_entries(rho.mat));
  }
}

TEST_CASE("realignment singular values do not depend on the flattening convention") {
  for (std::uint64_t seed = 420; seed < 426; ++seed) {
    const auto rho = random_density({3, 3}, 5, seed);
    const auto sv_row = singular_values(realign(rho).mat);
    const auto sv_col = singular_values(realign_column_major(rho));
    REQUIRE(sv_row.size() == sv_col.size());
    for (size_t i = 0; i < sv_row.size(); ++i) CHECK(std::abs(sv_row[i] - sv_col[i]) < 1e-10);
  }
}

TEST_CASE("partial transpose basics") {
  SUBCASE("diagonal states are unchanged") {
    const auto rho = bell_diagonal({0.25, 0.25, 0.25, 0.25});
    const auto pt = partial_transpose(rho);
    CHECK((pt.mat - rho.mat).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("output is Hermitian with unit trace") {
    const auto rho = random_density({2, 3}, 6, 55);
    const auto pt = partial_transpose(rho);
    CHECK(hermiticity_deviation(pt.mat) < 1e-12);
    CHECK(std::abs(pt.mat.trace().real() - 1.0) < 1e-12);
  }
  SUBCASE("involution is exact") {
    const auto rho = random_density({3, 3}, 4, 56);
    const auto once = partial_transpose(rho);
    const auto twice = partial_transpose(DensityMatrix{rho.dims, once.mat});
    CHECK(twice.mat == rho.mat);
    const auto once_a = partial_transpose(rho, Subsystem::A);
    const auto twice_a = partial_transpose(DensityMatrix{rho.dims, once_a.mat}, Subsystem::A);
    CHECK(twice_a.mat == rho.mat);
  }
  SUBCASE("both subsystems have the same spectrum") {
    const auto rho = random_density({2, 3}, 5, 57);
    const auto ev_b = eigvals_hermitian(partial_transpose(rho, Subsystem::B).mat);
    const auto ev_a = eigvals_hermitian(partial_transpose(rho, Subsystem::A).mat);
    for (size_t i = 0; i < ev_a.size(); ++i) CHECK(std::abs(ev_a[i] - ev_b[i]) < 1e-10);
  }
}

TEST_CASE("map metadata") {
  const auto rho = random_density({2, 3}, 3, 60);
  CHECK(map_kind_name(realign(rho).origin) == "realign");
  CHECK(map_kind_name(partial_transpose(rho).origin) == "partial-transpose-B");
  CHECK(map_kind_name(partial_transpose(rho, Subsystem::A).origin) == "partial-transpose-A");
  CHECK(realign(rho).mat.rows() == 4);
  CHECK(realign(rho).mat.cols() == 9);
  CHECK(partial_transpose(rho).mat.rows() == 6);
}

TEST_CASE("separable states satisfy both map-level necessary conditions") {
  for (std::uint64_t seed = 500; seed < 540; ++seed) {
    const auto rho = random_separable({2, 2}, 3, seed);
    CHECK(trace_norm(realign(rho).mat) <= 1.0 + 1e-9);
    CHECK(eigvals_hermitian(partial_transpose(rho).mat).back() >= -1e-10);
  }
}
