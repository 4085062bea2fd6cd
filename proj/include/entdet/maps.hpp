#pragma once

#include <string>

#include "entdet/states.hpp"

namespace entdet {

enum class MapKind { Realign, PartialTransposeB, PartialTransposeA };

std::string map_kind_name(MapKind kind);

/// Output of a matrix rearrangement, tagged with the map that produced it and
/// the source dimensions. Realignment gives an m^2 x n^2 matrix; partial
/// transposition gives an mn x mn Hermitian matrix.
struct RearrangedMatrix {
  MapKind origin;
  BipartiteDims dims;
  ComplexMatrix mat;
};

enum class Subsystem { A, B };

/**
 * Realignment map. Viewing rho as an m x m grid of n x n blocks Z_ab
 * (a, b in [0, m)), output row a*m + b holds block Z_ab flattened row-major:
 *
 *   realign(rho)(a*m + b, i*n + j) = rho(a*n + i, b*n + j)
 *
 * A pure entry permutation, so the Frobenius norm is preserved exactly and
 * singular values are independent of the flattening convention.
 */
RearrangedMatrix realign(const DensityMatrix& rho);

/// Partial transposition of one subsystem (default B, matching the usual
/// convention): (rho^tau_B)(a*n + i, b*n + j) = rho(a*n + j, b*n + i).
/// The output is Hermitian with unit trace; applying the map twice restores
/// the input exactly.
RearrangedMatrix partial_transpose(const DensityMatrix& rho, Subsystem subsystem = Subsystem::B);

}  // namespace entdet
