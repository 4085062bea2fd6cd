#include "entdet/maps.hpp"

namespace entdet {

std::string map_kind_name(MapKind kind) {
  switch (kind) {
    case MapKind::Realign:
      return "realign";
    case MapKind::PartialTransposeB:
      return "partial-transpose-B";
    case MapKind::PartialTransposeA:
      return "partial-transpose-A";
  }
  return "unknown";
}

RearrangedMatrix realign(const DensityMatrix& rho) {
  const int m = rho.dims.m;
  const int n = rho.dims.n;
  ComplexMatrix out(m * m, n * n);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(a * m + b, i * n + j) = rho.mat(a * n + i, b * n + j);
  return RearrangedMatrix{MapKind::Realign, rho.dims, std::move(out)};
}

RearrangedMatrix partial_transpose(const DensityMatrix& rho, Subsystem subsystem) {
  const int m = rho.dims.m;
  const int n = rho.dims.n;
  ComplexMatrix out(m * n, m * n);
  if (subsystem == Subsystem::B) {
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) out(a * n + i, b * n + j) = rho.mat(a * n + j, b * n + i);
  } else {
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) out(a * n + i, b * n + j) = rho.mat(b * n + i, a * n + j);
  }
  const MapKind kind =
      subsystem == Subsystem::B ? MapKind::PartialTransposeB : MapKind::PartialTransposeA;
  return RearrangedMatrix{kind, rho.dims, std::move(out)};
}

}  // namespace entdet
