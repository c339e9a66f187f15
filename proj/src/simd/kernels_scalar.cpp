#include "zsalg/simd/kernels.hpp"

namespace zsalg::simd {
namespace {

void axpy_scalar(Residue* dst, const Residue* src, Residue c, std::uint32_t p,
                 std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<Residue>((std::uint64_t{dst[i]} + std::uint64_t{c} * src[i]) % p);
}

void scale_scalar(Residue* row, Residue c, std::uint32_t p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    row[i] = static_cast<Residue>(std::uint64_t{row[i]} * c % p);
}

}  // namespace

const KernelSet& scalar_kernels() {
  static const KernelSet set{"scalar", &axpy_scalar, &scale_scalar};
  return set;
}

}  // namespace zsalg::simd
