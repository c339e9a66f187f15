#pragma once

// Row kernels for dense elimination over F_p.
//
// Every variant computes the same function on canonical residues; the
// scalar set is the reference and the vector sets are equivalence-tested
// against it. Vector sets handle p < 2^16 (so d + c*s fits in 32 bits) and
// fall back to the scalar loop for larger moduli.

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "zsalg/fp.hpp"

namespace zsalg::simd {

/// dst[i] = (dst[i] + c * src[i]) mod p, for i in [0, n).
using AxpyFn = void (*)(Residue* dst, const Residue* src, Residue c,
                        std::uint32_t p, std::size_t n);
/// row[i] = (row[i] * c) mod p.
using ScaleFn = void (*)(Residue* row, Residue c, std::uint32_t p,
                         std::size_t n);

struct KernelSet {
  std::string_view name;
  AxpyFn axpy;
  ScaleFn scale;
};

const KernelSet& scalar_kernels();
/// nullptr when not compiled in or not supported by the running CPU.
const KernelSet* avx2_kernels();
const KernelSet* neon_kernels();

/// The set used by the library. Picks the widest supported variant unless
/// the environment variable ZSALG_SIMD is "scalar".
const KernelSet& active_kernels();

/// Largest modulus the vector paths accept.
inline constexpr std::uint32_t kVectorModulusLimit = 1u << 16;

/// Barrett constant floor(2^32 / p); for t < 2^32 the quotient estimate
/// (t * m) >> 32 undershoots by at most one.
inline std::uint32_t barrett_constant(std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t{1} << 32) / p);
}

}  // namespace zsalg::simd
