#include <arm_neon.h>

#include "zsalg/simd/kernels.hpp"

namespace zsalg::simd {
namespace {

inline uint32x4_t mulhi_u32(uint32x4_t a, uint32x4_t b) {
  uint64x2_t lo = vmull_u32(vget_low_u32(a), vget_low_u32(b));
  uint64x2_t hi = vmull_u32(vget_high_u32(a), vget_high_u32(b));
  return vcombine_u32(vshrn_n_u64(lo, 32), vshrn_n_u64(hi, 32));
}

inline uint32x4_t barrett_reduce(uint32x4_t t, uint32x4_t m, uint32x4_t p) {
  uint32x4_t q = mulhi_u32(t, m);
  uint32x4_t r = vsubq_u32(t, vmulq_u32(q, p));
  return vminq_u32(r, vsubq_u32(r, p));
}

void axpy_neon(Residue* dst, const Residue* src, Residue c, std::uint32_t p,
               std::size_t n) {
  if (p >= kVectorModulusLimit) {
    scalar_kernels().axpy(dst, src, c, p, n);
    return;
  }
  const uint32x4_t vp = vdupq_n_u32(p);
  const uint32x4_t vm = vdupq_n_u32(barrett_constant(p));
  const uint32x4_t vc = vdupq_n_u32(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t t = vmlaq_u32(vld1q_u32(dst + i), vld1q_u32(src + i), vc);
    vst1q_u32(dst + i, barrett_reduce(t, vm, vp));
  }
  if (i < n) scalar_kernels().axpy(dst + i, src + i, c, p, n - i);
}

void scale_neon(Residue* row, Residue c, std::uint32_t p, std::size_t n) {
  if (p >= kVectorModulusLimit) {
    scalar_kernels().scale(row, c, p, n);
    return;
  }
  const uint32x4_t vp = vdupq_n_u32(p);
  const uint32x4_t vm = vdupq_n_u32(barrett_constant(p));
  const uint32x4_t vc = vdupq_n_u32(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    vst1q_u32(row + i, barrett_reduce(vmulq_u32(vld1q_u32(row + i), vc), vm, vp));
  if (i < n) scalar_kernels().scale(row + i, c, p, n - i);
}

}  // namespace

const KernelSet& neon_kernel_set() {
  static const KernelSet set{"neon", &axpy_neon, &scale_neon};
  return set;
}

}  // namespace zsalg::simd
