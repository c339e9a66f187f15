// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "zsalg/simd/kernels.hpp"

namespace zsalg::simd {
namespace {

// High 32 bits of the lane-wise 32x32 products.
inline __m256i mulhi_epu32(__m256i a, __m256i b) {
  __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(a, b), 32);
  __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32));
  return _mm256_blend_epi32(even, odd, 0xAA);
}

// t < 2^32 -> t mod p via Barrett with one conditional subtraction.
inline __m256i barrett_reduce(__m256i t, __m256i m, __m256i p) {
  __m256i q = mulhi_epu32(t, m);
  __m256i r = _mm256_sub_epi32(t, _mm256_mullo_epi32(q, p));
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, p));
}

void axpy_avx2(Residue* dst, const Residue* src, Residue c, std::uint32_t p,
               std::size_t n) {
  if (p >= kVectorModulusLimit) {
    scalar_kernels().axpy(dst, src, c, p, n);
    return;
  }
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(barrett_constant(p)));
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i t = _mm256_add_epi32(d, _mm256_mullo_epi32(s, vc));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), barrett_reduce(t, vm, vp));
  }
  if (i < n) scalar_kernels().axpy(dst + i, src + i, c, p, n - i);
}

void scale_avx2(Residue* row, Residue c, std::uint32_t p, std::size_t n) {
  if (p >= kVectorModulusLimit) {
    scalar_kernels().scale(row, c, p, n);
    return;
  }
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(barrett_constant(p)));
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    __m256i t = _mm256_mullo_epi32(r, vc);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(row + i), barrett_reduce(t, vm, vp));
  }
  if (i < n) scalar_kernels().scale(row + i, c, p, n - i);
}

}  // namespace

const KernelSet& avx2_kernel_set() {
  static const KernelSet set{"avx2", &axpy_avx2, &scale_avx2};
  return set;
}

}  // namespace zsalg::simd
