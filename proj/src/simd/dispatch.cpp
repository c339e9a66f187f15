#include <cstdlib>
#include <string_view>

#include "zsalg/simd/kernels.hpp"

namespace zsalg::simd {

#if defined(ZSALG_HAVE_AVX2)
const KernelSet& avx2_kernel_set();
#endif
#if defined(ZSALG_HAVE_NEON)
const KernelSet& neon_kernel_set();
#endif

const KernelSet* avx2_kernels() {
#if defined(ZSALG_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &avx2_kernel_set() : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet* neon_kernels() {
#if defined(ZSALG_HAVE_NEON)
  // Advanced SIMD is mandatory on AArch64.
  return &neon_kernel_set();
#else
  return nullptr;
#endif
}

const KernelSet& active_kernels() {
  static const KernelSet& chosen = [] () -> const KernelSet& {
    const char* env = std::getenv("ZSALG_SIMD");
    if (env && std::string_view(env) == "scalar") return scalar_kernels();
    if (const KernelSet* k = avx2_kernels()) return *k;
    if (const KernelSet* k = neon_kernels()) return *k;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace zsalg::simd
