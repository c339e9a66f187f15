#include <random>
#include <initializer_list>
#include <vector>

#include "doctest.h"
#include "zsalg/simd/kernels.hpp"

using namespace zsalg;

namespace {

std::vector<const simd::KernelSet*> vector_sets() {
  std::vector<const simd::KernelSet*> sets;
  if (auto* k = simd::avx2_kernels()) sets.push_back(k);
  if (auto* k = simd::neon_kernels()) sets.push_back(k);
  return sets;
}

std::vector<Residue> random_row(std::mt19937_64& rng, std::uint32_t p, std::size_t n) {
  std::uniform_int_distribution<Residue> dist(0, p - 1);
  std::vector<Residue> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

}  // namespace

TEST_CASE("scalar kernels match the definition") {
  const auto& k = simd::scalar_kernels();
  std::vector<Residue> dst{1, 2, 0, 4}, src{4, 4, 3, 0};
  k.axpy(dst.data(), src.data(), 3, 5, dst.size());
  CHECK(dst == std::vector<Residue>{3, 4, 4, 4});
  k.scale(dst.data(), 2, 5, dst.size());
  CHECK(dst == std::vector<Residue>{1, 3, 3, 3});
}

TEST_CASE("barrett quotient undershoots by at most one") {
  for (std::uint32_t p : {2u, 3u, 5u, 251u, 65521u}) {
    const std::uint64_t m = simd::barrett_constant(p);
    for (std::uint64_t t : std::initializer_list<std::uint64_t>{0, 1, std::uint64_t{p} - 1, std::uint64_t{p} * p - 1,
                            (1ull << 32) - 1, (1ull << 31) + 12345}) {
      const std::uint64_t q = (t * m) >> 32;
      CHECK(q <= t / p);
      CHECK(t / p - q <= 1);
    }
  }
}

TEST_CASE("vector kernels equal the scalar reference") {
  const auto sets = vector_sets();
  if (sets.empty()) MESSAGE("no vector kernel set on this CPU; only the scalar path is exercised");
  std::mt19937_64 rng(20240611);
  const auto& ref = simd::scalar_kernels();
  for (const auto* set : sets) {
    CAPTURE(set->name);
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 251u, 257u, 65521u, 65537u, 2147483647u}) {
      for (std::size_t n : {0u, 1u, 3u, 7u, 8u, 9u, 15u, 16u, 17u, 31u, 64u, 100u}) {
        for (int trial = 0; trial < 8; ++trial) {
          CAPTURE(p);
          CAPTURE(n);
          auto dst = random_row(rng, p, n), src = random_row(rng, p, n);
          const Residue c = random_row(rng, p, 1)[0];
          auto expect = dst;
          ref.axpy(expect.data(), src.data(), c, p, n);
          set->axpy(dst.data(), src.data(), c, p, n);
          CHECK(dst == expect);

          auto row = random_row(rng, p, n);
          auto row_ref = row;
          ref.scale(row_ref.data(), c, p, n);
          set->scale(row.data(), c, p, n);
          CHECK(row == row_ref);
        }
      }
    }
    // Extremes: every entry p - 1 with coefficient p - 1.
    for (std::uint32_t p : {3u, 65521u}) {
      std::vector<Residue> dst(37, p - 1), src(37, p - 1), expect(37, p - 1);
      ref.axpy(expect.data(), src.data(), p - 1, p, 37);
      set->axpy(dst.data(), src.data(), p - 1, p, 37);
      CHECK(dst == expect);
    }
  }
}

TEST_CASE("active kernel set is one of the known sets") {
  const auto& active = simd::active_kernels();
  const bool known = active.name == simd::scalar_kernels().name ||
                     (simd::avx2_kernels() && active.name == simd::avx2_kernels()->name) ||
                     (simd::neon_kernels() && active.name == simd::neon_kernels()->name);
  CHECK(known);
}
