#pragma once

#include <cstdint>
#include <vector>

namespace zsalg {

/// Canonical residue in [0, p). Vectors and matrices over F_p store these
/// directly; the modulus travels alongside in the owning container.
using Residue = std::uint32_t;
using FpVector = std::vector<Residue>;

bool is_prime(std::uint64_t n);

/// A validated prime modulus with scalar arithmetic on canonical residues.
class Modulus {
 public:
  /// Throws std::invalid_argument unless p is prime.
  explicit Modulus(std::uint32_t p);

  std::uint32_t value() const noexcept { return p_; }

  Residue add(Residue a, Residue b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Residue>(s >= p_ ? s - p_ : s);
  }
  Residue sub(Residue a, Residue b) const noexcept {
    return a >= b ? a - b : static_cast<Residue>(std::uint64_t{a} + p_ - b);
  }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(std::uint64_t{a} * b % p_);
  }
  Residue pow(Residue a, std::uint64_t e) const noexcept;
  /// Multiplicative inverse; a must be nonzero.
  Residue inv(Residue a) const;
  /// Reduces an arbitrary signed integer into [0, p).
  Residue reduce(std::int64_t v) const noexcept;

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace zsalg
