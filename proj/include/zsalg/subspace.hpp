#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "zsalg/fpmatrix.hpp"

namespace zsalg {

/// A subspace of F_p^d held canonically: its basis is the reduced row
/// echelon form with no zero rows, so two Subspace values are equal exactly
/// when they describe the same space.
class Subspace {
 public:
  static Subspace zero(Modulus mod, std::size_t ambient_dim);
  static Subspace full(Modulus mod, std::size_t ambient_dim);
  /// Span of arbitrary vectors (each of length ambient_dim).
  static Subspace span(Modulus mod, std::size_t ambient_dim,
                       const std::vector<FpVector>& vectors);
  /// Row space of m.
  static Subspace row_space(const FpMatrix& m);
  /// Adopts a basis that is already in canonical form; throws
  /// std::invalid_argument if it is not.
  static Subspace from_reduced(FpMatrix reduced_basis);

  const Modulus& modulus() const noexcept { return basis_.modulus(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_dim(); }

  const FpMatrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  FpVector basis_vector(std::size_t i) const;

  /// Remainder of v modulo the subspace; zero at every pivot column.
  FpVector reduce(std::span<const Residue> v) const;
  /// Throws std::invalid_argument on a length mismatch.
  bool contains(std::span<const Residue> v) const;
  bool is_subspace_of(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend Subspace subspace_sum(const Subspace& u, const Subspace& v);

 private:
  explicit Subspace(FpMatrix reduced_basis);

  FpMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space {v : m v = 0} inside F_p^{cols(m)}.
Subspace kernel(const FpMatrix& m);

/// Smallest subspace containing both. Throws std::invalid_argument when the
/// ambient dimensions or moduli differ.
Subspace subspace_sum(const Subspace& u, const Subspace& v);

/// Exact intersection via the Zassenhaus sum-intersection elimination.
Subspace subspace_intersect(const Subspace& u, const Subspace& v);

}  // namespace zsalg
