#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "zsalg/group.hpp"
#include "zsalg/subspace.hpp"

namespace zsalg {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// An element of a specific algebra: coefficients on its basis.
struct AlgebraElement {
  const Algebra* parent = nullptr;
  FpVector coeffs;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.parent == b.parent && a.coeffs == b.coeffs;
  }
};

/// Sparse structure constant: basis_i * basis_j = sum of coeff * basis_k.
struct Term {
  std::uint32_t index;
  Residue coeff;
};

/// A finite-dimensional unital associative algebra over F_p.
///
/// Products of basis elements come from one of three backings: a group
/// table (group algebras), a base algebra (matrix algebras M_k(A)), or an
/// explicit structure-constant table (small generic algebras, dim <= 256).
///
/// The Jacobson radical is never computed generically. Constructors that
/// know it attach it together with `radical_generators`, a set generating
/// the radical both as a left and as a right ideal; radical powers and
/// socles iterate over those generators instead of a full radical basis.
///
/// Radical powers, socles and the center are memoized; the caches are
/// guarded so concurrent readers are safe.
class Algebra {
 public:
  struct TableBacking {
    std::vector<std::vector<Term>> products;  // dim * dim entries
  };
  struct GroupBacking {
    GroupPtr group;
  };
  struct MatrixBacking {
    AlgebraPtr base;
    std::size_t k;
  };
  using Backing = std::variant<TableBacking, GroupBacking, MatrixBacking>;

  struct Parts {
    Modulus mod;
    std::size_t dim;
    std::vector<std::string> labels;
    FpVector unit;
    Backing backing;
    std::optional<Subspace> radical;
    std::vector<FpVector> radical_generators;  // empty: use the radical basis
    std::vector<FpVector> algebra_generators;  // empty: use the whole basis
  };

  explicit Algebra(Parts parts);

  /// Generic algebra from a full table of basis products (row-major,
  /// dim*dim vectors of length dim). Associativity and the unit are checked
  /// exhaustively for dim <= 64 and on a deterministic sample above; an
  /// attached radical must be a two-sided ideal.
  static AlgebraPtr from_structure_constants(Modulus mod, std::vector<std::string> labels,
                                             const std::vector<FpVector>& products, FpVector unit,
                                             std::optional<Subspace> radical = std::nullopt);

  const Modulus& modulus() const noexcept { return mod_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& basis_labels() const noexcept { return labels_; }
  const FpVector& unit() const noexcept { return unit_; }
  const Backing& backing() const noexcept { return backing_; }
  /// Non-null exactly for group algebras.
  const Group* group() const noexcept;

  const std::optional<Subspace>& radical() const noexcept { return radical_; }
  const std::vector<FpVector>& radical_generators() const noexcept { return radical_generators_; }
  const std::vector<FpVector>& algebra_generators() const noexcept { return algebra_generators_; }

  /// out += coeff * (basis_i * basis_j).
  void accumulate_basis_product(std::size_t i, std::size_t j, Residue coeff,
                                std::span<Residue> out) const;
  FpVector multiply(std::span<const Residue> x, std::span<const Residue> y) const;
  FpVector basis_vector(std::size_t i) const;

  AlgebraElement element(FpVector coeffs) const;

  /// J^n. J^0 is the whole algebra; throws RadicalNotSupplied without a radical.
  Subspace radical_power(std::size_t n) const;
  /// Right socle {x : x J^n = 0}, via Soc^n = {x : x t in Soc^{n-1} for
  /// every radical generator t}.
  Subspace socle(std::size_t n) const;
  /// Kernel of x -> (x g - g x) over the algebra generators.
  Subspace center() const;
  /// min{n : J^n = 0}.
  std::size_t nilpotency_index() const;

 private:
  Modulus mod_;
  std::size_t dim_;
  std::vector<std::string> labels_;
  FpVector unit_;
  Backing backing_;
  std::optional<Subspace> radical_;
  std::vector<FpVector> radical_generators_;
  std::vector<FpVector> algebra_generators_;

  mutable std::mutex cache_mutex_;
  mutable std::vector<Subspace> radical_powers_;  // J^0 .. J^m, last one zero once known
  mutable std::vector<Subspace> socles_;          // Soc^0 .. Soc^m, last one full once known
  mutable std::optional<Subspace> center_;
};

/// F_p G with basis G. When G is a p-group for this p the augmentation
/// ideal is attached as the radical, generated by {s - 1 : s a generator}.
AlgebraPtr group_algebra(GroupPtr g, std::uint32_t p);

/// M_k(A) with basis E_rc (x) basis(A) at index (r*k + c)*dim(A) + i. The
/// radical, when A has one, is M_k(rad A).
AlgebraPtr matrix_algebra(AlgebraPtr a, std::size_t k);

/// Throws std::invalid_argument when the parents differ.
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);

Subspace radical_power(const Algebra& a, std::size_t n);
Subspace socle_n(const Algebra& a, std::size_t n);
Subspace center(const Algebra& a);
/// Z(A) ∩ Soc^n(A).
Subspace zs(const Algebra& a, std::size_t n);

/// min{n : J^n = 0}, cross-checked against min{n : ZS^n = Z}; throws
/// InternalError if they differ.
std::size_t loewy_length(const Algebra& a);

/// Span of the conjugacy class sums of a group algebra.
Subspace class_sum_span(const Algebra& a);

/// N^+ = sum of the elements of N.
AlgebraElement group_sum(const Algebra& a, const SubgroupSet& n);

/// Whether the ideal F G * N^+ lies in Z(F G). N must be normal.
bool central_ideal_check(const Algebra& a, const SubgroupSet& n);

struct MoritaReport {
  std::size_t k = 0;
  std::size_t base_loewy_length = 0;
  std::size_t matrix_loewy_length = 0;
  std::vector<std::size_t> base_dims;    // dim ZS^n(A), n = 0..N
  std::vector<std::size_t> matrix_dims;  // dim ZS^n(M_k(A)), n = 0..N
  bool equal = false;
};

MoritaReport morita_invariance_check(const AlgebraPtr& a, std::size_t k);

/// dim ZS^n <= dim A - dim J^n for all n, for a local algebra. Throws
/// std::invalid_argument when dim J != dim A - 1.
bool otokita_bound_check(const Algebra& a);

}  // namespace zsalg
