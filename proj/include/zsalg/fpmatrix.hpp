#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "zsalg/fp.hpp"

namespace zsalg {

/// Dense row-major matrix over F_p. All entries are canonical residues of
/// one shared modulus.
class FpMatrix {
 public:
  FpMatrix(Modulus mod, std::size_t rows, std::size_t cols);

  /// Entries are reduced mod p, so negative literals are accepted.
  static FpMatrix from_rows(Modulus mod, std::size_t cols,
                            const std::vector<std::vector<std::int64_t>>& rows);
  static FpMatrix from_rows(Modulus mod, std::size_t cols,
                            const std::vector<FpVector>& rows);
  static FpMatrix identity(Modulus mod, std::size_t n);

  const Modulus& modulus() const noexcept { return mod_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Residue> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Residue> values);
  FpMatrix transpose() const;
  /// Matrix-vector product m * v.
  FpVector apply(std::span<const Residue> v) const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  Modulus mod_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

/// Incremental Gaussian elimination. Rows are kept in semi-echelon form
/// (each row is zero at the pivots of rows inserted before it) and only
/// back-substituted when the canonical form is requested.
class EchelonBuilder {
 public:
  EchelonBuilder(Modulus mod, std::size_t cols);

  /// Reduces v against the current rows and keeps the remainder if it is
  /// nonzero. Returns true when the rank grew.
  bool insert(std::span<const Residue> v);
  /// In-place remainder of v modulo the current row space.
  void reduce(std::span<Residue> v) const;

  std::size_t rank() const noexcept { return pivots_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  bool full() const noexcept { return rank() == cols_; }

  /// Reduced row echelon basis (rank x cols), pivots ascending.
  FpMatrix finish() const;

 private:
  Modulus mod_;
  std::size_t cols_;
  std::vector<Residue> rows_;         // rank x cols, semi-echelon
  std::vector<std::size_t> pivots_;   // pivot column per stored row
  std::vector<Residue> scratch_;
};

struct RrefResult {
  FpMatrix matrix;  // same shape as the input, zero rows at the bottom
  std::size_t rank;
};

/// Canonical reduced row echelon form; the row space is preserved.
RrefResult rref(const FpMatrix& m);

/// Column indices of the leading entries of a matrix already in RREF.
std::vector<std::size_t> pivot_columns(const FpMatrix& reduced);

}  // namespace zsalg
