#include "zsalg/fpmatrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "zsalg/simd/kernels.hpp"

namespace zsalg {

FpMatrix::FpMatrix(Modulus mod, std::size_t rows, std::size_t cols)
    : mod_(mod), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FpMatrix FpMatrix::from_rows(Modulus mod, std::size_t cols,
                             const std::vector<std::vector<std::int64_t>>& rows) {
  FpMatrix m(mod, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = mod.reduce(rows[r][c]);
  }
  return m;
}

FpMatrix FpMatrix::from_rows(Modulus mod, std::size_t cols,
                             const std::vector<FpVector>& rows) {
  FpMatrix m(mod, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c] % mod.value();
  }
  return m;
}

FpMatrix FpMatrix::identity(Modulus mod, std::size_t n) {
  FpMatrix m(mod, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void FpMatrix::append_row(std::span<const Residue> values) {
  if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(mod_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

FpVector FpMatrix::apply(std::span<const Residue> v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  FpVector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      acc += std::uint64_t{(*this)(r, c)} * v[c] % mod_.value();
      if (acc >= (std::uint64_t{1} << 62)) acc %= mod_.value();
    }
    out[r] = static_cast<Residue>(acc % mod_.value());
  }
  return out;
}

EchelonBuilder::EchelonBuilder(Modulus mod, std::size_t cols)
    : mod_(mod), cols_(cols), scratch_(cols, 0) {}

void EchelonBuilder::reduce(std::span<Residue> v) const {
  const auto& k = simd::active_kernels();
  const std::uint32_t p = mod_.value();
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const std::size_t c = pivots_[r];
    Residue lead = v[c];
    if (lead == 0) continue;
    // Stored rows vanish left of their pivot.
    k.axpy(v.data() + c, rows_.data() + r * cols_ + c, mod_.neg(lead), p, cols_ - c);
  }
}

bool EchelonBuilder::insert(std::span<const Residue> v) {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  if (full()) return false;
  std::copy(v.begin(), v.end(), scratch_.begin());
  reduce(scratch_);
  auto it = std::find_if(scratch_.begin(), scratch_.end(), [](Residue x) { return x != 0; });
  if (it == scratch_.end()) return false;
  std::size_t pivot = static_cast<std::size_t>(it - scratch_.begin());
  simd::active_kernels().scale(scratch_.data(), mod_.inv(*it), mod_.value(), cols_);
  rows_.insert(rows_.end(), scratch_.begin(), scratch_.end());
  pivots_.push_back(pivot);
  return true;
}

FpMatrix EchelonBuilder::finish() const {
  const auto& k = simd::active_kernels();
  const std::uint32_t p = mod_.value();
  const std::size_t rank = pivots_.size();
  std::vector<Residue> rows = rows_;
  // Row r is zero at the pivots of rows before it; clearing each pivot from
  // the earlier rows, latest first, yields the reduced form.
  for (std::size_t r = rank; r-- > 0;) {
    const std::size_t c = pivots_[r];
    const Residue* src = rows.data() + r * cols_ + c;
    for (std::size_t q = 0; q < r; ++q) {
      Residue* dst = rows.data() + q * cols_ + c;
      Residue lead = *dst;
      if (lead != 0) k.axpy(dst, src, mod_.neg(lead), p, cols_ - c);
    }
  }
  std::vector<std::size_t> order(rank);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  FpMatrix out(mod_, rank, cols_);
  for (std::size_t i = 0; i < rank; ++i)
    std::copy_n(rows.data() + order[i] * cols_, cols_, out.row(i).data());
  return out;
}

RrefResult rref(const FpMatrix& m) {
  EchelonBuilder builder(m.modulus(), m.cols());
  for (std::size_t r = 0; r < m.rows() && !builder.full(); ++r) builder.insert(m.row(r));
  FpMatrix basis = builder.finish();
  FpMatrix out(m.modulus(), m.rows(), m.cols());
  for (std::size_t r = 0; r < basis.rows(); ++r)
    std::copy_n(basis.row(r).data(), m.cols(), out.row(r).data());
  return {std::move(out), basis.rows()};
}

std::vector<std::size_t> pivot_columns(const FpMatrix& reduced) {
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < reduced.rows(); ++r) {
    auto row = reduced.row(r);
    auto it = std::find_if(row.begin(), row.end(), [](Residue x) { return x != 0; });
    if (it == row.end()) break;
    pivots.push_back(static_cast<std::size_t>(it - row.begin()));
  }
  return pivots;
}

}  // namespace zsalg
