#include "zsalg/subspace.hpp"

#include <algorithm>
#include <stdexcept>

#include "zsalg/simd/kernels.hpp"

namespace zsalg {
namespace {

void require_compatible(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw std::invalid_argument("subspaces live in different ambient dimensions");
  if (!(u.modulus() == v.modulus()))
    throw std::invalid_argument("subspaces are over different primes");
}

}  // namespace

Subspace::Subspace(FpMatrix reduced_basis)
    : basis_(std::move(reduced_basis)), pivots_(pivot_columns(basis_)) {}

Subspace Subspace::zero(Modulus mod, std::size_t ambient_dim) {
  return Subspace(FpMatrix(mod, 0, ambient_dim));
}

Subspace Subspace::full(Modulus mod, std::size_t ambient_dim) {
  return Subspace(FpMatrix::identity(mod, ambient_dim));
}

Subspace Subspace::span(Modulus mod, std::size_t ambient_dim,
                        const std::vector<FpVector>& vectors) {
  EchelonBuilder builder(mod, ambient_dim);
  for (const auto& v : vectors) {
    if (builder.full()) break;
    builder.insert(v);
  }
  return Subspace(builder.finish());
}

Subspace Subspace::row_space(const FpMatrix& m) {
  EchelonBuilder builder(m.modulus(), m.cols());
  for (std::size_t r = 0; r < m.rows() && !builder.full(); ++r) builder.insert(m.row(r));
  return Subspace(builder.finish());
}

Subspace Subspace::from_reduced(FpMatrix reduced_basis) {
  std::vector<std::size_t> pivots = pivot_columns(reduced_basis);
  if (pivots.size() != reduced_basis.rows())
    throw std::invalid_argument("basis has zero rows");
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (r > 0 && pivots[r] <= pivots[r - 1])
      throw std::invalid_argument("pivots are not strictly increasing");
    if (reduced_basis(r, pivots[r]) != 1) throw std::invalid_argument("pivot is not 1");
    for (std::size_t q = 0; q < reduced_basis.rows(); ++q)
      if (q != r && reduced_basis(q, pivots[r]) != 0)
        throw std::invalid_argument("pivot column is not a unit vector");
  }
  return Subspace(std::move(reduced_basis));
}

FpVector Subspace::basis_vector(std::size_t i) const {
  auto r = basis_.row(i);
  return FpVector(r.begin(), r.end());
}

FpVector Subspace::reduce(std::span<const Residue> v) const {
  if (v.size() != ambient_dim()) throw std::invalid_argument("vector length mismatch");
  FpVector out(v.begin(), v.end());
  const auto& k = simd::active_kernels();
  const Modulus& mod = modulus();
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const std::size_t c = pivots_[r];
    Residue lead = out[c];
    if (lead == 0) continue;
    k.axpy(out.data() + c, basis_.row(r).data() + c, mod.neg(lead), mod.value(),
           ambient_dim() - c);
  }
  return out;
}

bool Subspace::contains(std::span<const Residue> v) const {
  FpVector rest = reduce(v);
  return std::all_of(rest.begin(), rest.end(), [](Residue x) { return x == 0; });
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  require_compatible(*this, other);
  if (dim() > other.dim()) return false;
  for (std::size_t r = 0; r < dim(); ++r)
    if (!other.contains(basis_.row(r))) return false;
  return true;
}

Subspace kernel(const FpMatrix& m) {
  const Modulus& mod = m.modulus();
  const std::size_t n = m.cols();
  EchelonBuilder builder(mod, n);
  for (std::size_t r = 0; r < m.rows() && !builder.full(); ++r) builder.insert(m.row(r));
  FpMatrix reduced = builder.finish();
  std::vector<std::size_t> pivots = pivot_columns(reduced);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<FpVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    FpVector v(n, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = mod.neg(reduced(r, f));
    basis.push_back(std::move(v));
  }
  return Subspace::span(mod, n, basis);
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  if (u.is_zero()) return v;
  if (v.is_zero()) return u;
  EchelonBuilder builder(u.modulus(), u.ambient_dim());
  for (std::size_t r = 0; r < u.dim(); ++r) builder.insert(u.basis().row(r));
  for (std::size_t r = 0; r < v.dim() && !builder.full(); ++r) builder.insert(v.basis().row(r));
  return Subspace(builder.finish());
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  const std::size_t d = u.ambient_dim();
  const Modulus& mod = u.modulus();
  if (u.is_zero() || v.is_zero()) return Subspace::zero(mod, d);
  if (u.is_full()) return v;
  if (v.is_full()) return u;

  // Rows (x | x) for x in U and (y | 0) for y in V. After elimination the
  // rows whose left half vanishes carry a basis of U ∩ V in the right half.
  FpMatrix stacked(mod, 0, 2 * d);
  FpVector row(2 * d, 0);
  for (std::size_t r = 0; r < u.dim(); ++r) {
    auto x = u.basis().row(r);
    std::copy(x.begin(), x.end(), row.begin());
    std::copy(x.begin(), x.end(), row.begin() + static_cast<std::ptrdiff_t>(d));
    stacked.append_row(row);
  }
  std::fill(row.begin(), row.end(), 0);
  for (std::size_t r = 0; r < v.dim(); ++r) {
    auto y = v.basis().row(r);
    std::copy(y.begin(), y.end(), row.begin());
    stacked.append_row(row);
  }
  EchelonBuilder builder(mod, 2 * d);
  for (std::size_t r = 0; r < stacked.rows(); ++r) builder.insert(stacked.row(r));
  FpMatrix reduced = builder.finish();
  std::vector<FpVector> meet;
  for (std::size_t r = 0; r < reduced.rows(); ++r) {
    auto full_row = reduced.row(r);
    bool left_zero = std::all_of(full_row.begin(), full_row.begin() + static_cast<std::ptrdiff_t>(d),
                                 [](Residue x) { return x == 0; });
    if (left_zero)
      meet.emplace_back(full_row.begin() + static_cast<std::ptrdiff_t>(d), full_row.end());
  }
  return Subspace::span(mod, d, meet);
}

}  // namespace zsalg
