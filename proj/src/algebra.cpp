#include "zsalg/algebra.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "zsalg/errors.hpp"

namespace zsalg {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<std::size_t> support(std::span<const Residue> v) {
  std::vector<std::size_t> nz;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) nz.push_back(i);
  return nz;
}

// Stacks the linear maps x -> f_g(x) into one matrix whose kernel is the
// common null space. column(g, i) must return f_g(e_i).
template <class ColumnFn>
Subspace common_kernel(const Modulus& mod, std::size_t dim, std::size_t maps,
                       ColumnFn&& column) {
  FpMatrix stacked(mod, maps * dim, dim);
  for (std::size_t g = 0; g < maps; ++g)
    for (std::size_t i = 0; i < dim; ++i) {
      FpVector col = column(g, i);
      for (std::size_t c = 0; c < dim; ++c) stacked(g * dim + c, i) = col[c];
    }
  return kernel(stacked);
}

}  // namespace

Algebra::Algebra(Parts parts)
    : mod_(parts.mod),
      dim_(parts.dim),
      labels_(std::move(parts.labels)),
      unit_(std::move(parts.unit)),
      backing_(std::move(parts.backing)),
      radical_(std::move(parts.radical)),
      radical_generators_(std::move(parts.radical_generators)),
      algebra_generators_(std::move(parts.algebra_generators)) {
  if (dim_ == 0) throw std::invalid_argument("algebra dimension must be positive");
  if (unit_.size() != dim_) throw std::invalid_argument("unit has wrong length");
  if (labels_.size() != dim_) throw std::invalid_argument("one label per basis element required");
  if (radical_) {
    if (radical_->ambient_dim() != dim_ || !(radical_->modulus() == mod_))
      throw std::invalid_argument("radical lives in the wrong space");
    if (radical_generators_.empty())
      for (std::size_t r = 0; r < radical_->dim(); ++r)
        radical_generators_.push_back(radical_->basis_vector(r));
  }
  if (algebra_generators_.empty())
    for (std::size_t i = 0; i < dim_; ++i) algebra_generators_.push_back(basis_vector(i));
}

AlgebraPtr Algebra::from_structure_constants(Modulus mod, std::vector<std::string> labels,
                                             const std::vector<FpVector>& products, FpVector unit,
                                             std::optional<Subspace> radical) {
  const std::size_t d = labels.size();
  if (d == 0 || d > 256) throw std::invalid_argument("structure-constant algebras need 1 <= dim <= 256");
  if (products.size() != d * d) throw std::invalid_argument("need dim*dim basis products");
  TableBacking table;
  table.products.resize(d * d);
  for (std::size_t ij = 0; ij < d * d; ++ij) {
    if (products[ij].size() != d) throw std::invalid_argument("basis product has wrong length");
    for (std::uint32_t k = 0; k < d; ++k)
      if (Residue c = products[ij][k] % mod.value()) table.products[ij].push_back({k, c});
  }
  auto a = std::make_shared<const Algebra>(
      Parts{mod, d, std::move(labels), std::move(unit), std::move(table), radical, {}, {}});

  for (std::size_t i = 0; i < d; ++i) {
    FpVector e = a->basis_vector(i);
    if (a->multiply(a->unit(), e) != e || a->multiply(e, a->unit()) != e)
      throw std::invalid_argument("unit is not a two-sided identity");
  }
  auto check_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
    FpVector ei = a->basis_vector(i), ej = a->basis_vector(j), ek = a->basis_vector(k);
    if (a->multiply(a->multiply(ei, ej), ek) != a->multiply(ei, a->multiply(ej, ek)))
      throw std::invalid_argument("structure constants are not associative");
  };
  if (d <= 64) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) check_triple(i, j, k);
  } else {
    std::mt19937 rng(0xa55);
    std::uniform_int_distribution<std::size_t> pick(0, d - 1);
    for (int t = 0; t < 20000; ++t) check_triple(pick(rng), pick(rng), pick(rng));
  }
  if (radical) {
    for (std::size_t r = 0; r < radical->dim(); ++r) {
      FpVector v = radical->basis_vector(r);
      for (std::size_t i = 0; i < d; ++i) {
        FpVector e = a->basis_vector(i);
        if (!radical->contains(a->multiply(e, v)) || !radical->contains(a->multiply(v, e)))
          throw std::invalid_argument("radical is not a two-sided ideal");
      }
    }
  }
  return a;
}

const Group* Algebra::group() const noexcept {
  if (auto* g = std::get_if<GroupBacking>(&backing_)) return g->group.get();
  return nullptr;
}

void Algebra::accumulate_basis_product(std::size_t i, std::size_t j, Residue coeff,
                                       std::span<Residue> out) const {
  std::visit(Overloaded{
                 [&](const TableBacking& t) {
                   for (const Term& term : t.products[i * dim_ + j])
                     out[term.index] = mod_.add(out[term.index], mod_.mul(coeff, term.coeff));
                 },
                 [&](const GroupBacking& g) {
                   auto k = g.group->mul(static_cast<Group::Element>(i),
                                         static_cast<Group::Element>(j));
                   out[k] = mod_.add(out[k], coeff);
                 },
                 [&](const MatrixBacking& m) {
                   const std::size_t bd = m.base->dim();
                   const std::size_t rc1 = i / bd, rc2 = j / bd;
                   const std::size_t r = rc1 / m.k, c = rc1 % m.k;
                   const std::size_t r2 = rc2 / m.k, c2 = rc2 % m.k;
                   if (c != r2) return;
                   m.base->accumulate_basis_product(i % bd, j % bd, coeff,
                                                    out.subspan((r * m.k + c2) * bd, bd));
                 }},
             backing_);
}

FpVector Algebra::multiply(std::span<const Residue> x, std::span<const Residue> y) const {
  if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("vector length mismatch");
  FpVector out(dim_, 0);
  const auto ys = support(y);
  if (const Group* g = group()) {
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j : ys) {
        auto k = g->mul(static_cast<Group::Element>(i), static_cast<Group::Element>(j));
        out[k] = mod_.add(out[k], mod_.mul(x[i], y[j]));
      }
    }
    return out;
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j : ys) accumulate_basis_product(i, j, mod_.mul(x[i], y[j]), out);
  }
  return out;
}

FpVector Algebra::basis_vector(std::size_t i) const {
  FpVector e(dim_, 0);
  e[i] = 1;
  return e;
}

AlgebraElement Algebra::element(FpVector coeffs) const {
  if (coeffs.size() != dim_) throw std::invalid_argument("coefficient vector has wrong length");
  for (auto& c : coeffs) c %= mod_.value();
  return {this, std::move(coeffs)};
}

Subspace Algebra::radical_power(std::size_t n) const {
  if (!radical_) throw RadicalNotSupplied();
  std::lock_guard lock(cache_mutex_);
  if (radical_powers_.empty()) {
    radical_powers_.push_back(Subspace::full(mod_, dim_));
    radical_powers_.push_back(*radical_);
  }
  while (radical_powers_.size() <= n && !radical_powers_.back().is_zero()) {
    const Subspace& prev = radical_powers_.back();
    EchelonBuilder builder(mod_, dim_);
    for (std::size_t r = 0; r < prev.dim(); ++r) {
      auto v = prev.basis().row(r);
      for (const auto& t : radical_generators_) builder.insert(multiply(v, t));
    }
    Subspace next = Subspace::from_reduced(builder.finish());
    if (next == prev) throw InternalError("attached radical is not nilpotent");
    radical_powers_.push_back(std::move(next));
  }
  if (n < radical_powers_.size()) return radical_powers_[n];
  return Subspace::zero(mod_, dim_);
}

Subspace Algebra::socle(std::size_t n) const {
  if (!radical_) throw RadicalNotSupplied();
  std::lock_guard lock(cache_mutex_);
  if (socles_.empty()) socles_.push_back(Subspace::zero(mod_, dim_));
  while (socles_.size() <= n && !socles_.back().is_full()) {
    const Subspace prev = socles_.back();
    Subspace next = common_kernel(mod_, dim_, radical_generators_.size(),
                                  [&](std::size_t g, std::size_t i) {
                                    FpVector prod(dim_, 0);
                                    const auto& t = radical_generators_[g];
                                    for (std::size_t j = 0; j < dim_; ++j)
                                      if (t[j]) accumulate_basis_product(i, j, t[j], prod);
                                    return prev.reduce(prod);
                                  });
    if (radical_generators_.empty()) next = Subspace::full(mod_, dim_);
    if (next == prev) throw InternalError("socle series stalled below the whole algebra");
    socles_.push_back(std::move(next));
  }
  if (n < socles_.size()) return socles_[n];
  return Subspace::full(mod_, dim_);
}

Subspace Algebra::center() const {
  std::lock_guard lock(cache_mutex_);
  if (!center_) {
    center_ = common_kernel(mod_, dim_, algebra_generators_.size(),
                            [&](std::size_t g, std::size_t i) {
                              FpVector out(dim_, 0);
                              const auto& x = algebra_generators_[g];
                              for (std::size_t j = 0; j < dim_; ++j) {
                                if (!x[j]) continue;
                                accumulate_basis_product(i, j, x[j], out);
                                accumulate_basis_product(j, i, mod_.neg(x[j]), out);
                              }
                              return out;
                            });
  }
  return *center_;
}

std::size_t Algebra::nilpotency_index() const {
  for (std::size_t n = 0;; ++n)
    if (radical_power(n).is_zero()) return n;
}

AlgebraPtr group_algebra(GroupPtr g, std::uint32_t p) {
  Modulus mod(p);
  const std::size_t d = g->order();
  FpVector unit(d, 0);
  unit[Group::identity()] = 1;

  std::optional<Subspace> radical;
  std::vector<FpVector> radical_gens;
  auto info = is_p_group(*g);
  if (info && (info->trivial || info->p == p)) {
    // Augmentation ideal in canonical form: rows e_i - e_{d-1}.
    FpMatrix basis(mod, d - 1, d);
    for (std::size_t i = 0; i + 1 < d; ++i) {
      basis(i, i) = 1;
      basis(i, d - 1) = mod.neg(1);
    }
    radical = Subspace::from_reduced(std::move(basis));
    for (auto s : g->generators()) {
      FpVector t(d, 0);
      t[s] = 1;
      t[Group::identity()] = mod.neg(1);
      radical_gens.push_back(std::move(t));
    }
  }
  std::vector<FpVector> alg_gens;
  for (auto s : g->generators()) {
    FpVector e(d, 0);
    e[s] = 1;
    alg_gens.push_back(std::move(e));
  }
  if (alg_gens.empty()) alg_gens.push_back(unit);
  auto labels = g->labels();
  return std::make_shared<const Algebra>(Algebra::Parts{mod, d, std::move(labels), std::move(unit),
                                                        Algebra::GroupBacking{std::move(g)},
                                                        std::move(radical), std::move(radical_gens),
                                                        std::move(alg_gens)});
}

AlgebraPtr matrix_algebra(AlgebraPtr a, std::size_t k) {
  if (k == 0) throw std::invalid_argument("matrix size must be positive");
  const Modulus mod = a->modulus();
  const std::size_t m = a->dim();
  const std::size_t d = k * k * m;
  auto block = [&](std::size_t r, std::size_t c) { return (r * k + c) * m; };
  auto lift = [&](std::size_t r, std::size_t c, std::span<const Residue> v) {
    FpVector out(d, 0);
    std::copy(v.begin(), v.end(), out.begin() + static_cast<std::ptrdiff_t>(block(r, c)));
    return out;
  };

  std::vector<std::string> labels;
  labels.reserve(d);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c)
      for (const auto& l : a->basis_labels())
        labels.push_back("E(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")*" + l);

  FpVector unit(d, 0);
  for (std::size_t r = 0; r < k; ++r)
    std::copy(a->unit().begin(), a->unit().end(),
              unit.begin() + static_cast<std::ptrdiff_t>(block(r, r)));

  std::optional<Subspace> radical;
  std::vector<FpVector> radical_gens;
  if (a->radical()) {
    const Subspace& base = *a->radical();
    // Blocks occupy ascending column ranges, so stacking them stays canonical.
    FpMatrix basis(mod, 0, d);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c)
        for (std::size_t i = 0; i < base.dim(); ++i) basis.append_row(lift(r, c, base.basis().row(i)));
    radical = Subspace::from_reduced(std::move(basis));
    for (std::size_t r = 0; r < k; ++r)
      for (const auto& t : a->radical_generators()) radical_gens.push_back(lift(r, r, t));
  }

  std::vector<FpVector> alg_gens;
  for (std::size_t r = 0; r + 1 < k; ++r) {
    alg_gens.push_back(lift(r, r + 1, a->unit()));
    alg_gens.push_back(lift(r + 1, r, a->unit()));
  }
  for (const auto& g : a->algebra_generators()) alg_gens.push_back(lift(0, 0, g));

  return std::make_shared<const Algebra>(Algebra::Parts{mod, d, std::move(labels), std::move(unit),
                                                        Algebra::MatrixBacking{std::move(a), k},
                                                        std::move(radical), std::move(radical_gens),
                                                        std::move(alg_gens)});
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.parent == nullptr || x.parent != y.parent)
    throw std::invalid_argument("elements belong to different algebras");
  return {x.parent, x.parent->multiply(x.coeffs, y.coeffs)};
}

Subspace radical_power(const Algebra& a, std::size_t n) { return a.radical_power(n); }
Subspace socle_n(const Algebra& a, std::size_t n) { return a.socle(n); }
Subspace center(const Algebra& a) { return a.center(); }

Subspace zs(const Algebra& a, std::size_t n) {
  return subspace_intersect(a.center(), a.socle(n));
}

std::size_t loewy_length(const Algebra& a) {
  const std::size_t by_radical = a.nilpotency_index();
  const Subspace z = a.center();
  std::size_t by_center = 0;
  while (!(zs(a, by_center) == z)) ++by_center;
  if (by_center != by_radical)
    throw InternalError("Loewy length " + std::to_string(by_radical) +
                        " disagrees with min{n : ZS^n = Z} = " + std::to_string(by_center));
  return by_radical;
}

Subspace class_sum_span(const Algebra& a) {
  const Group* g = a.group();
  if (!g) throw std::invalid_argument("class sums need a group algebra");
  std::vector<FpVector> sums;
  for (const auto& cls : conjugacy_classes(*g)) {
    FpVector v(a.dim(), 0);
    for (auto x : cls) v[x] = 1;
    sums.push_back(std::move(v));
  }
  return Subspace::span(a.modulus(), a.dim(), sums);
}

AlgebraElement group_sum(const Algebra& a, const SubgroupSet& n) {
  if (a.group() != &n.group()) throw std::invalid_argument("subgroup is not from this algebra's group");
  FpVector v(a.dim(), 0);
  for (auto x : n.members()) v[x] = 1;
  return {&a, std::move(v)};
}

bool central_ideal_check(const Algebra& a, const SubgroupSet& n) {
  const Group* g = a.group();
  if (g != &n.group()) throw std::invalid_argument("subgroup is not from this algebra's group");
  if (!n.is_normal()) throw std::invalid_argument("central ideal check needs a normal subgroup");
  const Subspace z = a.center();
  FpVector v(a.dim(), 0);
  for (Group::Element x = 0; x < g->order(); ++x) {
    std::fill(v.begin(), v.end(), 0);
    for (auto m : n.members()) v[g->mul(x, m)] = 1;
    if (!z.contains(v)) return false;
  }
  return true;
}

MoritaReport morita_invariance_check(const AlgebraPtr& a, std::size_t k) {
  if (!a->radical()) throw RadicalNotSupplied();
  AlgebraPtr m = matrix_algebra(a, k);
  MoritaReport report;
  report.k = k;
  report.base_loewy_length = loewy_length(*a);
  report.matrix_loewy_length = loewy_length(*m);
  const std::size_t top = std::max(report.base_loewy_length, report.matrix_loewy_length);
  for (std::size_t n = 0; n <= top; ++n) {
    report.base_dims.push_back(zs(*a, n).dim());
    report.matrix_dims.push_back(zs(*m, n).dim());
  }
  report.equal = report.base_dims == report.matrix_dims &&
                 report.base_loewy_length == report.matrix_loewy_length;
  return report;
}

bool otokita_bound_check(const Algebra& a) {
  if (!a.radical()) throw RadicalNotSupplied();
  if (a.radical()->dim() + 1 != a.dim())
    throw std::invalid_argument("bound check applies to local algebras only");
  const std::size_t top = a.nilpotency_index();
  for (std::size_t n = 0; n <= top; ++n)
    if (zs(a, n).dim() > a.dim() - a.radical_power(n).dim()) return false;
  return true;
}

}  // namespace zsalg
