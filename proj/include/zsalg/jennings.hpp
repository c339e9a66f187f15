#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "zsalg/algebra.hpp"
#include "zsalg/group.hpp"

namespace zsalg {

/// Chosen generator g_ij: level i (1-based), position j (1-based) within
/// the level, and the group element.
struct JenningsGenerator {
  std::size_t level;
  std::size_t index;
  Group::Element element;
};

/// Dimension subgroups D_1 > ... > D_t = 1 of a p-group with the generators
/// of each nontrivial layer D_i / D_{i+1}.
///
/// Levels with r_i = 0 stay in the chain so level numbers equal weights.
struct JenningsStructure {
  GroupPtr group;
  std::uint32_t p = 0;
  std::vector<SubgroupSet> chain;  // chain[i-1] = D_i, i = 1..t
  std::size_t t = 0;               // first level with D_t trivial
  std::vector<JenningsGenerator> gens;  // ascending (level, index)
  std::vector<std::size_t> ranks;       // ranks[i-1] = r_i, i = 1..t-1
  std::size_t loewy_length = 0;         // 1 + (p-1) sum i r_i

  /// D_i for any i >= 1; levels at or past t are trivial.
  const SubgroupSet& D(std::size_t i) const { return chain[std::min(i, t) - 1]; }
  std::size_t rank(std::size_t i) const { return i >= 1 && i < t ? ranks[i - 1] : 0; }
};

/// D_1 = G, D_i = (D_{ceil(i/p)})^p [D_{i-1}, G]. Throws
/// std::invalid_argument when g is not a p-group for p.
JenningsStructure dimension_subgroups_group_theoretic(GroupPtr g, std::uint32_t p);

/// D_i = {g : g - 1 in J^i}, i = 1, 2, ... through the first trivial one.
/// The independent oracle for the recursion above.
std::vector<SubgroupSet> dimension_subgroups_ring_theoretic(const Algebra& a);

/// Exponents m_ij aligned with JenningsStructure::gens.
struct JenningsMonomial {
  std::vector<std::uint32_t> exponents;
  std::size_t weight = 0;    // sum i m_ij
  std::size_t coweight = 0;  // sum i (p - 1 - m_ij)

  friend bool operator==(const JenningsMonomial&, const JenningsMonomial&) = default;
};

/// Fills weight and coweight; throws std::out_of_range if some m_ij >= p.
JenningsMonomial make_monomial(const JenningsStructure& js, std::vector<std::uint32_t> exponents);

/// All p^{#gens} monomials, first generator's exponent most significant.
std::vector<JenningsMonomial> all_monomials(const JenningsStructure& js);

/// "(a-1)^2*(b-1)" style, using the group's element labels; "1" for the
/// empty product.
std::string monomial_label(const JenningsStructure& js, const JenningsMonomial& m);

/// Ordered product over (i, j) ascending of (g_ij - 1)^{m_ij} in a.
AlgebraElement monomial_element(const JenningsStructure& js, const Algebra& a,
                                const JenningsMonomial& m);

/// The Jennings basis of a group algebra together with its structure.
/// Elements are computed once; all weight-based spans read from here.
class JenningsBasis {
 public:
  /// Throws InternalError if the |G| monomial elements are not a basis.
  JenningsBasis(JenningsStructure js, AlgebraPtr algebra);

  const JenningsStructure& structure() const noexcept { return js_; }
  const Algebra& algebra() const noexcept { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  const std::vector<JenningsMonomial>& monomials() const noexcept { return monomials_; }
  const std::vector<AlgebraElement>& elements() const noexcept { return elements_; }

  /// Span of the elements whose monomials satisfy pred.
  template <class Pred>
  Subspace span_where(Pred&& pred) const {
    std::vector<FpVector> chosen;
    for (std::size_t k = 0; k < monomials_.size(); ++k)
      if (pred(monomials_[k])) chosen.push_back(elements_[k].coeffs);
    return Subspace::span(algebra_->modulus(), algebra_->dim(), chosen);
  }

  /// Index of the monomial with these exponents.
  std::size_t find(const std::vector<std::uint32_t>& exponents) const;

 private:
  JenningsStructure js_;
  AlgebraPtr algebra_;
  std::vector<JenningsMonomial> monomials_;
  std::vector<AlgebraElement> elements_;
};

/// Span of monomials with weight >= n (J^n by Jennings' theorem).
Subspace rad_span_by_weight(const JenningsBasis& basis, std::size_t n);
/// Span of monomials with coweight < n (Soc^n by Jennings-Brauer).
Subspace soc_span_by_weight(const JenningsBasis& basis, std::size_t n);

/// G^p >= [G, G] for odd p, G^4 >= [G, G] for p = 2.
bool is_powerful(const Group& g, std::uint32_t p);

/// Monomials with m_ij = p - 1 for every level i >= s. Requires
/// D_s >= [G, G]; throws std::invalid_argument otherwise.
std::vector<JenningsMonomial> predicted_central_monomials(const JenningsStructure& js,
                                                          std::size_t s);

/// Levels s in 1..t with D_s >= [G, G].
std::vector<std::size_t> central_levels(const JenningsStructure& js);

}  // namespace zsalg
