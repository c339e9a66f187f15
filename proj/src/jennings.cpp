#include "zsalg/jennings.hpp"

#include <stdexcept>
#include <string>

#include "zsalg/errors.hpp"

namespace zsalg {
namespace {

// v * (g - 1) for a group algebra.
FpVector times_g_minus_one(const Algebra& a, const Group& g, const FpVector& v, Group::Element s) {
  const Modulus& mod = a.modulus();
  FpVector out(v.size(), 0);
  for (Group::Element x = 0; x < v.size(); ++x)
    if (v[x]) out[g.mul(x, s)] = v[x];
  for (std::size_t x = 0; x < v.size(); ++x) out[x] = mod.sub(out[x], v[x]);
  return out;
}

void require_p_group(const Group& g, std::uint32_t p) {
  auto info = is_p_group(g);
  if (!info || (!info->trivial && info->p != p))
    throw std::invalid_argument("group of order " + std::to_string(g.order()) +
                                " is not a " + std::to_string(p) + "-group");
}

}  // namespace

JenningsStructure dimension_subgroups_group_theoretic(GroupPtr g, std::uint32_t p) {
  require_p_group(*g, p);
  JenningsStructure js;
  js.group = g;
  js.p = p;
  js.chain.push_back(whole_group(*g));
  // D_i = (D_{ceil(i/p)})^p [D_{i-1}, G]
  for (std::size_t i = 2; !js.chain.back().is_trivial(); ++i) {
    if (i > g->order() + 1) throw InternalError("dimension subgroup recursion does not terminate");
    const SubgroupSet& powered = js.chain[(i + p - 1) / p - 1];
    SubgroupSet next = subgroup_join(power_subgroup(powered, p),
                                     commutator_subgroup(js.chain.back(), *g));
    js.chain.push_back(std::move(next));
  }
  js.t = js.chain.size();

  std::size_t weighted = 0;
  for (std::size_t i = 1; i < js.t; ++i) {
    const SubgroupSet& upper = js.chain[i - 1];
    const SubgroupSet& lower = js.chain[i];
    std::vector<Group::Element> picks;
    if (!(upper == lower)) picks = minimal_generators_mod(*g, upper, lower, p);
    for (std::size_t j = 0; j < picks.size(); ++j) js.gens.push_back({i, j + 1, picks[j]});
    js.ranks.push_back(picks.size());
    weighted += i * picks.size();
  }
  js.loewy_length = 1 + (p - 1) * weighted;
  return js;
}

std::vector<SubgroupSet> dimension_subgroups_ring_theoretic(const Algebra& a) {
  const Group* g = a.group();
  if (!g) throw std::invalid_argument("dimension subgroups need a group algebra");
  if (!a.radical()) throw RadicalNotSupplied();
  const Modulus& mod = a.modulus();
  std::vector<SubgroupSet> chain;
  for (std::size_t i = 1;; ++i) {
    Subspace power = a.radical_power(i);
    std::vector<Group::Element> members;
    FpVector v(a.dim(), 0);
    for (Group::Element x = 0; x < g->order(); ++x) {
      std::fill(v.begin(), v.end(), 0);
      v[x] = mod.add(v[x], 1);
      v[Group::identity()] = mod.sub(v[Group::identity()], 1);
      if (power.contains(v)) members.push_back(x);
    }
    chain.emplace_back(*g, std::move(members));
    if (chain.back().is_trivial()) break;
  }
  return chain;
}

JenningsMonomial make_monomial(const JenningsStructure& js, std::vector<std::uint32_t> exponents) {
  if (exponents.size() != js.gens.size())
    throw std::out_of_range("one exponent per Jennings generator required");
  JenningsMonomial m;
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    if (exponents[k] >= js.p) throw std::out_of_range("Jennings exponent must be below p");
    m.weight += js.gens[k].level * exponents[k];
    m.coweight += js.gens[k].level * (js.p - 1 - exponents[k]);
  }
  m.exponents = std::move(exponents);
  return m;
}

std::string monomial_label(const JenningsStructure& js, const JenningsMonomial& m) {
  std::string out;
  for (std::size_t k = 0; k < m.exponents.size(); ++k) {
    if (m.exponents[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += "(" + js.group->label(js.gens[k].element) + "-1)";
    if (m.exponents[k] > 1) out += "^" + std::to_string(m.exponents[k]);
  }
  return out.empty() ? "1" : out;
}

std::vector<JenningsMonomial> all_monomials(const JenningsStructure& js) {
  const std::size_t n = js.gens.size();
  std::vector<JenningsMonomial> out;
  std::vector<std::uint32_t> e(n, 0);
  while (true) {
    out.push_back(make_monomial(js, e));
    std::size_t k = n;
    while (k > 0 && e[k - 1] + 1 == js.p) e[--k] = 0;
    if (k == 0) break;
    ++e[k - 1];
  }
  return out;
}

AlgebraElement monomial_element(const JenningsStructure& js, const Algebra& a,
                                const JenningsMonomial& m) {
  if (a.group() != js.group.get())
    throw std::invalid_argument("algebra is not built on this Jennings structure's group");
  if (m.exponents.size() != js.gens.size())
    throw std::out_of_range("one exponent per Jennings generator required");
  FpVector v = a.unit();
  for (std::size_t k = 0; k < js.gens.size(); ++k) {
    if (m.exponents[k] >= js.p) throw std::out_of_range("Jennings exponent must be below p");
    for (std::uint32_t e = 0; e < m.exponents[k]; ++e)
      v = times_g_minus_one(a, *js.group, v, js.gens[k].element);
  }
  return {&a, std::move(v)};
}

JenningsBasis::JenningsBasis(JenningsStructure js, AlgebraPtr algebra)
    : js_(std::move(js)), algebra_(std::move(algebra)) {
  monomials_ = all_monomials(js_);
  elements_.reserve(monomials_.size());
  for (const auto& m : monomials_) elements_.push_back(monomial_element(js_, *algebra_, m));
  Subspace all = span_where([](const JenningsMonomial&) { return true; });
  if (monomials_.size() != algebra_->dim() || !all.is_full())
    throw InternalError("Jennings monomials do not form a basis");
}

std::size_t JenningsBasis::find(const std::vector<std::uint32_t>& exponents) const {
  if (exponents.size() != js_.gens.size())
    throw std::out_of_range("one exponent per Jennings generator required");
  std::size_t idx = 0;
  for (auto e : exponents) {
    if (e >= js_.p) throw std::out_of_range("Jennings exponent must be below p");
    idx = idx * js_.p + e;
  }
  return idx;
}

Subspace rad_span_by_weight(const JenningsBasis& basis, std::size_t n) {
  return basis.span_where([n](const JenningsMonomial& m) { return m.weight >= n; });
}

Subspace soc_span_by_weight(const JenningsBasis& basis, std::size_t n) {
  return basis.span_where([n](const JenningsMonomial& m) { return m.coweight < n; });
}

bool is_powerful(const Group& g, std::uint32_t p) {
  require_p_group(g, p);
  SubgroupSet all = whole_group(g);
  SubgroupSet derived = commutator_subgroup(all, g);
  SubgroupSet powers = power_subgroup(all, p == 2 ? 4 : p);
  return derived.is_subgroup_of(powers);
}

std::vector<std::size_t> central_levels(const JenningsStructure& js) {
  SubgroupSet derived = commutator_subgroup(js.chain.front(), *js.group);
  std::vector<std::size_t> levels;
  for (std::size_t s = 1; s <= js.t; ++s)
    if (derived.is_subgroup_of(js.D(s))) levels.push_back(s);
  return levels;
}

std::vector<JenningsMonomial> predicted_central_monomials(const JenningsStructure& js,
                                                          std::size_t s) {
  if (s == 0) throw std::invalid_argument("levels start at 1");
  SubgroupSet derived = commutator_subgroup(js.chain.front(), *js.group);
  if (!derived.is_subgroup_of(js.D(s)))
    throw std::invalid_argument("D_" + std::to_string(s) + " does not contain [G, G]");
  std::vector<JenningsMonomial> out;
  for (auto& m : all_monomials(js)) {
    bool tail_full = true;
    for (std::size_t k = 0; k < js.gens.size(); ++k)
      if (js.gens[k].level >= s && m.exponents[k] != js.p - 1) tail_full = false;
    if (tail_full) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace zsalg
