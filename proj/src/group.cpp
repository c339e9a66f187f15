#include "zsalg/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <stdexcept>

#include "zsalg/errors.hpp"

namespace zsalg {
namespace {

using Element = Group::Element;

// Grows a subgroup one generator at a time, closing under right
// multiplication by the generators kept so far.
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(const Group& g) : g_(g), mask_(g.order(), 0) {
    mask_[Group::identity()] = 1;
    members_.push_back(Group::identity());
  }

  bool contains(Element x) const { return mask_[x] != 0; }

  void add(Element x) {
    if (contains(x)) return;
    gens_.push_back(x);
    std::deque<Element> queue(members_.begin(), members_.end());
    while (!queue.empty()) {
      Element y = queue.front();
      queue.pop_front();
      for (Element s : gens_) {
        Element z = g_.mul(y, s);
        if (!mask_[z]) {
          mask_[z] = 1;
          members_.push_back(z);
          queue.push_back(z);
        }
      }
    }
  }

  std::size_t order() const { return members_.size(); }
  const std::vector<Element>& gens() const { return gens_; }

  SubgroupSet finish() && {
    std::sort(members_.begin(), members_.end());
    return SubgroupSet(g_, std::move(members_));
  }

 private:
  const Group& g_;
  std::vector<char> mask_;
  std::vector<Element> members_;
  std::vector<Element> gens_;
};

void check_associative(std::size_t n, const std::vector<Element>& mul) {
  auto m = [&](Element a, Element b) { return mul[a * n + b]; };
  auto fail = [] { throw ParseError("multiplication table is not associative"); };
  if (n <= 256) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        Element ab = m(a, b);
        for (Element c = 0; c < n; ++c)
          if (m(ab, c) != m(a, m(b, c))) fail();
      }
    return;
  }
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  for (int trial = 0; trial < 200000; ++trial) {
    Element a = pick(rng), b = pick(rng), c = pick(rng);
    if (m(m(a, b), c) != m(a, m(b, c))) fail();
  }
}

}  // namespace

Group Group::from_table(std::size_t order, std::vector<Element> mul,
                        std::vector<Element> generators,
                        std::vector<std::string> generator_names,
                        std::vector<std::string> labels,
                        std::optional<std::uint32_t> p_hint) {
  if (order == 0) throw ParseError("group order must be positive");
  if (order > kDefaultOrderCap)
    throw CapExceeded("group order " + std::to_string(order) + " exceeds cap " +
                      std::to_string(kDefaultOrderCap));
  if (mul.size() != order * order) throw ParseError("multiplication table has wrong size");
  for (Element x : mul)
    if (x >= order) throw ParseError("multiplication table entry out of range");

  Group g;
  g.order_ = order;
  g.mul_ = std::move(mul);
  for (Element x = 0; x < order; ++x)
    if (g.mul(0, x) != x || g.mul(x, 0) != x)
      throw ParseError("element 0 is not the identity");

  std::vector<char> seen(order);
  for (Element a = 0; a < order; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element b = 0; b < order; ++b) {
      if (seen[g.mul(a, b)]++) throw ParseError("multiplication table row is not a permutation");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (Element b = 0; b < order; ++b) {
      if (seen[g.mul(b, a)]++) throw ParseError("multiplication table column is not a permutation");
    }
  }
  check_associative(order, g.mul_);

  g.inv_.assign(order, 0);
  for (Element a = 0; a < order; ++a)
    for (Element b = 0; b < order; ++b)
      if (g.mul(a, b) == 0) {
        g.inv_[a] = b;
        break;
      }

  if (generators.empty()) {
    SubgroupBuilder builder(g);
    for (Element x = 1; x < order && builder.order() < order; ++x)
      if (!builder.contains(x)) {
        builder.add(x);
        generators.push_back(x);
      }
  }
  for (Element x : generators)
    if (x >= order) throw ParseError("generator index out of range");
  if (generator_names.empty())
    for (std::size_t i = 0; i < generators.size(); ++i)
      generator_names.push_back("g" + std::to_string(i + 1));
  if (generator_names.size() != generators.size())
    throw std::invalid_argument("one name per generator required");

  {
    SubgroupBuilder builder(g);
    for (Element x : generators) builder.add(x);
    if (builder.order() != order) throw ParseError("generators do not generate the group");
  }

  g.generators_ = std::move(generators);
  g.generator_names_ = std::move(generator_names);
  g.p_hint_ = p_hint;
  if (labels.empty()) {
    g.labels_ = word_labels(g, g.generators_, g.generator_names_);
  } else {
    if (labels.size() != order) throw ParseError("one label per element required");
    g.labels_ = std::move(labels);
  }
  return g;
}

Element Group::pow(Element a, std::uint64_t e) const {
  Element result = identity();
  Element base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Element Group::commutator(Element a, Element b) const {
  return mul(mul(inv(a), inv(b)), mul(a, b));
}

Element Group::conjugate(Element a, Element by) const { return mul(mul(inv(by), a), by); }

std::size_t Group::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

bool Group::is_abelian() const {
  for (Element a : generators_)
    for (Element b : generators_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

Group Group::relabeled(std::span<const Element> perm) const {
  if (perm.size() != order_ || perm[0] != 0)
    throw std::invalid_argument("relabeling must be a permutation fixing the identity");
  std::vector<char> seen(order_, 0);
  for (Element x : perm) {
    if (x >= order_ || seen[x]++) throw std::invalid_argument("relabeling is not a permutation");
  }
  std::vector<Element> mul(order_ * order_);
  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b) mul[perm[a] * order_ + perm[b]] = perm[this->mul(a, b)];
  std::vector<Element> gens;
  for (Element x : generators_) gens.push_back(perm[x]);
  std::vector<std::string> labels(order_);
  for (Element a = 0; a < order_; ++a) labels[perm[a]] = labels_[a];
  return from_table(order_, std::move(mul), std::move(gens), generator_names_, std::move(labels),
                    p_hint_);
}

std::vector<std::string> word_labels(const Group& g, std::span<const Element> gens,
                                     std::span<const std::string> names) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::size_t>> words(n);
  std::vector<char> seen(n, 0);
  seen[Group::identity()] = 1;
  std::deque<Element> queue{Group::identity()};
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Element y = g.mul(x, gens[i]);
      if (seen[y]) continue;
      seen[y] = 1;
      words[y] = words[x];
      words[y].push_back(i);
      queue.push_back(y);
    }
  }
  std::vector<std::string> labels(n);
  for (Element x = 0; x < n; ++x) {
    const auto& w = words[x];
    if (x == Group::identity()) {
      labels[x] = "1";
      continue;
    }
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      if (!out.empty()) out += '*';
      out += names[w[i]];
      if (j - i > 1) out += "^" + std::to_string(j - i);
      i = j;
    }
    labels[x] = out;
  }
  return labels;
}

SubgroupSet::SubgroupSet(const Group& parent, std::vector<Element> sorted_members)
    : parent_(&parent), members_(std::move(sorted_members)), mask_(parent.order(), 0) {
  for (Element x : members_) mask_[x] = 1;
}

bool SubgroupSet::is_subgroup_of(const SubgroupSet& other) const {
  if (parent_ != other.parent_) return false;
  return std::all_of(members_.begin(), members_.end(),
                     [&](Element x) { return other.contains(x); });
}

bool SubgroupSet::is_normal() const {
  for (Element x : members_)
    for (Element s : parent_->generators())
      if (!contains(parent_->conjugate(x, s))) return false;
  return true;
}

SubgroupSet whole_group(const Group& g) {
  std::vector<Element> all(g.order());
  for (Element x = 0; x < g.order(); ++x) all[x] = x;
  return SubgroupSet(g, std::move(all));
}

SubgroupSet trivial_subgroup(const Group& g) { return SubgroupSet(g, {Group::identity()}); }

SubgroupSet subgroup_generated(const Group& g, std::span<const Element> seed) {
  SubgroupBuilder builder(g);
  for (Element x : seed) {
    if (x >= g.order()) throw std::invalid_argument("element index out of range");
    builder.add(x);
  }
  return std::move(builder).finish();
}

SubgroupSet subgroup_join(const SubgroupSet& a, const SubgroupSet& b) {
  if (&a.group() != &b.group()) throw std::invalid_argument("subgroups of different groups");
  SubgroupBuilder builder(a.group());
  for (Element x : a.members()) builder.add(x);
  for (Element x : b.members()) builder.add(x);
  return std::move(builder).finish();
}

SubgroupSet commutator_subgroup(const SubgroupSet& h, const Group& g) {
  if (&h.group() != &g) throw std::invalid_argument("subgroup belongs to a different group");
  if (!h.is_normal()) throw std::invalid_argument("[H, G] requested for a non-normal H");
  SubgroupBuilder builder(g);
  for (Element x : h.members())
    for (Element y = 0; y < g.order(); ++y) builder.add(g.commutator(x, y));
  return std::move(builder).finish();
}

SubgroupSet power_subgroup(const SubgroupSet& h, std::uint64_t e) {
  const Group& g = h.group();
  SubgroupBuilder builder(g);
  for (Element x : h.members()) builder.add(g.pow(x, e));
  return std::move(builder).finish();
}

std::vector<std::vector<Element>> conjugacy_classes(const Group& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<std::vector<Element>> classes;
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<Element> orbit{x};
    seen[x] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (Element s : g.generators()) {
        Element y = g.conjugate(orbit[i], s);
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

std::vector<Element> minimal_generators_mod(const Group& g, const SubgroupSet& h,
                                            const SubgroupSet& k, std::uint32_t p) {
  if (&h.group() != &g || &k.group() != &g)
    throw std::invalid_argument("subgroups belong to a different group");
  if (!k.is_subgroup_of(h)) throw InternalError("K is not contained in H");
  if (!h.is_normal() || !k.is_normal()) throw InternalError("H and K must be normal");

  std::size_t index = h.order() / k.order();
  unsigned rank = 0;
  while (index % p == 0) {
    index /= p;
    ++rank;
  }
  if (index != 1) throw InternalError("|H/K| is not a power of p");

  for (Element x : h.members())
    if (!k.contains(g.pow(x, p))) throw InternalError("H/K does not have exponent p");

  SubgroupBuilder builder(g);
  for (Element x : k.members()) builder.add(x);
  std::vector<Element> picks;
  for (Element x : h.members()) {
    if (builder.order() == h.order()) break;
    if (builder.contains(x)) continue;
    picks.push_back(x);
    builder.add(x);
  }
  for (Element a : picks)
    for (Element b : picks)
      if (!k.contains(g.commutator(a, b))) throw InternalError("H/K is not abelian");
  if (picks.size() != rank) throw InternalError("greedy selection did not reach log_p |H/K|");
  return picks;
}

std::optional<PGroupInfo> is_p_group(const Group& g) {
  std::size_t n = g.order();
  if (n == 1) return PGroupInfo{0, 0, true};
  std::uint32_t q = 2;
  while (n % q != 0) ++q;
  unsigned e = 0;
  while (n % q == 0) {
    n /= q;
    ++e;
  }
  if (n != 1) return std::nullopt;
  return PGroupInfo{q, e, false};
}

Group close_generators(std::size_t n, const std::vector<Permutation>& gens, std::size_t cap) {
  for (const auto& s : gens) {
    if (s.size() != n) throw std::invalid_argument("permutation has wrong degree");
    std::vector<char> hit(n, 0);
    for (auto v : s)
      if (v >= n || hit[v]++) throw std::invalid_argument("generator is not a bijection");
  }
  Permutation id(n);
  for (std::uint32_t i = 0; i < n; ++i) id[i] = i;

  std::vector<Permutation> elems{id};
  std::map<Permutation, Element> index{{id, 0}};
  std::vector<Element> parent{0};
  std::vector<std::size_t> via{0};
  std::vector<Element> right;  // right[x * gens + s] = x * gens[s]
  const std::size_t k = gens.size();
  for (std::size_t x = 0; x < elems.size(); ++x) {
    for (std::size_t s = 0; s < k; ++s) {
      Permutation prod(n);
      for (std::size_t i = 0; i < n; ++i) prod[i] = gens[s][elems[x][i]];
      auto [it, inserted] = index.emplace(prod, static_cast<Element>(elems.size()));
      if (inserted) {
        if (elems.size() >= cap)
          throw CapExceeded("permutation closure exceeds cap " + std::to_string(cap));
        elems.push_back(std::move(prod));
        parent.push_back(static_cast<Element>(x));
        via.push_back(s);
      }
      right.push_back(it->second);
    }
  }

  const std::size_t order = elems.size();
  std::vector<Element> mul(order * order);
  for (Element a = 0; a < order; ++a) {
    mul[a * order] = a;
    // BFS order guarantees parent[b] < b.
    for (Element b = 1; b < order; ++b)
      mul[a * order + b] = right[mul[a * order + parent[b]] * k + via[b]];
  }

  std::vector<Element> gen_elems;
  std::vector<std::string> names;
  for (std::size_t s = 0; s < k; ++s) {
    Element e = index.at(gens[s]);
    if (e == 0 || std::find(gen_elems.begin(), gen_elems.end(), e) != gen_elems.end()) continue;
    gen_elems.push_back(e);
    names.push_back("g" + std::to_string(s + 1));
  }
  return Group::from_table(order, std::move(mul), std::move(gen_elems), std::move(names));
}

}  // namespace zsalg
