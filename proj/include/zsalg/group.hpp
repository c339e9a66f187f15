#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zsalg {

/// Element cap for closures and table ingestion.
inline constexpr std::size_t kDefaultOrderCap = 4096;

/// A finite group materialized as a full multiplication table. Element 0 is
/// always the identity. Labels are shortest words in the named generators
/// and carry no semantics.
class Group {
 public:
  using Element = std::uint32_t;

  /// Validates the table: identity at 0, every row and column a
  /// permutation, associativity (exhaustive up to order 256, sampled above).
  /// When generators is empty a generating set is chosen greedily. Labels
  /// are computed as words in generator_names unless given explicitly.
  static Group from_table(std::size_t order, std::vector<Element> mul,
                          std::vector<Element> generators,
                          std::vector<std::string> generator_names,
                          std::vector<std::string> labels = {},
                          std::optional<std::uint32_t> p_hint = std::nullopt);

  std::size_t order() const noexcept { return order_; }
  static constexpr Element identity() noexcept { return 0; }

  Element mul(Element a, Element b) const { return mul_[a * order_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  Element pow(Element a, std::uint64_t e) const;
  /// [a, b] = a^-1 b^-1 a b.
  Element commutator(Element a, Element b) const;
  /// b^-1 a b.
  Element conjugate(Element a, Element by) const;
  std::size_t element_order(Element a) const;

  const std::string& label(Element a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<Element>& generators() const noexcept { return generators_; }
  const std::vector<std::string>& generator_names() const noexcept { return generator_names_; }
  std::optional<std::uint32_t> p_hint() const noexcept { return p_hint_; }
  const std::vector<Element>& table() const noexcept { return mul_; }

  bool is_abelian() const;

  /// The same abstract group with element old -> perm[old]; perm[0] must be
  /// 0. Used to confirm results do not depend on element numbering.
  Group relabeled(std::span<const Element> perm) const;

 private:
  Group() = default;

  std::size_t order_ = 0;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  std::vector<Element> generators_;
  std::vector<std::string> generator_names_;
  std::vector<std::string> labels_;
  std::optional<std::uint32_t> p_hint_;
};

using GroupPtr = std::shared_ptr<const Group>;

/// Shortest words (BFS over right multiplication by generators), rendered
/// as "a^2*b"; the identity is "1".
std::vector<std::string> word_labels(const Group& g, std::span<const Group::Element> gens,
                                     std::span<const std::string> names);

/// A subgroup as a strictly sorted member list. Holds a non-owning pointer
/// to its group, which must outlive it.
class SubgroupSet {
 public:
  SubgroupSet(const Group& parent, std::vector<Group::Element> sorted_members);

  const Group& group() const noexcept { return *parent_; }
  const std::vector<Group::Element>& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(Group::Element x) const { return mask_[x] != 0; }
  bool is_trivial() const noexcept { return members_.size() == 1; }
  bool is_subgroup_of(const SubgroupSet& other) const;
  bool is_normal() const;

  friend bool operator==(const SubgroupSet& a, const SubgroupSet& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  const Group* parent_;
  std::vector<Group::Element> members_;
  std::vector<char> mask_;
};

SubgroupSet whole_group(const Group& g);
SubgroupSet trivial_subgroup(const Group& g);

/// Smallest subgroup containing seed.
SubgroupSet subgroup_generated(const Group& g, std::span<const Group::Element> seed);
/// Subgroup generated by the union of a and b.
SubgroupSet subgroup_join(const SubgroupSet& a, const SubgroupSet& b);

/// [H, G] for a normal subgroup H. Throws std::invalid_argument when H is
/// not normal.
SubgroupSet commutator_subgroup(const SubgroupSet& h, const Group& g);

/// Subgroup generated by {x^e : x in H}.
SubgroupSet power_subgroup(const SubgroupSet& h, std::uint64_t e);

/// Conjugation orbits, each sorted, ordered by least element. The identity
/// class comes first.
std::vector<std::vector<Group::Element>> conjugacy_classes(const Group& g);

/// Elements of H whose images form an F_p-basis of H/K, chosen greedily
/// over ascending element index. Requires K <= H, both normal, and H/K
/// elementary abelian of exponent p; a violation throws InternalError.
std::vector<Group::Element> minimal_generators_mod(const Group& g, const SubgroupSet& h,
                                                   const SubgroupSet& k, std::uint32_t p);

struct PGroupInfo {
  std::uint32_t p = 0;   // 0 for the trivial group
  unsigned exponent = 0; // |G| = p^exponent
  bool trivial = false;  // order 1: a p-group for every p
};

/// Present iff |G| is a prime power (or 1).
std::optional<PGroupInfo> is_p_group(const Group& g);

/// Permutation on {0..n-1} as the image list.
using Permutation = std::vector<std::uint32_t>;

/// Breadth-first closure of permutation generators. The product x*y acts as
/// x first, then y. Throws std::invalid_argument on a non-bijection and
/// CapExceeded when the closure grows past cap elements.
Group close_generators(std::size_t n, const std::vector<Permutation>& gens,
                       std::size_t cap = kDefaultOrderCap);

}  // namespace zsalg
