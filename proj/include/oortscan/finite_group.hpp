#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "oortscan/permutation.hpp"

namespace oortscan {

/// Index of an element in its group's canonical element table.
using Elem = std::uint32_t;

/// Size limits applied when building and enumerating groups.
struct Limits {
  std::size_t max_order = 4096;       ///< largest group that may be enumerated
  std::size_t max_degree = 64;        ///< largest permutation degree accepted
  std::size_t max_subgroups = 250000; ///< abort subgroup enumeration beyond this

  /// Element indices are stored in 16 bits.
  static constexpr std::size_t hard_max_order = 65535;

  /// Defaults, with max_order overridden by $OORTSCAN_CAP when set.
  static Limits from_env();
};

/// Fixed-universe bitset of element indices.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
    : universe_(universe), words_((universe + 63u) / 64u, 0u) {}

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Elem e) const noexcept
  { return (words_[e >> 6u] >> (e & 63u)) & 1u; }

  void insert(Elem e) noexcept { words_[e >> 6u] |= std::uint64_t{1} << (e & 63u); }

  std::size_t count() const noexcept;
  std::vector<Elem> to_vector() const;
  bool is_subset_of(ElementSet const &other) const noexcept;
  ElementSet operator&(ElementSet const &other) const;
  std::size_t hash() const noexcept;

  friend bool operator==(ElementSet const &, ElementSet const &) = default;

private:
  std::size_t universe_ = 0u;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(ElementSet const &s) const noexcept { return s.hash(); }
};

class FiniteGroup;
class Subgroup;

namespace detail {
struct GroupData;
Subgroup close_subgroup(FiniteGroup const &g, std::vector<Elem> gens);
} // namespace detail

/// A fully enumerated permutation group.
///
/// Elements are stored in lexicographic order of their image sequences, so
/// index 0 is always the identity. The multiplication table is precomputed;
/// all element-level operations are table lookups. Copies share the same
/// immutable data and are safe to use from several threads.
class FiniteGroup {
public:
  FiniteGroup();

  std::size_t degree() const noexcept;
  std::size_t order() const noexcept;

  std::vector<Permutation> const &elements() const noexcept;
  Permutation const &element(Elem e) const { return elements()[e]; }

  /// Indices of the generating permutations the group was built from.
  std::vector<Elem> const &generators() const noexcept;
  std::vector<Permutation> generator_permutations() const;

  static constexpr Elem identity() noexcept { return 0u; }

  Elem mul(Elem a, Elem b) const noexcept;
  Elem inv(Elem a) const noexcept;
  Elem pow(Elem a, std::int64_t k) const noexcept;
  /// a^-1 * b * a
  Elem conj(Elem b, Elem a) const noexcept { return mul(mul(inv(a), b), a); }
  /// a^-1 * b^-1 * a * b
  Elem commutator(Elem a, Elem b) const noexcept
  { return mul(mul(inv(a), inv(b)), mul(a, b)); }

  std::uint32_t order_of(Elem a) const noexcept;

  std::optional<Elem> find(Permutation const &p) const;
  /// Throws NotAMember.
  Elem index_of(Permutation const &p) const;

  bool is_abelian() const noexcept;

  /// True iff both handles refer to the same underlying element table.
  bool same_as(FiniteGroup const &other) const noexcept { return data_ == other.data_; }

  /// Equal degree and equal element sets.
  friend bool operator==(FiniteGroup const &a, FiniteGroup const &b);

  explicit FiniteGroup(std::shared_ptr<detail::GroupData const> data)
    : data_(std::move(data)) {}

private:
  std::shared_ptr<detail::GroupData const> data_;
};

/// Closure of `gens` under composition. Throws BadPermutation if a generator
/// has the wrong degree, CapExceeded past the order or degree cap.
FiniteGroup generate(std::size_t degree, std::span<Permutation const> gens,
                     Limits const &limits = {});

/// Least k >= 1 with g^k = 1. Throws NotAMember.
std::size_t element_order(FiniteGroup const &g, Permutation const &x);

/// A subgroup of a FiniteGroup, stored as an explicit member set.
class Subgroup {
public:
  FiniteGroup const &parent() const noexcept { return parent_; }
  std::size_t order() const noexcept { return members_.size(); }

  /// Member indices in increasing (canonical) order.
  std::vector<Elem> const &members() const noexcept { return members_; }
  ElementSet const &member_set() const noexcept { return set_; }
  bool contains(Elem e) const noexcept { return set_.contains(e); }

  /// A generating set (empty for the trivial subgroup).
  std::vector<Elem> const &generators() const noexcept { return gens_; }

  /// The subgroup as a standalone group. Its element k is members()[k].
  FiniteGroup as_group() const;

  /// Validates closure; throws NotASubgroup.
  static Subgroup from_members(FiniteGroup const &parent, std::vector<Elem> members);

  friend bool operator==(Subgroup const &a, Subgroup const &b) noexcept
  { return a.set_ == b.set_; }

private:
  Subgroup(FiniteGroup parent, ElementSet set, std::vector<Elem> gens);

  friend Subgroup detail::close_subgroup(FiniteGroup const &, std::vector<Elem>);

  FiniteGroup parent_;
  ElementSet set_;
  std::vector<Elem> members_;
  std::vector<Elem> gens_;
};

/// Smallest subgroup containing `elems`. Throws NotAMember on a bad index.
Subgroup subgroup_generated(FiniteGroup const &g, std::span<Elem const> elems);
Subgroup subgroup_generated(FiniteGroup const &g, std::vector<Permutation> const &elems);

Subgroup whole_group(FiniteGroup const &g);
Subgroup trivial_subgroup(FiniteGroup const &g);
Subgroup join(Subgroup const &a, Subgroup const &b);
Subgroup intersection(Subgroup const &a, Subgroup const &b);

/// Canonical subgroup order: by order, then by member list.
bool subgroup_less(Subgroup const &a, Subgroup const &b);

/// Every subgroup of g exactly once, sorted by subgroup_less.
/// Throws CapExceeded when |g| or the subgroup count exceeds the limits.
std::vector<Subgroup> all_subgroups(FiniteGroup const &g, Limits const &limits = {});

/// Every normal subgroup of g exactly once, sorted by subgroup_less.
std::vector<Subgroup> normal_subgroups(FiniteGroup const &g, Limits const &limits = {});

bool is_normal(FiniteGroup const &g, Subgroup const &h);

/// x h x^-1 for every h in H. Throws NotAMember for a bad index.
Subgroup conjugate(FiniteGroup const &g, Subgroup const &h, Elem x);

} // namespace oortscan
