#include "oortscan/finite_group.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "group_internal.hpp"
#include "oortscan/error.hpp"

namespace oortscan {

// ---------------------------------------------------------------- Limits

Limits Limits::from_env()
{
  Limits limits;
  if (char const *cap = std::getenv("OORTSCAN_CAP"); cap && *cap) {
    char *end = nullptr;
    unsigned long long v = std::strtoull(cap, &end, 10);
    if (end && *end == '\0' && v > 0u)
      limits.max_order = std::min<std::size_t>(v, hard_max_order);
  }
  return limits;
}

// ------------------------------------------------------------ ElementSet

std::size_t ElementSet::count() const noexcept
{
  std::size_t n = 0u;
  for (auto w : words_)
    n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<Elem> ElementSet::to_vector() const
{
  std::vector<Elem> res;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      int b = std::countr_zero(w);
      res.push_back(static_cast<Elem>(i * 64u + static_cast<unsigned>(b)));
      w &= w - 1u;
    }
  }
  return res;
}

bool ElementSet::is_subset_of(ElementSet const &other) const noexcept
{
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i])
      return false;
  }
  return true;
}

ElementSet ElementSet::operator&(ElementSet const &other) const
{
  ElementSet res(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    res.words_[i] = words_[i] & other.words_[i];
  return res;
}

std::size_t ElementSet::hash() const noexcept
{
  std::uint64_t h = 1469598103934665603ull;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ull;
    h ^= h >> 29u;
  }
  return static_cast<std::size_t>(h);
}

// ----------------------------------------------------------- FiniteGroup

FiniteGroup::FiniteGroup() : FiniteGroup(generate(1u, {}))
{}

std::size_t FiniteGroup::degree() const noexcept { return data_->degree; }
std::size_t FiniteGroup::order() const noexcept { return data_->elements.size(); }

std::vector<Permutation> const &FiniteGroup::elements() const noexcept
{ return data_->elements; }

std::vector<Elem> const &FiniteGroup::generators() const noexcept
{ return data_->generators; }

std::vector<Permutation> FiniteGroup::generator_permutations() const
{
  std::vector<Permutation> res;
  for (Elem g : data_->generators)
    res.push_back(data_->elements[g]);
  return res;
}

Elem FiniteGroup::mul(Elem a, Elem b) const noexcept
{ return data_->table[static_cast<std::size_t>(a) * order() + b]; }

Elem FiniteGroup::inv(Elem a) const noexcept { return data_->inverses[a]; }

Elem FiniteGroup::pow(Elem a, std::int64_t k) const noexcept
{
  auto n = static_cast<std::int64_t>(order_of(a));
  k %= n;
  if (k < 0)
    k += n;
  Elem r = identity();
  Elem base = a;
  while (k > 0) {
    if (k & 1)
      r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

std::uint32_t FiniteGroup::order_of(Elem a) const noexcept { return data_->orders[a]; }

std::optional<Elem> FiniteGroup::find(Permutation const &p) const
{
  auto it = data_->index.find(p);
  if (it == data_->index.end())
    return std::nullopt;
  return it->second;
}

Elem FiniteGroup::index_of(Permutation const &p) const
{
  if (auto e = find(p))
    return *e;
  throw NotAMember("permutation " + p.str() + " is not an element of the group");
}

bool FiniteGroup::is_abelian() const noexcept { return data_->abelian; }

bool operator==(FiniteGroup const &a, FiniteGroup const &b)
{
  return a.data_ == b.data_ ||
         (a.degree() == b.degree() && a.elements() == b.elements());
}

namespace detail {

FiniteGroup make_group(std::size_t degree, std::vector<Permutation> elements,
                       std::vector<std::uint16_t> table, std::vector<Elem> generators)
{
  auto data = std::make_shared<GroupData>();
  std::size_t const n = elements.size();
  data->degree = degree;
  data->elements = std::move(elements);
  data->table = std::move(table);
  data->generators = std::move(generators);
  data->orders.assign(n, 0u);
  data->inverses.assign(n, 0u);

  auto mul = [&](Elem a, Elem b) -> Elem { return data->table[a * n + b]; };

  for (Elem a = 0; a < n; ++a) {
    Elem prev = 0u;
    Elem x = a;
    std::uint32_t k = 1u;
    while (x != 0u) {
      prev = x;
      x = mul(x, a);
      ++k;
    }
    data->orders[a] = k;
    // a^(k-1) is the inverse; for the identity the loop never runs.
    data->inverses[a] = (a == 0u) ? 0u : (k == 2u ? a : prev);
  }

  data->index.reserve(n);
  for (Elem a = 0; a < n; ++a)
    data->index.emplace(data->elements[a], a);

  data->abelian = true;
  for (Elem a : data->generators) {
    for (Elem b : data->generators) {
      if (mul(a, b) != mul(b, a))
        data->abelian = false;
    }
  }
  return FiniteGroup(std::move(data));
}

} // namespace detail

FiniteGroup generate(std::size_t degree, std::span<Permutation const> gens,
                     Limits const &limits)
{
  if (degree < 1u)
    throw BadParameters("degree must be positive");
  if (degree > limits.max_degree)
    throw CapExceeded("permutation degree", degree, limits.max_degree);
  std::size_t const max_order = std::min(limits.max_order, Limits::hard_max_order);

  for (auto const &g : gens) {
    if (g.degree() != degree)
      throw BadPermutation("generator " + g.str() + " has degree " +
                           std::to_string(g.degree()) + ", expected " +
                           std::to_string(degree));
  }

  // Breadth-first closure, remembering how each element was reached.
  std::vector<Permutation> found{Permutation::identity(degree)};
  std::vector<std::size_t> parent{0u};
  std::vector<std::size_t> via{0u};
  std::unordered_map<Permutation, std::size_t, PermutationHash> seen;
  seen.emplace(found[0], 0u);

  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Permutation y = found[i] * gens[k];
      if (seen.contains(y))
        continue;
      if (found.size() >= max_order)
        throw CapExceeded("group order", found.size() + 1u, max_order);
      seen.emplace(y, found.size());
      found.push_back(std::move(y));
      parent.push_back(i);
      via.push_back(k);
    }
  }

  std::size_t const n = found.size();
  std::vector<std::size_t> sorted(n);
  std::iota(sorted.begin(), sorted.end(), 0u);
  std::sort(sorted.begin(), sorted.end(),
            [&](std::size_t a, std::size_t b) { return found[a] < found[b]; });
  std::vector<Elem> rank(n);
  for (std::size_t r = 0; r < n; ++r)
    rank[sorted[r]] = static_cast<Elem>(r);

  // Right multiplication by each generator, in canonical indices.
  std::vector<std::vector<Elem>> right(gens.size(), std::vector<Elem>(n));
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (std::size_t t = 0; t < n; ++t)
      right[k][rank[t]] = rank[seen.at(found[t] * gens[k])];
  }

  // e_i * e_j = (e_i * e_parent(j)) * s_via(j), filled in closure order.
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    table[i * n + 0u] = static_cast<std::uint16_t>(i);
  for (std::size_t t = 1; t < n; ++t) {
    Elem j = rank[t];
    Elem pj = rank[parent[t]];
    auto const &r = right[via[t]];
    for (std::size_t i = 0; i < n; ++i)
      table[i * n + j] = static_cast<std::uint16_t>(r[table[i * n + pj]]);
  }

  std::vector<Elem> gen_idx;
  for (auto const &g : gens) {
    Elem e = rank[seen.at(g)];
    if (std::find(gen_idx.begin(), gen_idx.end(), e) == gen_idx.end())
      gen_idx.push_back(e);
  }

  std::vector<Permutation> elements;
  elements.reserve(n);
  for (std::size_t r = 0; r < n; ++r)
    elements.push_back(std::move(found[sorted[r]]));

  return detail::make_group(degree, std::move(elements), std::move(table),
                            std::move(gen_idx));
}

std::size_t element_order(FiniteGroup const &g, Permutation const &x)
{
  return g.order_of(g.index_of(x));
}

// -------------------------------------------------------------- Subgroup

Subgroup::Subgroup(FiniteGroup parent, ElementSet set, std::vector<Elem> gens)
  : parent_(std::move(parent)), set_(std::move(set)), gens_(std::move(gens))
{
  members_ = set_.to_vector();
}

FiniteGroup Subgroup::as_group() const
{
  std::size_t const n = members_.size();
  std::vector<Elem> pos(parent_.order(), 0u);
  for (std::size_t k = 0; k < n; ++k)
    pos[members_[k]] = static_cast<Elem>(k);

  std::vector<std::uint16_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] =
        static_cast<std::uint16_t>(pos[parent_.mul(members_[a], members_[b])]);
  }

  std::vector<Permutation> elements;
  elements.reserve(n);
  for (Elem m : members_)
    elements.push_back(parent_.element(m));

  std::vector<Elem> gens;
  for (Elem g : gens_)
    gens.push_back(pos[g]);
  if (gens.empty())
    gens.push_back(0u);

  return detail::make_group(parent_.degree(), std::move(elements), std::move(table),
                            std::move(gens));
}

Subgroup Subgroup::from_members(FiniteGroup const &parent, std::vector<Elem> members)
{
  ElementSet set(parent.order());
  for (Elem m : members) {
    if (m >= parent.order())
      throw NotAMember("element index " + std::to_string(m) + " out of range");
    set.insert(m);
  }
  if (!set.contains(FiniteGroup::identity()))
    throw NotASubgroup("member set does not contain the identity");

  auto const list = set.to_vector();
  for (Elem a : list) {
    if (!set.contains(parent.inv(a)))
      throw NotASubgroup("member set is not closed under inverses");
    for (Elem b : list) {
      if (!set.contains(parent.mul(a, b)))
        throw NotASubgroup("member set is not closed under composition");
    }
  }
  return detail::close_subgroup(parent, list);
}

namespace detail {

Subgroup close_subgroup(FiniteGroup const &g, std::vector<Elem> gens)
{
  std::erase(gens, FiniteGroup::identity());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  ElementSet set(g.order());
  set.insert(FiniteGroup::identity());
  std::vector<Elem> queue{FiniteGroup::identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Elem s : gens) {
      Elem y = g.mul(queue[i], s);
      if (!set.contains(y)) {
        set.insert(y);
        queue.push_back(y);
      }
    }
  }

  // Drop redundant generators greedily so generating sets stay small.
  if (gens.size() > 1u) {
    std::vector<Elem> kept;
    ElementSet span(g.order());
    span.insert(FiniteGroup::identity());
    std::vector<Elem> span_list{FiniteGroup::identity()};
    for (Elem s : gens) {
      if (span.contains(s))
        continue;
      kept.push_back(s);
      // re-close with the enlarged generating set
      for (std::size_t i = 0; i < span_list.size(); ++i) {
        for (Elem t : kept) {
          Elem y = g.mul(span_list[i], t);
          if (!span.contains(y)) {
            span.insert(y);
            span_list.push_back(y);
          }
        }
      }
    }
    gens = std::move(kept);
  }

  return Subgroup(g, std::move(set), std::move(gens));
}

} // namespace detail

Subgroup subgroup_generated(FiniteGroup const &g, std::span<Elem const> elems)
{
  for (Elem e : elems) {
    if (e >= g.order())
      throw NotAMember("element index " + std::to_string(e) + " out of range");
  }
  return detail::close_subgroup(g, std::vector<Elem>(elems.begin(), elems.end()));
}

Subgroup subgroup_generated(FiniteGroup const &g, std::vector<Permutation> const &elems)
{
  std::vector<Elem> idx;
  idx.reserve(elems.size());
  for (auto const &p : elems)
    idx.push_back(g.index_of(p));
  return detail::close_subgroup(g, std::move(idx));
}

Subgroup whole_group(FiniteGroup const &g)
{
  return detail::close_subgroup(g, g.generators());
}

Subgroup trivial_subgroup(FiniteGroup const &g)
{
  return detail::close_subgroup(g, {});
}

Subgroup join(Subgroup const &a, Subgroup const &b)
{
  std::vector<Elem> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return detail::close_subgroup(a.parent(), std::move(gens));
}

Subgroup intersection(Subgroup const &a, Subgroup const &b)
{
  // The intersection is closed; generate it from its own members.
  auto members = (a.member_set() & b.member_set()).to_vector();
  return detail::close_subgroup(a.parent(), std::move(members));
}

bool subgroup_less(Subgroup const &a, Subgroup const &b)
{
  if (a.order() != b.order())
    return a.order() < b.order();
  return a.members() < b.members();
}

namespace {

/// Fixpoint of joins: every subgroup reachable from `seeds` by repeatedly
/// joining a known subgroup with one of the `atoms`.
std::vector<Subgroup> join_closure(std::vector<Subgroup> const &atoms,
                                   std::vector<Subgroup> seeds, Limits const &limits)
{
  std::unordered_set<ElementSet, ElementSetHash> known;
  std::vector<Subgroup> found;
  for (auto &s : seeds) {
    if (known.insert(s.member_set()).second)
      found.push_back(std::move(s));
  }

  for (std::size_t i = 0; i < found.size(); ++i) {
    for (auto const &atom : atoms) {
      if (atom.member_set().is_subset_of(found[i].member_set()))
        continue;
      Subgroup k = join(found[i], atom);
      if (known.insert(k.member_set()).second) {
        if (found.size() >= limits.max_subgroups)
          throw CapExceeded("subgroup count", found.size() + 1u, limits.max_subgroups);
        found.push_back(std::move(k));
      }
    }
  }

  std::sort(found.begin(), found.end(), subgroup_less);
  return found;
}

void check_enumeration_cap(FiniteGroup const &g, Limits const &limits)
{
  if (g.order() > limits.max_order)
    throw CapExceeded("group order for subgroup enumeration", g.order(),
                      limits.max_order);
}

} // namespace

std::vector<Subgroup> all_subgroups(FiniteGroup const &g, Limits const &limits)
{
  check_enumeration_cap(g, limits);

  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<Subgroup> cyclic;
  for (Elem e = 0; e < g.order(); ++e) {
    Elem one[] = {e};
    Subgroup c = subgroup_generated(g, one);
    if (seen.insert(c.member_set()).second)
      cyclic.push_back(std::move(c));
  }
  return join_closure(cyclic, cyclic, limits);
}

std::vector<Subgroup> normal_subgroups(FiniteGroup const &g, Limits const &limits)
{
  check_enumeration_cap(g, limits);

  // Normal closures of single elements; every normal subgroup is a join of these.
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<Subgroup> closures;
  ElementSet done(g.order());
  for (Elem e = 0; e < g.order(); ++e) {
    if (done.contains(e))
      continue;
    std::vector<Elem> cls;
    for (Elem x = 0; x < g.order(); ++x)
      cls.push_back(g.conj(e, x));
    for (Elem c : cls)
      done.insert(c);
    Subgroup nc = detail::close_subgroup(g, std::move(cls));
    if (seen.insert(nc.member_set()).second)
      closures.push_back(std::move(nc));
  }
  return join_closure(closures, closures, limits);
}

bool is_normal(FiniteGroup const &g, Subgroup const &h)
{
  for (Elem x : g.generators()) {
    for (Elem m : h.members()) {
      if (!h.contains(g.conj(m, x)))
        return false;
    }
  }
  return true;
}

Subgroup conjugate(FiniteGroup const &g, Subgroup const &h, Elem x)
{
  if (x >= g.order())
    throw NotAMember("element index " + std::to_string(x) + " out of range");
  std::vector<Elem> gens;
  for (Elem m : h.generators())
    gens.push_back(g.mul(g.mul(x, m), g.inv(x)));
  return detail::close_subgroup(g, std::move(gens));
}

} // namespace oortscan
