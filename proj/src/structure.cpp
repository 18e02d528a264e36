#include "oortscan/structure.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "group_internal.hpp"
#include "oortscan/arith.hpp"
#include "oortscan/error.hpp"

namespace oortscan {

// ------------------------------------------------------------------ IsoType

IsoType IsoType::elementary_abelian(std::uint64_t p, unsigned rank)
{
  IsoType t{Kind::ElementaryAbelian, static_cast<std::size_t>(ipow(p, rank))};
  t.p = p;
  t.rank = rank;
  return t;
}

char const *kind_name(IsoType::Kind k)
{
  switch (k) {
  case IsoType::Kind::Cyclic: return "Cyclic";
  case IsoType::Kind::Dihedral: return "Dihedral";
  case IsoType::Kind::SemiDihedral: return "SemiDihedral";
  case IsoType::Kind::GeneralizedQuaternion: return "GeneralizedQuaternion";
  case IsoType::Kind::ElementaryAbelian: return "ElementaryAbelian";
  case IsoType::Kind::A4: return "A4";
  case IsoType::Kind::S4: return "S4";
  case IsoType::Kind::A5: return "A5";
  case IsoType::Kind::SL23: return "SL23";
  case IsoType::Kind::Other: return "Other";
  }
  return "Other";
}

std::string IsoType::str() const
{
  auto n = std::to_string(order);
  switch (kind) {
  case Kind::Cyclic: return "C" + n;
  case Kind::Dihedral: return "D" + n;
  case Kind::SemiDihedral: return "SD" + n;
  case Kind::GeneralizedQuaternion: return "Q" + n;
  case Kind::ElementaryAbelian:
    return "C" + std::to_string(p) + "^" + std::to_string(rank);
  case Kind::A4: return "A4";
  case Kind::S4: return "S4";
  case Kind::A5: return "A5";
  case Kind::SL23: return "SL(2,3)";
  case Kind::Other: return "Other(" + n + ")";
  }
  return "Other(" + n + ")";
}

std::vector<IsoType> aliases(IsoType const &t)
{
  std::vector<IsoType> res;
  switch (t.kind) {
  case IsoType::Kind::Dihedral:
    if (t.order == 4u)
      res.push_back(IsoType::elementary_abelian(2u, 2u));
    break;
  case IsoType::Kind::Cyclic:
    if (t.order == 2u)
      res.push_back(IsoType::dihedral(2u));
    if (t.order > 1u && is_prime(t.order))
      res.push_back(IsoType::elementary_abelian(t.order, 1u));
    break;
  case IsoType::Kind::ElementaryAbelian:
    if (t.rank == 1u)
      res.push_back(IsoType::cyclic(t.order));
    if (t.p == 2u && t.rank == 2u)
      res.push_back(IsoType::dihedral(4u));
    break;
  default:
    break;
  }
  return res;
}

// --------------------------------------------------------------- helpers

namespace {

void require_parent(FiniteGroup const &g, Subgroup const &h)
{
  if (!h.parent().same_as(g))
    throw NotASubgroup("subgroup belongs to a different group");
}

bool centralizes(FiniteGroup const &g, Elem x, Subgroup const &h)
{
  for (Elem s : h.generators()) {
    if (g.mul(x, s) != g.mul(s, x))
      return false;
  }
  return true;
}

/// x -> c x c^-1
Elem conj_by(FiniteGroup const &g, Elem c, Elem x)
{
  return g.mul(g.mul(c, x), g.inv(c));
}

} // namespace

// ---------------------------------------------- characteristic subgroups

Subgroup center(FiniteGroup const &g)
{
  std::vector<Elem> z;
  auto const &gens = g.generators();
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = std::all_of(gens.begin(), gens.end(),
                          [&](Elem s) { return g.mul(x, s) == g.mul(s, x); });
    if (ok)
      z.push_back(x);
  }
  return subgroup_generated(g, z);
}

Subgroup centralizer(FiniteGroup const &g, Subgroup const &h)
{
  require_parent(g, h);
  std::vector<Elem> c;
  for (Elem x = 0; x < g.order(); ++x) {
    if (centralizes(g, x, h))
      c.push_back(x);
  }
  return subgroup_generated(g, c);
}

Subgroup normalizer(FiniteGroup const &g, Subgroup const &h)
{
  require_parent(g, h);
  std::vector<Elem> n;
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem s : h.generators()) {
      if (!h.contains(g.conj(s, x))) {
        ok = false;
        break;
      }
    }
    if (ok)
      n.push_back(x);
  }
  return subgroup_generated(g, n);
}

Subgroup normal_closure(FiniteGroup const &g, std::vector<Elem> elems)
{
  Subgroup h = subgroup_generated(g, elems);
  while (true) {
    std::vector<Elem> extra;
    for (Elem x : g.generators()) {
      for (Elem s : h.generators()) {
        Elem y = g.conj(s, x);
        if (!h.contains(y))
          extra.push_back(y);
      }
    }
    if (extra.empty())
      return h;
    std::vector<Elem> gens = h.generators();
    gens.insert(gens.end(), extra.begin(), extra.end());
    h = subgroup_generated(g, gens);
  }
}

Subgroup derived_subgroup(FiniteGroup const &g)
{
  // [G,G] is the normal closure of the commutators of a generating set.
  std::vector<Elem> comms;
  auto const &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1u; j < gens.size(); ++j)
      comms.push_back(g.commutator(gens[i], gens[j]));
  }
  return normal_closure(g, std::move(comms));
}

std::vector<Subgroup> maximal_subgroups(FiniteGroup const &g, Limits const &limits)
{
  auto subs = all_subgroups(g, limits);
  std::vector<Subgroup> res;
  // sorted by order, so any strict overgroup appears later
  for (std::size_t i = 0; i + 1u < subs.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1u; j + 1u < subs.size(); ++j) {
      if (subs[j].order() > subs[i].order() &&
          subs[i].member_set().is_subset_of(subs[j].member_set())) {
        maximal = false;
        break;
      }
    }
    if (maximal)
      res.push_back(subs[i]);
  }
  return res;
}

Subgroup frattini_p_group(FiniteGroup const &g, std::uint64_t p)
{
  std::vector<Elem> gens;
  for (Elem x = 0; x < g.order(); ++x)
    gens.push_back(g.pow(x, static_cast<std::int64_t>(p)));
  Subgroup d = derived_subgroup(g);
  gens.insert(gens.end(), d.generators().begin(), d.generators().end());
  return subgroup_generated(g, gens);
}

Subgroup frattini(FiniteGroup const &g, Limits const &limits)
{
  if (g.order() == 1u)
    return trivial_subgroup(g);

  auto maxes = maximal_subgroups(g, limits);
  Subgroup phi = maxes.front();
  for (std::size_t i = 1; i < maxes.size(); ++i)
    phi = intersection(phi, maxes[i]);

  auto primes = prime_divisors(g.order());
  if (primes.size() == 1u) {
    Subgroup alt = frattini_p_group(g, primes.front());
    if (!(alt == phi))
      throw std::logic_error("Frattini subgroup computations disagree");
  }
  return phi;
}

std::vector<Subgroup> minimal_normal_subgroups(FiniteGroup const &g, Limits const &limits)
{
  auto normals = normal_subgroups(g, limits);
  std::vector<Subgroup> res;
  for (std::size_t i = 1; i < normals.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 1; j < i; ++j) {
      if (normals[j].order() < normals[i].order() &&
          normals[j].member_set().is_subset_of(normals[i].member_set())) {
        minimal = false;
        break;
      }
    }
    if (minimal)
      res.push_back(normals[i]);
  }
  return res;
}

Subgroup sylow(FiniteGroup const &g, std::uint64_t p)
{
  std::uint64_t const target = p_part(g.order(), p);
  if (target == 1u)
    return trivial_subgroup(g);

  std::vector<Elem> p_elems;
  for (Elem x = 0; x < g.order(); ++x) {
    if (is_power_of(g.order_of(x), p))
      p_elems.push_back(x);
  }
  // All p-elements fit in one Sylow exactly when it is normal.
  if (p_elems.size() == target)
    return Subgroup::from_members(g, p_elems);

  Subgroup s = trivial_subgroup(g);
  while (s.order() < target) {
    Subgroup n = normalizer(g, s);
    bool grown = false;
    for (Elem x : p_elems) {
      if (n.contains(x) && !s.contains(x)) {
        std::vector<Elem> gens = s.generators();
        gens.push_back(x);
        s = subgroup_generated(g, gens);
        grown = true;
        break;
      }
    }
    if (!grown)
      throw std::logic_error("Sylow growth stalled");
  }
  return s;
}

QuotientGroup quotient(FiniteGroup const &g, Subgroup const &n)
{
  require_parent(g, n);
  if (!is_normal(g, n))
    throw NotNormal("subgroup of order " + std::to_string(n.order()) + " is not normal");

  std::size_t const order = g.order();
  constexpr Elem unset = ~Elem{0};
  // Cosets numbered by their smallest element.
  std::vector<Elem> coset(order, unset);
  std::vector<Elem> reps;
  for (Elem x = 0; x < order; ++x) {
    if (coset[x] != unset)
      continue;
    auto id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem k : n.members())
      coset[g.mul(x, k)] = id;
  }

  std::size_t const q = reps.size();
  std::vector<Permutation> perms;
  perms.reserve(q);
  for (std::size_t a = 0; a < q; ++a) {
    std::vector<Point> images(q);
    for (std::size_t k = 0; k < q; ++k)
      images[k] = static_cast<Point>(coset[g.mul(reps[k], reps[a])]);
    perms.push_back(Permutation::from_images(std::move(images)));
  }

  std::vector<std::size_t> sorted(q);
  std::iota(sorted.begin(), sorted.end(), 0u);
  std::sort(sorted.begin(), sorted.end(),
            [&](std::size_t a, std::size_t b) { return perms[a] < perms[b]; });
  std::vector<Elem> rank(q);
  for (std::size_t r = 0; r < q; ++r)
    rank[sorted[r]] = static_cast<Elem>(r);

  std::vector<std::uint16_t> table(q * q);
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b)
      table[rank[a] * q + rank[b]] =
        static_cast<std::uint16_t>(rank[coset[g.mul(reps[a], reps[b])]]);
  }

  std::vector<Elem> gens;
  for (Elem s : g.generators()) {
    Elem e = rank[coset[s]];
    if (e != 0u && std::find(gens.begin(), gens.end(), e) == gens.end())
      gens.push_back(e);
  }

  std::vector<Permutation> elements;
  elements.reserve(q);
  for (std::size_t r = 0; r < q; ++r)
    elements.push_back(std::move(perms[sorted[r]]));

  FiniteGroup model = detail::make_group(q, std::move(elements), std::move(table),
                                         std::move(gens));

  std::vector<Elem> projection(order);
  for (Elem x = 0; x < order; ++x)
    projection[x] = rank[coset[x]];

  for (Elem a : g.generators()) {
    for (Elem b : g.generators()) {
      if (projection[g.mul(a, b)] != model.mul(projection[a], projection[b]))
        throw std::logic_error("quotient projection is not a homomorphism");
    }
  }

  return QuotientGroup{g, n, std::move(model), std::move(projection)};
}

// ------------------------------------------------------- simple invariants

bool is_cyclic(FiniteGroup const &g)
{
  for (Elem x = 0; x < g.order(); ++x) {
    if (g.order_of(x) == g.order())
      return true;
  }
  return false;
}

bool is_p_group(FiniteGroup const &g, std::uint64_t p)
{
  return is_power_of(g.order(), p);
}

bool is_elementary_abelian(FiniteGroup const &g)
{
  if (g.order() == 1u || !g.is_abelian())
    return false;
  std::uint32_t const p = g.order_of(g.generators().front());
  if (!is_prime(p))
    return false;
  for (Elem x = 1; x < g.order(); ++x) {
    if (g.order_of(x) != p)
      return false;
  }
  return true;
}

std::size_t exponent(FiniteGroup const &g)
{
  std::size_t e = 1u;
  for (Elem x = 0; x < g.order(); ++x)
    e = std::lcm(e, static_cast<std::size_t>(g.order_of(x)));
  return e;
}

std::size_t involution_count(FiniteGroup const &g)
{
  std::size_t n = 0u;
  for (Elem x = 0; x < g.order(); ++x)
    n += g.order_of(x) == 2u;
  return n;
}

bool is_cyclic(Subgroup const &h)
{
  for (Elem x : h.members()) {
    if (h.parent().order_of(x) == h.order())
      return true;
  }
  return false;
}

bool is_elementary_abelian(Subgroup const &h)
{
  if (h.order() == 1u)
    return false;
  FiniteGroup const &g = h.parent();
  std::uint32_t p = 0u;
  for (Elem x : h.members()) {
    if (x == 0u)
      continue;
    if (p == 0u)
      p = g.order_of(x);
    if (g.order_of(x) != p)
      return false;
  }
  if (!is_prime(p))
    return false;
  for (Elem a : h.generators()) {
    for (Elem b : h.generators()) {
      if (g.mul(a, b) != g.mul(b, a))
        return false;
    }
  }
  return true;
}

// ------------------------------------------------------------ recognition

namespace {

bool is_dihedral(FiniteGroup const &g)
{
  std::size_t const n = g.order();
  if (n % 2u != 0u || n < 4u)
    return false;
  std::size_t const m = n / 2u;

  std::vector<Elem> involutions;
  for (Elem x = 1; x < n; ++x) {
    if (g.order_of(x) == 2u)
      involutions.push_back(x);
  }

  for (Elem r = 1; r < n; ++r) {
    if (g.order_of(r) != m)
      continue;
    Elem one[] = {r};
    Subgroup rot = subgroup_generated(g, one);
    Elem rinv = g.inv(r);
    for (Elem t : involutions) {
      if (!rot.contains(t) && g.mul(g.mul(t, r), t) == rinv)
        return true;
    }
  }
  return false;
}

bool is_semidihedral(FiniteGroup const &g)
{
  std::size_t const n = g.order();
  if (n < 16u || !is_power_of(n, 2u))
    return false;
  std::int64_t const twist = -1 + static_cast<std::int64_t>(n / 4u);
  for (Elem x = 1; x < n; ++x) {
    if (g.order_of(x) != n / 2u)
      continue;
    Elem target = g.pow(x, twist);
    for (Elem y = 1; y < n; ++y) {
      if (g.order_of(y) == 2u && g.mul(g.mul(y, x), y) == target)
        return true;
    }
  }
  return false;
}

bool sylow_is_normal(FiniteGroup const &g, std::uint64_t p)
{
  Subgroup s = sylow(g, p);
  return is_normal(g, s);
}

} // namespace

IsoType recognize(FiniteGroup const &g)
{
  std::size_t const n = g.order();
  if (is_cyclic(g))
    return IsoType::cyclic(n);

  if (is_elementary_abelian(g)) {
    auto p = g.order_of(g.generators().front());
    unsigned r = valuation(n, p);
    // The Klein four group is reported as D4, with C2^2 as its alias.
    if (p == 2u && r == 2u)
      return IsoType::dihedral(4u);
    return IsoType::elementary_abelian(p, r);
  }

  if (is_dihedral(g))
    return IsoType::dihedral(n);

  if (is_power_of(n, 2u) && n >= 8u) {
    if (involution_count(g) == 1u)
      return IsoType::quaternion(n);
    if (is_semidihedral(g))
      return IsoType::semidihedral(n);
  }

  if (n == 12u) {
    Subgroup s = sylow(g, 2u);
    if (is_normal(g, s) && is_elementary_abelian(s) && center(g).order() == 1u)
      return IsoType::a4();
  }

  if (n == 24u) {
    Subgroup s = sylow(g, 2u);
    std::size_t z = center(g).order();
    if (involution_count(g) == 1u && is_normal(g, s) && z == 2u)
      return IsoType::sl23();
    if (z == 1u && !sylow_is_normal(g, 2u) && !sylow_is_normal(g, 3u))
      return IsoType::s4();
  }

  if (n == 60u && normal_subgroups(g).size() == 2u)
    return IsoType::a5();

  return IsoType::other(n);
}

std::optional<CyclicByPDecomposition> cyclic_by_p_decompose(FiniteGroup const &g,
                                                            std::uint64_t p)
{
  Subgroup s = sylow(g, p);
  if (!is_normal(g, s))
    return std::nullopt;

  std::size_t const m = g.order() / s.order();
  std::optional<Elem> c;
  for (Elem x = 0; x < g.order(); ++x) {
    if (g.order_of(x) == m) {
      c = x;
      break;
    }
  }
  if (!c)
    return std::nullopt;

  Elem one[] = {*c};
  Subgroup cs = subgroup_generated(g, one);
  std::size_t ord = action_order(g, *c, s);
  return CyclicByPDecomposition{std::move(s), std::move(cs), m, *c, ord};
}

std::vector<Subgroup> cyclic_by_p_subgroups(FiniteGroup const &g, std::uint64_t p,
                                            Limits const &limits)
{
  std::vector<Subgroup> res;
  for (auto &h : all_subgroups(g, limits)) {
    if (cyclic_by_p_decompose(h.as_group(), p))
      res.push_back(std::move(h));
  }
  return res;
}

// ------------------------------------------------------ action predicates

bool acts_by_inversion(FiniteGroup const &g, Elem c, Subgroup const &p)
{
  require_parent(g, p);
  for (Elem x : p.members()) {
    if (conj_by(g, c, x) != g.inv(x))
      return false;
  }
  return true;
}

bool acts_faithfully(FiniteGroup const &g, Subgroup const &c, Subgroup const &p)
{
  require_parent(g, c);
  require_parent(g, p);
  for (Elem x : c.members()) {
    if (x != 0u && centralizes(g, x, p))
      return false;
  }
  return true;
}

bool acts_trivially(FiniteGroup const &g, Subgroup const &c, Subgroup const &p)
{
  require_parent(g, c);
  require_parent(g, p);
  for (Elem x : c.generators()) {
    if (!centralizes(g, x, p))
      return false;
  }
  return true;
}

bool acts_irreducibly(FiniteGroup const &g, Subgroup const &c, Subgroup const &p)
{
  require_parent(g, c);
  require_parent(g, p);
  if (!is_elementary_abelian(p))
    throw NotElementaryAbelian("acted-on subgroup is not elementary abelian");

  // Every invariant T > 1 contains the invariant subgroup generated by one of
  // its elements, so it suffices to close each single element.
  for (Elem x : p.members()) {
    if (x == 0u)
      continue;
    std::vector<Elem> orbit{x};
    ElementSet seen(g.order());
    seen.insert(x);
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (Elem s : c.generators()) {
        Elem y = conj_by(g, s, orbit[i]);
        if (!seen.contains(y)) {
          seen.insert(y);
          orbit.push_back(y);
        }
      }
    }
    if (subgroup_generated(g, orbit).order() != p.order())
      return false;
  }
  return true;
}

bool acts_without_fixed_points(FiniteGroup const &g, Subgroup const &c, Subgroup const &p)
{
  require_parent(g, c);
  require_parent(g, p);
  if (!is_elementary_abelian(p))
    throw NotElementaryAbelian("acted-on subgroup is not elementary abelian");
  for (Elem x : p.members()) {
    if (x == 0u)
      continue;
    bool fixed = true;
    for (Elem s : c.generators()) {
      if (conj_by(g, s, x) != x) {
        fixed = false;
        break;
      }
    }
    if (fixed)
      return false;
  }
  return true;
}

Subgroup fixed_subgroup(FiniteGroup const &g, Elem c, Subgroup const &p)
{
  require_parent(g, p);
  std::vector<Elem> fix;
  for (Elem x : p.members()) {
    if (conj_by(g, c, x) == x)
      fix.push_back(x);
  }
  return subgroup_generated(g, fix);
}

std::size_t action_order(FiniteGroup const &g, Elem c, Subgroup const &p)
{
  require_parent(g, p);
  Elem x = c;
  for (std::size_t k = 1;; ++k) {
    if (centralizes(g, x, p))
      return k;
    x = g.mul(x, c);
  }
}

} // namespace oortscan
