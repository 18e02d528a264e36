#pragma once

// Deliberately naive reference implementations used to cross-check the
// library. Nothing here calls the code under test except for element
// multiplication.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "oortscan/finite_group.hpp"

namespace oracle {

using oortscan::Elem;
using oortscan::FiniteGroup;
using Members = std::vector<Elem>;

/// Closure of a generating set by breadth-first right multiplication.
inline Members close(FiniteGroup const &g, Members const &gens)
{
  std::vector<char> seen(g.order(), 0);
  Members out{FiniteGroup::identity()};
  seen[FiniteGroup::identity()] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (auto s : gens) {
      Elem y = g.mul(out[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Every subgroup, found as the fixpoint of pairwise joins starting from the
/// cyclic subgroups.
inline std::set<Members> subgroups(FiniteGroup const &g)
{
  std::set<Members> known;
  for (Elem x = 0; x < g.order(); ++x)
    known.insert(close(g, {x}));

  std::vector<Members> list(known.begin(), known.end());
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Members gens = list[i];
      gens.insert(gens.end(), list[j].begin(), list[j].end());
      Members h = close(g, gens);
      if (known.insert(h).second)
        list.push_back(std::move(h));
    }
  }
  return known;
}

struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Frac normalized() const
  {
    std::int64_t d = std::gcd(num, den);
    return d ? Frac{num / d, den / d} : *this;
  }
  friend Frac operator+(Frac a, Frac b) { return Frac{a.num * b.den + b.num * a.den, a.den * b.den}.normalized(); }
  friend bool operator==(Frac a, Frac b) { return a.num * b.den == b.num * a.den; }
};

/// Upper jumps by walking the lower filtration one index at a time and
/// accumulating the slope 1/(G_0 : G_t) of Herbrand's function.
inline std::vector<std::pair<Frac, std::uint64_t>> upper_jumps(std::vector<std::uint64_t> const &orders)
{
  auto at = [&](std::size_t i) -> std::uint64_t { return i < orders.size() ? orders[i] : 1u; };
  std::vector<std::pair<Frac, std::uint64_t>> out;
  Frac phi{0, 1};
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i > 0)
      phi = phi + Frac{static_cast<std::int64_t>(at(i)), static_cast<std::int64_t>(orders[0])};
    if (at(i) != at(i + 1))
      out.emplace_back(phi, at(i + 1));
  }
  return out;
}

/// Riemann-Hurwitz solved for 2g - 2 with doubles avoided: returns 2g - 2.
inline std::int64_t rh_two_g_minus_two(std::int64_t n, std::int64_t gx,
                                       std::vector<std::pair<std::int64_t, std::int64_t>> const &e_and_d)
{
  std::int64_t t = n * (2 * gx - 2);
  for (auto [e, d] : e_and_d)
    t += (n / e) * d;
  return t;
}

} // namespace oracle
