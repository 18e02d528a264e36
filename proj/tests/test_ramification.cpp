#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "oortscan/error.hpp"
#include "oortscan/ramification.hpp"

#include "support/oracles.hpp"

using namespace oortscan;

namespace {

RamificationFiltration filt(std::vector<std::uint64_t> o, std::uint64_t p) { return {std::move(o), p}; }

std::string value(ScenarioReport const &r, std::string const &key)
{
  for (auto const &[k, v] : r.values) {
    if (k == key)
      return v;
  }
  return "<missing " + key + ">";
}

/// Every valid filtration with orders[0] <= max_order and length <= max_len.
void for_each_filtration(std::uint64_t p, std::uint64_t max_order, std::size_t max_len,
                         std::function<void(std::vector<std::uint64_t> const &)> const &fn)
{
  std::vector<std::uint64_t> cur;
  std::function<void()> extend = [&]() {
    fn(cur);
    if (cur.size() == max_len)
      return;
    std::uint64_t last = cur.back();
    for (std::uint64_t d = 2; d <= last; ++d) {
      if (last % d != 0u)
        continue;
      if (cur.size() == 1u) {
        // orders[1] must be a power of p with prime-to-p index
        if (!is_power_of(d, p) || (last / d) % p == 0u)
          continue;
      }
      cur.push_back(d);
      extend();
      cur.pop_back();
    }
  };
  for (std::uint64_t e = 2; e <= max_order; ++e) {
    cur = {e};
    extend();
  }
}

} // namespace

TEST(Filtration, Validation)
{
  EXPECT_NO_THROW(filt({8, 8, 2, 2, 2, 2}, 2));
  EXPECT_NO_THROW(filt({6, 3, 3}, 3));
  EXPECT_NO_THROW(filt({12}, 3));
  EXPECT_THROW(filt({}, 2), BadParameters);
  EXPECT_THROW(filt({8, 4, 8}, 2), BadParameters);
  EXPECT_THROW(filt({8, 8, 1}, 2), BadParameters);
  EXPECT_THROW(filt({6, 6}, 3), BadParameters);   // 6 is not a power of 3
  EXPECT_THROW(filt({9, 3}, 3), BadParameters);   // index 3 is not prime to 3
  EXPECT_THROW(filt({8, 6}, 2), BadParameters);   // 6 does not divide 8
  EXPECT_EQ(filt({8, 8, 2}, 2).str(), "[8,8,2]");
  EXPECT_EQ(filt({4, 4}, 2).at(5), 1u);
}

TEST(ArtinSchreier, Examples)
{
  EXPECT_EQ(artin_schreier_genus(3, 4), 3);
  EXPECT_EQ(artin_schreier_genus(5, 6), 10);
  EXPECT_EQ(artin_schreier_genus(7, 8), 21);
  EXPECT_EQ(artin_schreier_genus(3, 5), 4);
  EXPECT_EQ(artin_schreier_genus(5, 3), 4);
  EXPECT_EQ(artin_schreier_genus(3, 7), 6);
  EXPECT_EQ(artin_schreier_genus(2, 5), 2);
  EXPECT_EQ(artin_schreier_genus(3, 1), 0);
  EXPECT_THROW(artin_schreier_genus(3, 6), BadDegree);
  EXPECT_THROW(artin_schreier_genus(3, 0), BadDegree);
}

TEST(ArtinSchreier, AgreesWithWildRiemannHurwitz)
{
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (std::uint64_t p : {3u, 5u, 7u}) {
    for (std::uint64_t m : {2u, 4u, 5u, 7u, 8u}) {
      if (m % p != 0u)
        pairs.emplace_back(p, m);
    }
  }
  ASSERT_EQ(pairs.size(), 13u);
  for (auto [p, m] : pairs) {
    CoverSpec c;
    c.group_order = p;
    c.characteristic = p;
    c.branch.push_back({p, filt(std::vector<std::uint64_t>(m + 1u, p), p)});
    EXPECT_EQ(wild_rh_genus(c), artin_schreier_genus(p, m)) << p << "," << m;
  }
}

TEST(RiemannHurwitz, Examples)
{
  // C2 with six branch points: hyperelliptic genus 2
  CoverSpec c;
  c.group_order = 2;
  for (int i = 0; i < 6; ++i)
    c.branch.push_back({2, std::nullopt});
  EXPECT_EQ(tame_rh_genus(c), 2);

  // Klein four over the line with three points of order 2
  CoverSpec k;
  k.group_order = 4;
  for (int i = 0; i < 3; ++i)
    k.branch.push_back({2, std::nullopt});
  EXPECT_EQ(tame_rh_genus(k), 0);

  // odd total: 2g - 2 = 2(-2) + 3 is not even
  CoverSpec bad;
  bad.group_order = 2;
  for (int i = 0; i < 3; ++i)
    bad.branch.push_back({2, std::nullopt});
  EXPECT_THROW(tame_rh_genus(bad), InconsistentCover);

  // negative genus
  CoverSpec neg;
  neg.group_order = 3;
  EXPECT_THROW(tame_rh_genus(neg), InconsistentCover);

  CoverSpec wild;
  wild.group_order = 2;
  wild.characteristic = 2;
  wild.branch.push_back({2, std::nullopt});
  EXPECT_THROW(wild_rh_genus(wild), BadParameters);
  EXPECT_THROW(tame_rh_genus(wild), BadParameters);
}

TEST(RiemannHurwitz, NormalSubgroupCoverEvenness)
{
  // |N| = 2, g_Z = 0, one totally ramified point with a = 0
  CoverSpec c;
  c.group_order = 2;
  c.characteristic = 2;
  c.branch.push_back({2, filt({2, 2}, 2)});
  EXPECT_EQ(wild_rh_genus(c), 0);
}

TEST(RiemannHurwitz, RequiredDifferentForGenusTwoOctic)
{
  // 2*2 - 2 = 8*(-2) + d
  BigInt d = 2 * 2 - 2 - 8 * (0 - 2);
  EXPECT_EQ(d, 18);
  EXPECT_EQ(different_exponent(filt({8, 8, 2, 2, 2, 2}, 2)), 18);
  CoverSpec c;
  c.group_order = 8;
  c.characteristic = 2;
  c.branch.push_back({8, filt({8, 8, 2, 2, 2, 2}, 2)});
  EXPECT_EQ(wild_rh_genus(c), 2);
}

TEST(RiemannHurwitz, WildMatchesTameOnDepthZeroRandom)
{
  std::mt19937_64 rng(20261016);
  int checked = 0;
  for (int attempt = 0; checked < 50 && attempt < 10000; ++attempt) {
    std::uint64_t n = 2 + rng() % 60;
    std::vector<std::uint64_t> divs;
    for (std::uint64_t d = 2; d <= n; ++d) {
      if (n % d == 0u)
        divs.push_back(d);
    }
    CoverSpec tame;
    tame.group_order = n;
    tame.base_genus = rng() % 3;
    std::size_t k = rng() % 6;
    for (std::size_t i = 0; i < k; ++i)
      tame.branch.push_back({divs[rng() % divs.size()], std::nullopt});

    std::vector<std::pair<std::int64_t, std::int64_t>> ed;
    for (auto const &bp : tame.branch)
      ed.emplace_back(bp.inertia_order, bp.inertia_order - 1);
    std::int64_t twog2 = oracle::rh_two_g_minus_two(n, tame.base_genus, ed);
    if (twog2 < -2 || twog2 % 2 != 0) {
      EXPECT_THROW(tame_rh_genus(tame), InconsistentCover);
      continue;
    }

    CoverSpec wild = tame;
    wild.characteristic = 0;
    for (auto &bp : wild.branch)
      bp.filtration = filt({bp.inertia_order}, 2);
    BigInt g = tame_rh_genus(tame);
    EXPECT_EQ(g, twog2 / 2 + 1);
    EXPECT_EQ(wild_rh_genus(wild), g);
    ++checked;
  }
  EXPECT_EQ(checked, 50);
}

TEST(RiemannHurwitz, TameDifferent)
{
  for (std::uint64_t e = 2; e < 30; ++e)
    EXPECT_EQ(different_exponent(filt({e}, 2)), e - 1u);
}

TEST(Herbrand, Examples)
{
  auto a = lower_to_upper(filt({4, 4}, 2));
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].u, Rational(1));
  EXPECT_EQ(a[0].order_after, 1u);

  auto b = lower_to_upper(filt({3}, 3));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].u, Rational(0));

  // 1 + 4 * (2/8) = 2
  auto c = lower_to_upper(filt({8, 8, 2, 2, 2, 2}, 2));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].u, Rational(1));
  EXPECT_EQ(c[0].order_after, 2u);
  EXPECT_EQ(c[1].u, Rational(2));
  EXPECT_EQ(c[1].order_after, 1u);

  auto d = lower_to_upper(filt({8, 8, 4, 2}, 2));
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d[1].u, Rational(3, 2));

  EXPECT_EQ(lower_jumps(filt({8, 8, 2, 2, 2, 2}, 2)), (std::vector<std::uint64_t>{1, 5}));
  EXPECT_EQ(herbrand_phi(filt({6, 3, 3}, 3), 2), Rational(1));
}

TEST(Herbrand, UpperToLowerRejectsOffGrid)
{
  std::vector<UpperJump> j{{Rational(1, 3), 1}};
  EXPECT_THROW(upper_to_lower(j, 4, 2), BadParameters);
}

TEST(Herbrand, ExhaustiveRoundTripAndOracle)
{
  std::size_t count = 0;
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    for_each_filtration(p, 16, 12, [&](std::vector<std::uint64_t> const &o) {
      RamificationFiltration f(o, p);
      auto up = lower_to_upper(f);
      ASSERT_EQ(upper_to_lower(up, o.front(), p), f) << f.str();

      auto want = oracle::upper_jumps(o);
      ASSERT_EQ(up.size(), want.size()) << f.str();
      for (std::size_t i = 0; i < up.size(); ++i) {
        oracle::Frac w = want[i].first;
        EXPECT_EQ(up[i].u, Rational(w.num, w.den)) << f.str();
        EXPECT_EQ(up[i].order_after, want[i].second) << f.str();
      }
      ++count;
    });
  }
  EXPECT_GT(count, 1000u);
}

TEST(HasseArf, Examples)
{
  EXPECT_TRUE(hasse_arf_check(filt({8, 8, 2, 2, 2, 2}, 2), 2));
  EXPECT_FALSE(hasse_arf_check(filt({8, 8, 2, 2}, 2), 2));
  EXPECT_TRUE(hasse_arf_check(filt({5, 5}, 5), 5));
  EXPECT_THROW(hasse_arf_check(filt({8, 8}, 2), 3), BadOrder);
  EXPECT_TRUE(hasse_arf_all_levels(filt({8, 8, 2, 2, 2, 2}, 2)));
  EXPECT_FALSE(hasse_arf_all_levels(filt({8, 8, 4, 2}, 2)));
}

TEST(HasseArf, EquivalentToIntegralUpperJumps)
{
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    for_each_filtration(p, 16, 12, [&](std::vector<std::uint64_t> const &o) {
      RamificationFiltration f(o, p);
      ASSERT_EQ(hasse_arf_all_levels(f), upper_jumps_integral(f)) << f.str();
    });
  }
}

TEST(Parity, A4Extensions)
{
  auto two = char0_parity_obstruction_A4ext(2);
  EXPECT_EQ(two.group_order, 24u);
  EXPECT_EQ(two.genus_parity, "odd");
  for (auto r : two.residues)
    EXPECT_EQ(r, 0u);
  auto four = char0_parity_obstruction_A4ext(4);
  EXPECT_EQ(four.group_order, 48u);
  EXPECT_EQ(four.genus_parity, "odd");
  EXPECT_THROW(char0_parity_obstruction_A4ext(3), BadParameters);
}

TEST(Parity, OddPrimeEquation)
{
  EXPECT_TRUE(odd_p_parity_equation(3));
  EXPECT_TRUE(odd_p_parity_equation(5));
  EXPECT_TRUE(odd_p_parity_equation(101, 50));
  EXPECT_THROW(odd_p_parity_equation(2), BadParameters);
  EXPECT_THROW(odd_p_parity_equation(9), BadParameters);
}

TEST(LiftBound, Examples)
{
  auto a = dihedral_lift_bound(3, 5);
  EXPECT_EQ(a.char0_lower_bound, 8);
  EXPECT_EQ(a.charp_genus, 4);
  EXPECT_TRUE(a.contradiction);
  auto b = dihedral_lift_bound(5, 3);
  EXPECT_EQ(b.char0_lower_bound, 8);
  EXPECT_EQ(b.charp_genus, 4);
  auto c = dihedral_lift_bound(3, 3);
  EXPECT_EQ(c.char0_lower_bound, 4);
  EXPECT_EQ(c.charp_genus, 2);
  EXPECT_TRUE(c.contradiction);
  EXPECT_THROW(dihedral_lift_bound(2, 3), BadParameters);
  EXPECT_THROW(dihedral_lift_bound(3, 4), BadParameters);
}

TEST(BranchPullback, Examples)
{
  EXPECT_EQ(branch_pullback_count(4, {4, 1}), 5u);
  EXPECT_EQ(branch_pullback_count(4, {1}), 1u);
  EXPECT_EQ(branch_pullback_count(4, {4, 4}), 8u);
  EXPECT_THROW(branch_pullback_count(4, {3}), BadParameters);
  EXPECT_TRUE(char0_even_required(24, {2, 3, 4, 6}));
  EXPECT_FALSE(char0_even_required(6, {2, 3}));
}

TEST(Scenario, AllReportObstruction)
{
  for (auto const &name : scenario_names()) {
    auto r = scenario(name);
    EXPECT_TRUE(r.obstruction) << name;
    EXPECT_FALSE(r.values.empty()) << name;
  }
  EXPECT_EQ(scenario_names().size(), 5u);
  EXPECT_THROW(scenario("nope"), UnknownScenario);
}

TEST(Scenario, IntermediateValues)
{
  ScenarioParams p3;
  p3.p = 3;
  auto lp = scenario("odd_type4_lp", p3);
  EXPECT_EQ(value(lp, "charp.genus_Y"), "3");
  EXPECT_EQ(value(lp, "char0.equation_unsolvable"), "true");

  auto t56 = scenario("even_type56");
  EXPECT_EQ(value(t56, "charp.branch_count"), "5");

  auto t7 = scenario("even_type7");
  EXPECT_EQ(value(t7, "charp.required_different"), "18");
  EXPECT_EQ(value(t7, "charp.genus_X"), "2");

  auto t45 = scenario("odd_type45");
  EXPECT_EQ(value(t45, "type4.char0.genus_lower_bound"), "8");
  EXPECT_EQ(value(t45, "type4.charp.genus_W"), "4");
}

TEST(CoverSpecText, ParseAndFormat)
{
  std::string text =
      "# octic cover\n"
      "order 8\n"
      "base_genus 0\n"
      "char 2\n"
      "point e=8 filtration=8,8,2,2,2,2\n";
  auto c = parse_cover_spec(text);
  EXPECT_EQ(c.group_order, 8u);
  EXPECT_EQ(c.characteristic, 2u);
  ASSERT_EQ(c.branch.size(), 1u);
  EXPECT_EQ(wild_rh_genus(c), 2);
  auto again = parse_cover_spec(format_cover_spec(c));
  EXPECT_EQ(again.group_order, c.group_order);
  ASSERT_EQ(again.branch.size(), 1u);
  EXPECT_EQ(again.branch[0].filtration, c.branch[0].filtration);

  auto k = parse_cover_spec("order 2\npoint e=2 count=6\n");
  EXPECT_EQ(k.branch.size(), 6u);
  EXPECT_EQ(tame_rh_genus(k), 2);
}

TEST(CoverSpecText, Errors)
{
  try {
    parse_cover_spec("order 8\npoint e=x\n");
    FAIL() << "expected ParseError";
  } catch (ParseError const &e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_cover_spec("point e=2\n"), ParseError);
  EXPECT_THROW(parse_cover_spec("order 4\nwhatever 3\n"), ParseError);
  EXPECT_THROW(parse_cover_spec("order 4\npoint e=2 colour=red\n"), ParseError);
}
