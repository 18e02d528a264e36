#include <gtest/gtest.h>

#include <numeric>

#include "oortscan/arith.hpp"
#include "oortscan/construct.hpp"
#include "oortscan/error.hpp"
#include "oortscan/group_spec.hpp"
#include "oortscan/structure.hpp"

using namespace oortscan;

namespace {

FiniteGroup fam(char const *s) { return build(parse_family(s)); }

Subgroup subgroup_of_order(FiniteGroup const &g, std::size_t order, bool normal_only = false)
{
  for (auto const &h : all_subgroups(g)) {
    if (h.order() == order && (!normal_only || is_normal(g, h)))
      return h;
  }
  throw std::runtime_error("no subgroup of that order");
}

} // namespace

TEST(Characteristic, Examples)
{
  EXPECT_EQ(center(fam("Q:8")).order(), 2u);
  auto a4 = fam("A4");
  auto d = derived_subgroup(a4);
  EXPECT_EQ(d.order(), 4u);
  EXPECT_TRUE(is_elementary_abelian(d));
  auto d16 = fam("D:16");
  EXPECT_EQ(centralizer(d16, whole_group(d16)), center(d16));
  EXPECT_EQ(normalizer(d16, center(d16)), whole_group(d16));
}

TEST(Characteristic, ForeignSubgroupRejected)
{
  auto other = build_from_spec(parse_group_spec("degree 4\n(0 1 2 3)\n"));
  EXPECT_THROW(centralizer(fam("D:8"), whole_group(other)), NotASubgroup);
}

TEST(Frattini, Examples)
{
  EXPECT_EQ(frattini(fam("C:8")).order(), 4u);
  EXPECT_EQ(frattini(fam("EA:2^2")).order(), 1u);
  auto q8 = fam("Q:8");
  EXPECT_EQ(frattini(q8), center(q8));
}

TEST(Frattini, PGroupCrossCheck)
{
  for (auto const &e : corpus(Profile::Smoke)) {
    auto g = build(e.spec);
    for (std::uint64_t p : {2u, 3u}) {
      if (g.order() > 1u && is_p_group(g, p)) {
        EXPECT_EQ(frattini(g), frattini_p_group(g, p)) << e.spec.str();
      }
    }
  }
}

TEST(Sylow, Examples)
{
  auto a4 = fam("A4");
  auto s = sylow(a4, 2);
  EXPECT_EQ(s.order(), 4u);
  EXPECT_TRUE(is_normal(a4, s));
  EXPECT_EQ(sylow(fam("C:12"), 3).order(), 3u);
  auto s4 = fam("S4");
  EXPECT_EQ(sylow(s4, 2).order(), 8u);
  EXPECT_FALSE(is_normal(s4, sylow(s4, 2)));
  EXPECT_EQ(sylow(fam("C:9"), 2).order(), 1u);
}

TEST(Quotient, Examples)
{
  auto q8 = fam("Q:8");
  EXPECT_EQ(recognize(quotient(q8, center(q8)).model), IsoType::dihedral(4));
  auto c6 = fam("C:6");
  EXPECT_EQ(recognize(quotient(c6, subgroup_of_order(c6, 3)).model), IsoType::cyclic(2));
  auto d16 = fam("D:16");
  EXPECT_EQ(recognize(quotient(d16, center(d16)).model), IsoType::dihedral(8));
  auto s4 = fam("S4");
  EXPECT_THROW(quotient(s4, sylow(s4, 2)), NotNormal);
}

TEST(Quotient, HomomorphismOnAllPairs)
{
  for (auto const *f : {"S4", "SL23", "D:24", "prod(C:4,C:2)", "sd(C:5,4,pow:2)"}) {
    auto g = fam(f);
    for (auto const &n : normal_subgroups(g)) {
      auto q = quotient(g, n);
      EXPECT_EQ(q.model.order() * n.order(), g.order());
      for (Elem a = 0; a < g.order(); ++a) {
        for (Elem b = 0; b < g.order(); ++b)
          ASSERT_EQ(q.projection[g.mul(a, b)], q.model.mul(q.projection[a], q.projection[b])) << f;
      }
      std::vector<char> hit(q.model.order(), 0);
      for (auto x : q.projection)
        hit[x] = 1;
      EXPECT_TRUE(std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; }));
    }
  }
}

TEST(Recognize, Examples)
{
  EXPECT_EQ(recognize(fam("Q:16")), IsoType::quaternion(16));
  auto klein = recognize(fam("EA:2^2"));
  EXPECT_EQ(klein, IsoType::dihedral(4));
  auto al = aliases(klein);
  EXPECT_NE(std::find(al.begin(), al.end(), IsoType::elementary_abelian(2, 2)), al.end());
  EXPECT_EQ(recognize(fam("SL23")), IsoType::sl23());
  EXPECT_EQ(recognize(fam("A4")), IsoType::a4());
  EXPECT_EQ(recognize(fam("S4")), IsoType::s4());
  EXPECT_EQ(recognize(fam("A5")), IsoType::a5());
  EXPECT_EQ(recognize(fam("C:12")), IsoType::cyclic(12));
  EXPECT_EQ(recognize(fam("EA:3^3")), IsoType::elementary_abelian(3, 3));
  EXPECT_EQ(recognize(fam("prod(C:4,C:2)")).kind, IsoType::Kind::Other);
}

TEST(Recognize, Order16TagsDiffer)
{
  auto d = recognize(fam("D:16"));
  auto sd = recognize(fam("SD:16"));
  auto q = recognize(fam("Q:16"));
  EXPECT_EQ(d, IsoType::dihedral(16));
  EXPECT_EQ(sd, IsoType::semidihedral(16));
  EXPECT_EQ(q, IsoType::quaternion(16));
}

TEST(Recognize, TagStrings)
{
  EXPECT_EQ(IsoType::cyclic(12).str(), "C12");
  EXPECT_EQ(IsoType::dihedral(8).str(), "D8");
  EXPECT_EQ(IsoType::semidihedral(16).str(), "SD16");
  EXPECT_EQ(IsoType::quaternion(8).str(), "Q8");
  EXPECT_EQ(IsoType::elementary_abelian(3, 2).str(), "C3^2");
  EXPECT_EQ(IsoType::sl23().str(), "SL(2,3)");
}

TEST(CyclicByP, Examples)
{
  auto a4 = cyclic_by_p_decompose(fam("A4"), 2);
  ASSERT_TRUE(a4);
  EXPECT_EQ(a4->P.order(), 4u);
  EXPECT_EQ(a4->m, 3u);
  EXPECT_EQ(a4->action_order, 3u);

  auto d18g = fam("D:18");
  auto d18 = cyclic_by_p_decompose(d18g, 3);
  ASSERT_TRUE(d18);
  EXPECT_EQ(d18->P.order(), 9u);
  EXPECT_TRUE(is_cyclic(d18->P));
  EXPECT_EQ(d18->m, 2u);
  EXPECT_EQ(d18->action_order, 2u);
  EXPECT_TRUE(acts_by_inversion(d18g, d18->c_gen, d18->P));

  EXPECT_FALSE(cyclic_by_p_decompose(fam("S4"), 2));
}

TEST(CyclicByP, EquivalentToNormalSylowWithCyclicQuotient)
{
  for (auto const &e : corpus(Profile::Smoke)) {
    auto g = build(e.spec);
    for (auto p : e.expectations) {
      auto s = sylow(g, p.p);
      bool expect = is_normal(g, s) && is_cyclic(quotient(g, s).model);
      auto d = cyclic_by_p_decompose(g, p.p);
      ASSERT_EQ(d.has_value(), expect) << e.spec.str() << " p=" << p.p;
      if (d) {
        EXPECT_EQ(d->P.order() * d->m, g.order());
        EXPECT_EQ(intersection(d->P, d->C).order(), 1u);
        EXPECT_EQ(std::gcd<std::uint64_t>(d->m, p.p), 1u);
      }
    }
  }
}

TEST(BurnsideBasis, CyclicIffFrattiniQuotientCyclic)
{
  for (auto const &e : corpus(Profile::Smoke)) {
    auto g = build(e.spec);
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
      if (g.order() > 1u && is_p_group(g, p)) {
        bool c = is_cyclic(quotient(g, frattini(g)).model);
        EXPECT_EQ(is_cyclic(g), c) << e.spec.str();
      }
    }
  }
}

TEST(Actions, InversionOnC3Squared)
{
  auto g = fam("sd(EA:3^2,2,inv)");
  auto d = cyclic_by_p_decompose(g, 3);
  ASSERT_TRUE(d);
  EXPECT_TRUE(acts_by_inversion(g, d->c_gen, d->P));
  EXPECT_FALSE(acts_irreducibly(g, d->C, d->P));
  EXPECT_TRUE(acts_faithfully(g, d->C, d->P));
}

TEST(Actions, C3OnKleinInA4)
{
  auto g = fam("A4");
  auto d = cyclic_by_p_decompose(g, 2);
  ASSERT_TRUE(d);
  EXPECT_TRUE(acts_faithfully(g, d->C, d->P));
  EXPECT_TRUE(acts_irreducibly(g, d->C, d->P));
  EXPECT_TRUE(acts_without_fixed_points(g, d->C, d->P));
  EXPECT_FALSE(acts_trivially(g, d->C, d->P));
  EXPECT_EQ(fixed_subgroup(g, d->c_gen, d->P).order(), 1u);
}

TEST(Actions, TrivialAction)
{
  auto g = fam("prod(EA:2^2,C:3)");
  auto d = cyclic_by_p_decompose(g, 2);
  ASSERT_TRUE(d);
  EXPECT_TRUE(acts_trivially(g, d->C, d->P));
  EXPECT_FALSE(acts_faithfully(g, d->C, d->P));
  EXPECT_EQ(action_order(g, d->c_gen, d->P), 1u);
}

TEST(Actions, IrreducibleNeedsElementaryAbelian)
{
  auto g = fam("C:4");
  auto w = whole_group(g);
  EXPECT_THROW(acts_irreducibly(g, trivial_subgroup(g), w), NotElementaryAbelian);
}

TEST(MinimalNormal, Examples)
{
  auto a4 = minimal_normal_subgroups(fam("A4"));
  ASSERT_EQ(a4.size(), 1u);
  EXPECT_EQ(a4[0].order(), 4u);
  auto v = minimal_normal_subgroups(fam("EA:2^2"));
  EXPECT_EQ(v.size(), 3u);
  auto a5 = minimal_normal_subgroups(fam("A5"));
  ASSERT_EQ(a5.size(), 1u);
  EXPECT_EQ(a5[0].order(), 60u);
}
