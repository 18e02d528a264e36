#include "oortscan/oort.hpp"

#include <algorithm>
#include <unordered_set>

#include "oortscan/arith.hpp"
#include "oortscan/error.hpp"

namespace oortscan {

char const *status_name(Status s)
{
  switch (s) {
  case Status::Pass: return "pass";
  case Status::Fail: return "fail";
  case Status::NotApplicable: return "n/a";
  }
  return "n/a";
}

// ------------------------------------------------------------------ shapes

namespace {

bool dihedral_2p_power(IsoType const &shape, std::uint64_t p)
{
  return shape.is(IsoType::Kind::Dihedral) && shape.order % 2u == 0u &&
         shape.order >= 2u * p && is_power_of(shape.order / 2u, p);
}

bool dihedral_2_group(IsoType const &shape)
{
  return shape.is(IsoType::Kind::Dihedral) && is_power_of(shape.order, 2u);
}

std::string not_allowed(IsoType const &shape, std::uint64_t p)
{
  return shape.str() + " is not an allowed shape for p = " + std::to_string(p);
}

} // namespace

ShapeResult local_shape_of(IsoType const &shape, std::uint64_t p)
{
  ShapeResult r;
  r.shape = shape;
  if (shape.is(IsoType::Kind::Cyclic)) {
    r.pass = true;
    r.reason = "cyclic";
    return r;
  }
  if (p != 2u) {
    if (dihedral_2p_power(shape, p)) {
      r.pass = true;
      r.reason = "dihedral of order 2p^n";
    } else {
      r.reason = not_allowed(shape, p);
    }
    return r;
  }

  if (dihedral_2_group(shape)) {
    r.pass = true;
    r.reason = "dihedral 2-group";
  } else if (shape.is(IsoType::Kind::A4)) {
    r.pass = true;
    r.reason = "A4";
  } else if (shape.is(IsoType::Kind::SemiDihedral) && shape.order >= 16u) {
    r.pass = true;
    r.reason = "semidihedral of order >= 16";
    r.warnings.push_back("semidihedral groups were later shown not to be local Oort groups");
  } else if (shape.is(IsoType::Kind::GeneralizedQuaternion) && shape.order >= 16u) {
    r.pass = true;
    r.reason = "generalized quaternion of order >= 16";
  } else if (shape.is(IsoType::Kind::GeneralizedQuaternion)) {
    r.reason = shape.str() + " has order below 16";
  } else {
    r.reason = not_allowed(shape, p);
  }
  return r;
}

ShapeResult global_shape_of(IsoType const &shape, std::uint64_t p)
{
  if (p != 2u)
    return local_shape_of(shape, p);

  ShapeResult r;
  r.shape = shape;
  if (shape.is(IsoType::Kind::Cyclic)) {
    r.pass = true;
    r.reason = "cyclic";
  } else if (dihedral_2_group(shape)) {
    r.pass = true;
    r.reason = "dihedral 2-group";
  } else if (shape.is(IsoType::Kind::A4)) {
    r.pass = true;
    r.reason = "A4";
  } else if (shape.is(IsoType::Kind::SemiDihedral) ||
             shape.is(IsoType::Kind::GeneralizedQuaternion)) {
    r.reason = shape.str() + " contains Q8";
  } else {
    r.reason = not_allowed(shape, p);
  }
  return r;
}

ShapeResult allowed_local_shape(FiniteGroup const &g, std::uint64_t p)
{
  if (!cyclic_by_p_decompose(g, p))
    throw NotCyclicByP("group of order " + std::to_string(g.order()) +
                       " is not cyclic-by-" + std::to_string(p));
  return local_shape_of(recognize(g), p);
}

ShapeResult allowed_global_shape_cyclic_by_p(FiniteGroup const &g, std::uint64_t p)
{
  if (!cyclic_by_p_decompose(g, p))
    throw NotCyclicByP("group of order " + std::to_string(g.order()) +
                       " is not cyclic-by-" + std::to_string(p));
  return global_shape_of(recognize(g), p);
}

bool embeds_in_pgl2_char0(IsoType const &shape)
{
  switch (shape.kind) {
  case IsoType::Kind::Cyclic:
  case IsoType::Kind::Dihedral:
  case IsoType::Kind::A4:
  case IsoType::Kind::S4:
  case IsoType::Kind::A5:
    return true;
  default:
    return false;
  }
}

bool embeds_in_pgl2_char0(FiniteGroup const &g)
{
  return embeds_in_pgl2_char0(recognize(g));
}

// --------------------------------------------------------- oort_candidate

namespace {

CandidateResult candidate_over(std::vector<Subgroup> const &subs, std::uint64_t p)
{
  CandidateResult res;
  for (auto const &h : subs) {
    ++res.subgroups_checked;
    FiniteGroup hg = h.as_group();
    if (!cyclic_by_p_decompose(hg, p))
      continue;
    ++res.cyclic_by_p_count;
    IsoType shape = recognize(hg);
    if (!global_shape_of(shape, p).pass) {
      res.pass = false;
      res.witness = h;
      res.witness_shape = shape;
      return res;
    }
  }
  return res;
}

} // namespace

CandidateResult oort_candidate(FiniteGroup const &g, std::uint64_t p, Limits const &limits)
{
  return candidate_over(all_subgroups(g, limits), p);
}

// ---------------------------------------------------------- forbidden types

namespace {

bool is_odd_prime(std::uint64_t n) { return n > 2u && is_prime(n); }

struct PInfo {
  std::size_t order = 1u;
  bool elementary = false;
  unsigned rank = 0u;
  bool abelian = false;
  std::size_t exponent = 1u;
  std::size_t involutions = 0u;
};

PInfo describe(Subgroup const &p, std::uint64_t prime)
{
  PInfo info;
  info.order = p.order();
  info.elementary = is_elementary_abelian(p);
  if (info.elementary)
    info.rank = valuation(info.order, prime);
  FiniteGroup pg = p.as_group();
  info.abelian = pg.is_abelian();
  info.exponent = exponent(pg);
  info.involutions = involution_count(pg);
  return info;
}

} // namespace

std::optional<ForbiddenMatch> detect_forbidden_type(FiniteGroup const &q, std::uint64_t p)
{
  auto dec = cyclic_by_p_decompose(q, p);
  if (!dec)
    return std::nullopt;

  PInfo const P = describe(dec->P, p);
  std::size_t const m = dec->m;
  std::size_t const a = dec->action_order;
  Elem const c = dec->c_gen;

  auto hit = [&](unsigned t, Details extra = {}) {
    ForbiddenMatch fm{t, {{"m", std::to_string(m)},
                          {"P_order", std::to_string(P.order)},
                          {"action_order", std::to_string(a)}}};
    fm.details.insert(fm.details.end(), extra.begin(), extra.end());
    return fm;
  };

  if (p != 2u) {
    if (m == 1u && P.elementary && P.rank == 2u)
      return hit(1u);
    if (P.elementary && m >= 3u && a == m && acts_irreducibly(q, dec->C, dec->P))
      return hit(2u, {{"rank", std::to_string(P.rank)}});
    if (P.elementary && P.rank == 2u && m == 2u && acts_by_inversion(q, c, dec->P))
      return hit(3u);
    if (P.order == p && m % 2u == 0u && is_odd_prime(m / 2u) &&
        acts_by_inversion(q, c, dec->P))
      return hit(4u, {{"ell", std::to_string(m / 2u)}});
    if (P.elementary && P.rank == 2u && m == 2u && a == 2u &&
        fixed_subgroup(q, c, dec->P).order() == p)
      return hit(4u, {{"ell", std::to_string(p)}});
    if (P.order == p && m == 4u && a == 2u)
      return hit(5u);
    return std::nullopt;
  }

  if (P.elementary && P.order >= 8u && m >= 5u && acts_irreducibly(q, dec->C, dec->P))
    return hit(1u, {{"rank", std::to_string(P.rank)}});
  if (P.elementary && P.rank == 4u && m == 3u &&
      acts_without_fixed_points(q, dec->C, dec->P))
    return hit(2u);
  if (P.order == 16u && P.abelian && P.exponent == 4u && P.involutions == 3u && m == 3u &&
      a > 1u)
    return hit(3u);
  if (P.elementary && P.rank == 3u && (m == 1u || (m == 3u && a == 3u)))
    return hit(4u);
  if (P.elementary && P.rank == 2u && is_odd_prime(m) && a == 1u)
    return hit(5u, {{"ell", std::to_string(m)}});
  if (P.elementary && P.rank == 2u && m % 3u == 0u && is_odd_prime(m / 3u) && a > 1u)
    return hit(6u, {{"ell", std::to_string(m / 3u)}});
  if (q.order() == 8u && P.abelian && P.exponent == 4u && !is_cyclic(q))
    return hit(7u);
  return std::nullopt;
}

std::vector<ForbiddenTypeHit> forbidden_quotient_scan(FiniteGroup const &g, std::uint64_t p,
                                                      Limits const &limits)
{
  std::vector<ForbiddenTypeHit> hits;
  for (auto const &n : normal_subgroups(g, limits)) {
    QuotientGroup q = quotient(g, n);
    if (auto m = detect_forbidden_type(q.model, p))
      hits.push_back(ForbiddenTypeHit{p, m->type_index, n, q.model.order(), m->details});
  }
  std::stable_sort(hits.begin(), hits.end(), [](auto const &a, auto const &b) {
    if (a.quotient_order != b.quotient_order)
      return a.quotient_order < b.quotient_order;
    return a.type_index < b.type_index;
  });
  return hits;
}

// ------------------------------------------------------ corollary checks

namespace {

std::string describe_subgroup(Subgroup const &h)
{
  std::string s = "order " + std::to_string(h.order()) + " <";
  auto const &g = h.parent();
  for (std::size_t i = 0; i < h.generators().size(); ++i)
    s += (i ? ", " : "") + g.element(h.generators()[i]).str();
  return s + ">";
}

std::string describe_element(FiniteGroup const &g, Elem x)
{
  return g.element(x).str() + " of order " + std::to_string(g.order_of(x));
}

bool subgroup_abelian(FiniteGroup const &g, Subgroup const &h)
{
  for (Elem a : h.generators()) {
    for (Elem b : h.generators()) {
      if (g.mul(a, b) != g.mul(b, a))
        return false;
    }
  }
  return true;
}

std::vector<Subgroup> all_sylows(FiniteGroup const &g, std::uint64_t p)
{
  Subgroup s = sylow(g, p);
  std::vector<Subgroup> res;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (Elem x = 0; x < g.order(); ++x) {
    Subgroup c = conjugate(g, s, x);
    if (seen.insert(c.member_set()).second)
      res.push_back(std::move(c));
  }
  return res;
}

CorollaryCheck check_sylow_cyclic(FiniteGroup const &g, std::uint64_t p)
{
  CorollaryCheck c{"sylow_cyclic", Status::Pass, {}};
  Subgroup s = sylow(g, p);
  if (!is_cyclic(s)) {
    c.status = Status::Fail;
    c.detail = "Sylow " + std::to_string(p) + "-subgroup " + describe_subgroup(s) +
               " is not cyclic";
  }
  return c;
}

CorollaryCheck check_normalizer_inversion(FiniteGroup const &g, std::uint64_t p,
                                          std::vector<Subgroup> const &subs)
{
  CorollaryCheck c{"normalizer_inversion", Status::Pass, {}};
  std::vector<Subgroup> sylows;
  auto fail = [&](std::string msg) {
    c.status = Status::Fail;
    c.detail = std::move(msg);
    return c;
  };

  for (auto const &P : subs) {
    if (P.order() == 1u || !is_power_of(P.order(), p))
      continue;
    Subgroup n = normalizer(g, P);
    Subgroup z = centralizer(g, P);
    if (n.order() == z.order())
      continue;

    for (Elem x : n.members()) {
      if (z.contains(x))
        continue;
      std::string where = " (P " + describe_subgroup(P) + ", g " + describe_element(g, x) + ")";
      if (g.order_of(x) != 2u)
        return fail("g normalizes but does not centralize P and is not an involution" + where);
      if (!acts_by_inversion(g, x, P))
        return fail("g does not invert P" + where);
      if (!acts_by_inversion(g, x, z))
        return fail("g does not invert C_G(P)" + where);
    }

    if (!subgroup_abelian(g, z))
      return fail("C_G(P) is not abelian (P " + describe_subgroup(P) + ")");
    if (sylows.empty())
      sylows = all_sylows(g, p);
    for (auto const &s : sylows) {
      if (P.member_set().is_subset_of(s.member_set()) && !(centralizer(g, s) == z))
        return fail("C_G(S) differs from C_G(P) for a Sylow S containing P (P " +
                    describe_subgroup(P) + ", S " + describe_subgroup(s) + ")");
    }
  }
  return c;
}

CorollaryCheck check_sylow2(FiniteGroup const &g)
{
  CorollaryCheck c{"sylow2_cyclic_or_dihedral", Status::Pass, {}};
  Subgroup s = sylow(g, 2u);
  IsoType t = recognize(s.as_group());
  if (!t.is(IsoType::Kind::Cyclic) && !t.is(IsoType::Kind::Dihedral)) {
    c.status = Status::Fail;
    c.detail = "Sylow 2-subgroup " + describe_subgroup(s) + " is " + t.str();
  }
  return c;
}

CorollaryCheck check_odd_normalizer(FiniteGroup const &g, std::vector<Subgroup> const &subs)
{
  CorollaryCheck c{"odd_normalizer_order3", Status::Pass, {}};
  auto fail = [&](std::string msg) {
    c.status = Status::Fail;
    c.detail = std::move(msg);
    return c;
  };

  for (auto const &P : subs) {
    if (P.order() == 1u || !is_power_of(P.order(), 2u))
      continue;
    Subgroup n = normalizer(g, P);
    Subgroup z = centralizer(g, P);
    if (n.order() == z.order())
      continue;

    std::optional<Subgroup> phi;
    for (Elem x : n.members()) {
      if (z.contains(x) || g.order_of(x) % 2u == 0u)
        continue;
      std::string where = " (P " + describe_subgroup(P) + ", g " + describe_element(g, x) + ")";
      if (g.order_of(x) != 3u)
        return fail("odd-order g normalizing P does not have order 3" + where);
      if (!phi) {
        // For 2-groups the squares generate the Frattini subgroup.
        std::vector<Elem> squares;
        for (Elem y : P.members())
          squares.push_back(g.mul(y, y));
        phi = subgroup_generated(g, squares);
      }
      if (P.order() != 4u * phi->order())
        return fail("P/Phi(P) is not the Klein four group" + where);
      bool moves = false;
      for (Elem y : P.generators()) {
        Elem moved = g.mul(g.mul(g.mul(x, y), g.inv(x)), g.inv(y));
        if (!phi->contains(moved)) {
          moves = true;
          break;
        }
      }
      if (!moves)
        return fail("g acts trivially on P/Phi(P)" + where);
    }
  }
  return c;
}

std::vector<CorollaryCheck> corollaries_over(FiniteGroup const &g, std::uint64_t p,
                                             std::vector<Subgroup> const &subs)
{
  std::vector<CorollaryCheck> res;
  if (p != 2u) {
    res.push_back(check_sylow_cyclic(g, p));
    res.push_back(check_normalizer_inversion(g, p, subs));
    res.push_back({"sylow2_cyclic_or_dihedral", Status::NotApplicable, "p is odd"});
    res.push_back({"odd_normalizer_order3", Status::NotApplicable, "p is odd"});
  } else {
    res.push_back({"sylow_cyclic", Status::NotApplicable, "p = 2"});
    res.push_back({"normalizer_inversion", Status::NotApplicable, "p = 2"});
    res.push_back(check_sylow2(g));
    res.push_back(check_odd_normalizer(g, subs));
  }
  return res;
}

} // namespace

std::vector<CorollaryCheck> corollary_checks(FiniteGroup const &g, std::uint64_t p,
                                             Limits const &limits)
{
  return corollaries_over(g, p, all_subgroups(g, limits));
}

// ---------------------------------------------------------------- classify

Verdict classify(FiniteGroup const &g, std::uint64_t p, std::string group_id,
                 Limits const &limits)
{
  if (!is_prime(p))
    throw BadParameters("p must be prime, got " + std::to_string(p));

  Verdict v;
  v.group_id = std::move(group_id);
  v.p = p;
  v.order = g.order();
  v.shape = recognize(g);
  v.shape_aliases = aliases(v.shape);

  if (auto dec = cyclic_by_p_decompose(g, p)) {
    v.cyclic_by_p = true;
    v.sylow_order = dec->P.order();
    v.complement_order = dec->m;
    v.action_order = dec->action_order;
  }

  v.forbidden_quotients = forbidden_quotient_scan(g, p, limits);

  if (v.cyclic_by_p) {
    ShapeResult ls = local_shape_of(v.shape, p);
    v.local_warnings = ls.warnings;
    if (!ls.pass) {
      v.local = Status::Fail;
      v.local_reason = ls.reason;
    } else if (!v.forbidden_quotients.empty()) {
      v.local = Status::Fail;
      v.local_reason = "has a forbidden quotient of type " +
                       std::to_string(v.forbidden_quotients.front().type_index);
    } else {
      v.local = Status::Pass;
      v.local_reason = ls.reason;
    }
  } else {
    v.local = Status::NotApplicable;
    v.local_reason = "not cyclic-by-" + std::to_string(p);
  }

  auto subs = all_subgroups(g, limits);
  v.candidate = candidate_over(subs, p);
  v.oort = v.candidate.pass;
  v.pgl2_char0 = embeds_in_pgl2_char0(v.shape);
  v.corollaries = corollaries_over(g, p, subs);

  if (p == 2u && v.shape.is(IsoType::Kind::GeneralizedQuaternion) && v.shape.order >= 16u)
    v.caveats.push_back("necessary condition only; Q_{2^a} (a>=4) status open");
  for (auto const &w : v.local_warnings)
    v.caveats.push_back(w);
  return v;
}

} // namespace oortscan
