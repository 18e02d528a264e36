#include "oortscan/ramification.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <set>
#include <sstream>

#include "oortscan/construct.hpp"
#include "oortscan/error.hpp"
#include "oortscan/finite_group.hpp"

namespace oortscan {

// -------------------------------------------------------------- filtration

RamificationFiltration::RamificationFiltration(std::vector<std::uint64_t> orders, std::uint64_t p)
  : orders_(std::move(orders)), p_(p)
{
  if (!is_prime(p_))
    throw BadParameters("filtration prime must be prime, got " + std::to_string(p_));
  if (orders_.empty())
    throw BadParameters("filtration needs at least |G_0|");
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (orders_[i] < 2u)
      throw BadParameters("filtration orders must be > 1 (trailing 1s are implied): " + str());
    if (i > 0u && orders_[i - 1u] % orders_[i] != 0u)
      throw BadParameters("filtration order " + std::to_string(orders_[i]) +
                          " does not divide the previous one: " + str());
  }
  if (orders_.size() > 1u) {
    if (!is_power_of(orders_[1], p_))
      throw BadParameters("|G_1| must be a power of p: " + str());
    if ((orders_[0] / orders_[1]) % p_ == 0u)
      throw BadParameters("|G_0/G_1| must be prime to p: " + str());
  }
}

std::string RamificationFiltration::str() const
{
  std::string s = "[";
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i)
      s += ",";
    s += std::to_string(orders_[i]);
  }
  return s + "]";
}

// ------------------------------------------------------------- cover text

namespace {

struct Token {
  std::string text;
  std::size_t column = 0u;
};

std::vector<Token> split_tokens(std::string_view line)
{
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i >= line.size() || line[i] == '#')
      break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#')
      ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1u});
  }
  return out;
}

std::uint64_t parse_uint(std::string_view s, std::size_t line, std::size_t col)
{
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw ParseError("expected a non-negative integer, got '" + std::string(s) + "'", line, col);
  return v;
}

} // namespace

CoverSpec parse_cover_spec(std::string_view text)
{
  CoverSpec cover;
  bool have_order = false;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos)
      nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1u;
    ++lineno;

    auto toks = split_tokens(line);
    if (toks.empty())
      continue;
    std::string const &key = toks[0].text;
    auto need_one = [&] {
      if (toks.size() != 2u)
        throw ParseError("'" + key + "' takes exactly one value", lineno, toks[0].column);
      return parse_uint(toks[1].text, lineno, toks[1].column);
    };

    if (key == "order") {
      cover.group_order = need_one();
      have_order = true;
    } else if (key == "base_genus") {
      cover.base_genus = need_one();
    } else if (key == "char") {
      cover.characteristic = need_one();
      if (cover.characteristic != 0u && !is_prime(cover.characteristic))
        throw ParseError("characteristic must be 0 or a prime", lineno, toks[1].column);
    } else if (key == "point") {
      BranchPoint bp;
      bool have_e = false;
      std::uint64_t count = 1u;
      std::optional<std::pair<std::vector<std::uint64_t>, std::size_t>> filt;
      for (std::size_t t = 1; t < toks.size(); ++t) {
        auto const &tok = toks[t];
        auto eq = tok.text.find('=');
        if (eq == std::string::npos)
          throw ParseError("expected key=value, got '" + tok.text + "'", lineno, tok.column);
        std::string k = tok.text.substr(0, eq);
        std::string_view v = std::string_view(tok.text).substr(eq + 1u);
        std::size_t vcol = tok.column + eq + 1u;
        if (k == "e") {
          bp.inertia_order = parse_uint(v, lineno, vcol);
          have_e = true;
        } else if (k == "count") {
          count = parse_uint(v, lineno, vcol);
        } else if (k == "filtration") {
          std::vector<std::uint64_t> orders;
          std::size_t start = 0;
          while (true) {
            std::size_t comma = v.find(',', start);
            std::string_view item = v.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                  : comma - start);
            orders.push_back(parse_uint(item, lineno, vcol + start));
            if (comma == std::string_view::npos)
              break;
            start = comma + 1u;
          }
          filt.emplace(std::move(orders), vcol);
        } else {
          throw ParseError("unknown point attribute '" + k + "'", lineno, tok.column);
        }
      }
      if (!have_e)
        throw ParseError("point needs e=<inertia order>", lineno, toks[0].column);
      if (filt) {
        if (cover.characteristic == 0u)
          throw ParseError("a filtration needs a preceding 'char' line", lineno, filt->second);
        try {
          bp.filtration.emplace(filt->first, cover.characteristic);
        } catch (BadParameters const &e) {
          throw ParseError(e.what(), lineno, filt->second);
        }
      }
      for (std::uint64_t c = 0; c < count; ++c)
        cover.branch.push_back(bp);
    } else {
      throw ParseError("unknown key '" + key + "'", lineno, toks[0].column);
    }
  }
  if (!have_order)
    throw ParseError("missing 'order' line", lineno, 1u);
  return cover;
}

std::string format_cover_spec(CoverSpec const &cover)
{
  std::ostringstream os;
  os << "order " << cover.group_order << '\n' << "base_genus " << cover.base_genus << '\n';
  if (cover.characteristic)
    os << "char " << cover.characteristic << '\n';
  for (auto const &bp : cover.branch) {
    os << "point e=" << bp.inertia_order;
    if (bp.filtration) {
      auto const &o = bp.filtration->orders();
      os << " filtration=";
      for (std::size_t i = 0; i < o.size(); ++i)
        os << (i ? "," : "") << o[i];
    }
    os << '\n';
  }
  return os.str();
}

// ------------------------------------------------------------------- genus

BigInt artin_schreier_genus(std::uint64_t p, std::uint64_t m)
{
  if (!is_prime(p))
    throw BadParameters("p must be prime, got " + std::to_string(p));
  if (m < 1u || m % p == 0u)
    throw BadDegree("Artin-Schreier degree must be >= 1 and prime to p, got m = " + std::to_string(m));
  return BigInt(p - 1u) * BigInt(m - 1u) / 2;
}

namespace {

void validate_cover(CoverSpec const &c)
{
  if (c.group_order < 1u)
    throw InconsistentCover("group order must be positive");
  if (c.characteristic != 0u && !is_prime(c.characteristic))
    throw BadParameters("characteristic must be 0 or prime, got " + std::to_string(c.characteristic));
  for (auto const &bp : c.branch) {
    if (bp.inertia_order < 2u)
      throw InconsistentCover("inertia order must be >= 2");
    if (c.group_order % bp.inertia_order != 0u)
      throw InconsistentCover("inertia order " + std::to_string(bp.inertia_order) +
                              " does not divide |G| = " + std::to_string(c.group_order));
    if (bp.filtration) {
      if (bp.filtration->inertia_order() != bp.inertia_order)
        throw InconsistentCover("filtration " + bp.filtration->str() + " does not start at e = " +
                                std::to_string(bp.inertia_order));
      if (c.characteristic != 0u && bp.filtration->p() != c.characteristic)
        throw InconsistentCover("filtration prime differs from the characteristic");
    }
  }
}

/// 2g - 2 = |G|(2 g_X - 2) + sum (|G|/e) d_P.
BigInt solve_genus(CoverSpec const &c, std::vector<BigInt> const &differents)
{
  BigInt const n = c.group_order;
  BigInt total = n * (2 * BigInt(c.base_genus) - 2);
  for (std::size_t i = 0; i < c.branch.size(); ++i)
    total += (n / c.branch[i].inertia_order) * differents[i];
  if (total < -2 || total % 2 != 0)
    throw InconsistentCover("Riemann-Hurwitz gives 2g - 2 = " + total.str() +
                            ", which is not an even integer >= -2");
  return total / 2 + 1;
}

} // namespace

BigInt tame_rh_genus(CoverSpec const &cover)
{
  validate_cover(cover);
  std::vector<BigInt> d;
  for (auto const &bp : cover.branch) {
    if (bp.filtration)
      throw BadParameters("tame formula takes no filtration data");
    if (cover.characteristic != 0u && bp.inertia_order % cover.characteristic == 0u)
      throw BadParameters("inertia order " + std::to_string(bp.inertia_order) +
                          " is wild in characteristic " + std::to_string(cover.characteristic));
    d.emplace_back(bp.inertia_order - 1u);
  }
  return solve_genus(cover, d);
}

BigInt different_exponent(RamificationFiltration const &f)
{
  BigInt d = 0;
  for (auto o : f.orders())
    d += o - 1u;
  return d;
}

BigInt wild_rh_genus(CoverSpec const &cover)
{
  validate_cover(cover);
  std::vector<BigInt> d;
  for (auto const &bp : cover.branch) {
    if (bp.filtration) {
      d.push_back(different_exponent(*bp.filtration));
    } else {
      if (cover.characteristic != 0u && bp.inertia_order % cover.characteristic == 0u)
        throw BadParameters("wild point with e = " + std::to_string(bp.inertia_order) +
                            " needs a filtration");
      d.emplace_back(bp.inertia_order - 1u);
    }
  }
  return solve_genus(cover, d);
}

// ---------------------------------------------------------------- Herbrand

std::vector<std::uint64_t> lower_jumps(RamificationFiltration const &f)
{
  std::vector<std::uint64_t> out;
  for (std::size_t j = 0; j < f.orders().size(); ++j) {
    if (f.at(j) != f.at(j + 1u))
      out.push_back(j);
  }
  return out;
}

Rational herbrand_phi(RamificationFiltration const &f, std::uint64_t j)
{
  BigInt num = 0;
  for (std::uint64_t k = 1; k <= j; ++k)
    num += f.at(k);
  return Rational(num, BigInt(f.inertia_order()));
}

std::vector<UpperJump> lower_to_upper(RamificationFiltration const &f)
{
  std::vector<UpperJump> out;
  for (auto j : lower_jumps(f))
    out.push_back({herbrand_phi(f, j), f.at(j + 1u)});
  return out;
}

RamificationFiltration upper_to_lower(std::vector<UpperJump> const &jumps, std::uint64_t order0,
                                      std::uint64_t p)
{
  if (jumps.empty() || jumps.back().order_after != 1u)
    throw BadParameters("upper jumps must end at the trivial group");
  std::vector<std::uint64_t> orders{order0};
  std::uint64_t cur_order = order0;
  Rational cur_u = 0;
  BigInt cur_j = 0;
  for (std::size_t t = 0; t < jumps.size(); ++t) {
    auto const &jp = jumps[t];
    if (jp.u < cur_u || (t > 0u && jp.u == cur_u))
      throw BadParameters("upper jumps must be increasing and non-negative");
    if (jp.order_after >= cur_order || jp.order_after == 0u || cur_order % jp.order_after != 0u)
      throw BadParameters("orders after the jumps must be a strictly decreasing divisor chain");
    // psi is linear with slope |G_0|/|G_j| between jumps
    Rational delta = (jp.u - cur_u) * Rational(BigInt(order0), BigInt(cur_order));
    if (denominator(delta) != 1)
      throw BadParameters("upper jump " + to_string(jp.u) + " has no integer lower index");
    BigInt steps = numerator(delta);
    for (BigInt s = 0; s < steps; ++s)
      orders.push_back(cur_order);
    cur_j += steps;
    cur_u = jp.u;
    cur_order = jp.order_after;
  }
  return RamificationFiltration(std::move(orders), p);
}

bool hasse_arf_check(RamificationFiltration const &f, std::uint64_t sub_order)
{
  if (sub_order == 0u || f.inertia_order() % sub_order != 0u)
    throw BadOrder(std::to_string(sub_order) + " does not divide |G_0| = " +
                   std::to_string(f.inertia_order()));
  if (sub_order == 1u)
    return true;
  auto const &o = f.orders();
  auto count = static_cast<std::uint64_t>(std::count(o.begin(), o.end(), sub_order));
  return count % (f.inertia_order() / sub_order) == 0u;
}

bool hasse_arf_all_levels(RamificationFiltration const &f)
{
  std::set<std::uint64_t> levels(f.orders().begin(), f.orders().end());
  return std::all_of(levels.begin(), levels.end(),
                     [&](std::uint64_t s) { return hasse_arf_check(f, s); });
}

bool upper_jumps_integral(RamificationFiltration const &f)
{
  auto up = lower_to_upper(f);
  return std::all_of(up.begin(), up.end(), [](UpperJump const &j) { return denominator(j.u) == 1; });
}

// ------------------------------------------------------- parity arguments

ParityCertificate char0_parity_obstruction_A4ext(std::uint64_t n_order)
{
  FamilySpec spec;
  if (n_order == 2u)
    spec = forbidden_fixture_spec(2u, 4u, 3u);
  else if (n_order == 4u)
    spec = forbidden_fixture_spec(2u, 3u);
  else
    throw BadParameters("|N| must be 2 or 4, got " + std::to_string(n_order));

  FiniteGroup g = build(spec);
  ParityCertificate cert;
  cert.n_order = n_order;
  cert.group = spec.str();
  cert.group_order = g.order();
  if (cert.group_order != 12u * n_order)
    throw std::logic_error("A4 extension has order " + std::to_string(cert.group_order));

  std::set<std::uint64_t> orders;
  for (Elem e = 1; e < g.order(); ++e)
    orders.insert(g.order_of(e));
  cert.element_orders.assign(orders.begin(), orders.end());
  bool all_zero = true;
  for (auto d : cert.element_orders) {
    cert.residues.push_back((cert.group_order / d) % 4u);
    all_zero = all_zero && cert.residues.back() == 0u;
  }
  // 2(g-1) = -2|G| + sum b_d (|G| - |G|/d), every term 0 mod 4
  all_zero = all_zero && (2u * cert.group_order) % 4u == 0u && cert.group_order % 4u == 0u;
  cert.genus_parity = all_zero ? "odd" : "undetermined";
  return cert;
}

bool odd_p_parity_equation(std::uint64_t p, std::uint64_t n_max)
{
  if (p == 2u || !is_prime(p))
    throw BadParameters("p must be an odd prime, got " + std::to_string(p));
  // (n-1)p = 2(p+1) forces p | 2
  bool symbolic = (2u * (p + 1u)) % p != 0u;
  BigInt const lhs = 2 * (BigInt(p) + 1);
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    if ((BigInt(n) - 1) * p == lhs)
      return false;
  }
  return symbolic;
}

LiftBound dihedral_lift_bound(std::uint64_t p, std::uint64_t l)
{
  if (p == 2u || !is_prime(p))
    throw BadParameters("p must be an odd prime, got " + std::to_string(p));
  if (!is_prime(l))
    throw BadParameters("l must be prime, got " + std::to_string(l));

  // W -> Z: 2p points of index l over a genus 0 curve
  CoverSpec c{l, 0u, std::vector<BranchPoint>(2u * p, BranchPoint{l, std::nullopt}), 0u};
  LiftBound b;
  b.char0_lower_bound = tame_rh_genus(c);
  b.charp_genus = BigInt(p - 1u) * BigInt(l - 1u) / 2;
  b.contradiction = b.char0_lower_bound > b.charp_genus;
  return b;
}

std::uint64_t branch_pullback_count(std::uint64_t subcover_group_order,
                                    std::vector<std::uint64_t> const &fiber_sizes)
{
  if (subcover_group_order == 0u)
    throw BadParameters("group order must be positive");
  std::uint64_t total = 0;
  for (auto f : fiber_sizes) {
    if (f == 0u || subcover_group_order % f != 0u)
      throw BadParameters("fiber size " + std::to_string(f) + " does not divide " +
                          std::to_string(subcover_group_order));
    total += f;
  }
  return total;
}

bool char0_even_required(std::uint64_t group_order, std::vector<std::uint64_t> const &element_orders)
{
  if (group_order == 0u)
    throw BadParameters("group order must be positive");
  for (auto d : element_orders) {
    if (d == 0u || group_order % d != 0u)
      throw BadParameters("element order " + std::to_string(d) + " does not divide " +
                          std::to_string(group_order));
    if ((group_order / d) % 2u != 0u)
      return false;
  }
  return true;
}

// --------------------------------------------------------------- scenarios

namespace {

using KV = std::vector<std::pair<std::string, std::string>>;

std::string u64(std::uint64_t v) { return std::to_string(v); }
std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string join_list(std::vector<std::string> const &items, char const *sep = ",")
{
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i)
      s += sep;
    s += items[i];
  }
  return s;
}

std::string upper_str(RamificationFiltration const &f)
{
  std::vector<std::string> parts;
  for (auto const &j : lower_to_upper(f))
    parts.push_back(to_string(j.u) + "->" + u64(j.order_after));
  return join_list(parts);
}

std::vector<BranchPoint> tame_points(std::uint64_t e, std::uint64_t count)
{
  return std::vector<BranchPoint>(count, BranchPoint{e, std::nullopt});
}

BranchPoint wild_point(std::vector<std::uint64_t> orders, std::uint64_t p)
{
  RamificationFiltration f(std::move(orders), p);
  return BranchPoint{f.inertia_order(), f};
}

std::uint64_t require_odd_prime_param(std::optional<std::uint64_t> v, std::uint64_t dflt,
                                      char const *name)
{
  std::uint64_t x = v.value_or(dflt);
  if (x == 2u || !is_prime(x))
    throw BadParameters(std::string(name) + " must be an odd prime, got " + u64(x));
  return x;
}

ScenarioReport odd_type4_lp(ScenarioParams const &in)
{
  std::uint64_t const p = require_odd_prime_param(in.p, 3u, "p");
  ScenarioReport r;
  r.name = "odd_type4_lp";
  r.params = {{"p", u64(p)}};
  KV &v = r.values;

  v.emplace_back("group", "prod(D:" + u64(2u * p) + ",C:" + u64(p) + ")");
  v.emplace_back("group_order", u64(2u * p * p));
  v.emplace_back("charp.curve", "w^p - w = -2u^(p+1) + 2u^2");
  BigInt gy = artin_schreier_genus(p, p + 1u);
  BigInt closed = BigInt(p) * (p - 1u) / 2;
  v.emplace_back("charp.genus_Y", gy.str());
  v.emplace_back("charp.genus_Y_closed_form", closed.str());
  BigInt gt = tame_rh_genus(CoverSpec{2u, 0u, tame_points(2u, 2u), p});
  v.emplace_back("charp.genus_T", gt.str());

  // Y° -> T° is a C_p^2 cover with n > 2 branch points of index p
  v.emplace_back("char0.equation", "2(p+1) = (n-1)p");
  v.emplace_back("char0.lhs", (2 * (BigInt(p) + 1)).str());
  v.emplace_back("char0.lhs_mod_p", u64((2u * (p + 1u)) % p));
  std::vector<std::string> by_n;
  bool hit = false;
  for (std::uint64_t n = 3;; ++n) {
    BigInt g = tame_rh_genus(CoverSpec{p * p, 0u, tame_points(p, n), 0u});
    by_n.push_back(u64(n) + ":" + g.str());
    hit = hit || g == gy;
    if (g > gy)
      break;
  }
  v.emplace_back("char0.genus_by_branch_count", join_list(by_n, " "));
  bool unsolvable = odd_p_parity_equation(p);
  v.emplace_back("char0.equation_unsolvable", yes_no(unsolvable));

  r.obstruction = gy == closed && gt == 0 && unsolvable && !hit;
  r.conclusion = "genus " + gy.str() + " in characteristic p is not reached by any C_p^2 cover "
                 "of the line in characteristic 0";
  return r;
}

ScenarioReport odd_type45(ScenarioParams const &in)
{
  std::uint64_t const p = require_odd_prime_param(in.p, 3u, "p");
  std::uint64_t const l = require_odd_prime_param(in.l, p == 3u ? 5u : 3u, "l");
  if (l == p)
    throw BadParameters("l = p is the odd_type4_lp scenario");
  ScenarioReport r;
  r.name = "odd_type45";
  r.params = {{"p", u64(p)}, {"l", u64(l)}};
  KV &v = r.values;

  bool all = true;
  // type 4 is D_2p x C_l; type 5 is C_p . C_4, the same argument with l = 2
  for (auto [tag, ll] : {std::pair<char const *, std::uint64_t>{"type4", l}, {"type5", 2u}}) {
    std::string t = tag;
    v.emplace_back(t + ".group_order", u64(2u * p * ll));
    v.emplace_back(t + ".charp.curve", "z^p - z = y^" + u64(ll));
    BigInt gw = artin_schreier_genus(p, ll);
    v.emplace_back(t + ".charp.genus_W", gw.str());
    v.emplace_back(t + ".char0.points_over_Q1_Q2", u64(2u * p));
    v.emplace_back(t + ".char0.inertia_order", u64(2u * ll));
    LiftBound b = dihedral_lift_bound(p, ll);
    v.emplace_back(t + ".char0.genus_lower_bound", b.char0_lower_bound.str());
    bool ok = b.contradiction && b.charp_genus == gw &&
              b.char0_lower_bound == BigInt(p - 1u) * BigInt(ll - 1u);
    v.emplace_back(t + ".contradiction", yes_no(ok));
    all = all && ok;
  }
  r.obstruction = all;
  r.conclusion = "characteristic-0 lower bound (p-1)(l-1) exceeds the genus (p-1)(l-1)/2";
  return r;
}

ScenarioReport even_type34(ScenarioParams const &in)
{
  std::uint64_t const n = in.n_order.value_or(2u);
  if (n != 2u && n != 4u)
    throw BadParameters("n_order must be 2 or 4, got " + u64(n));
  ScenarioReport r;
  r.name = "even_type34";
  r.params = {{"n_order", u64(n)}};
  KV &v = r.values;

  // Z -> T, the A4 cover with x = z^4 - z, t = x^3
  RamificationFiltration ph({4u, 4u}, 2u);
  v.emplace_back("A4.filtration_P_H", ph.str());
  v.emplace_back("A4.upper_jumps_P_H", upper_str(ph));
  BigInt gz = wild_rh_genus(CoverSpec{4u, 0u, {wild_point({4u, 4u}, 2u)}, 2u});
  v.emplace_back("A4.genus_Z", gz.str());
  bool ok = gz == 0 && lower_to_upper(ph).back().u == 1;

  std::vector<std::uint64_t> base{4u * n, 4u * n};
  {
    auto bad = base;
    bad.push_back(n);
    RamificationFiltration f(bad, 2u);
    v.emplace_back("charp.excluded_example", f.str() + " hasse_arf=" + yes_no(hasse_arf_check(f, n)));
    ok = ok && !hasse_arf_check(f, n);
  }
  bool all_even = true;
  for (std::uint64_t a = 0; a <= 3u; ++a) {
    std::string t = "charp.a" + u64(a);
    auto orders = base;
    orders.insert(orders.end(), 4u * a, n);
    RamificationFiltration fp(orders, 2u);
    bool ha = hasse_arf_check(fp, n);
    v.emplace_back(t + ".filtration_P", fp.str());
    v.emplace_back(t + ".hasse_arf", yes_no(ha));
    // N_i = P_i ∩ N
    std::vector<std::uint64_t> norders(2u + 4u * a, n);
    BranchPoint pt = wild_point(norders, 2u);
    v.emplace_back(t + ".filtration_N", pt.filtration->str());
    v.emplace_back(t + ".different_N", different_exponent(*pt.filtration).str());
    BigInt gs = wild_rh_genus(CoverSpec{n, 0u, {pt}, 2u});
    BigInt two_g_minus_2 = 2 * gs - 2;
    v.emplace_back(t + ".genus_S", gs.str());
    v.emplace_back(t + ".2g_S-2_mod_4", BigInt(((two_g_minus_2 % 4) + 4) % 4).str());
    bool even = gs % 2 == 0;
    v.emplace_back(t + ".genus_S_parity", even ? "even" : "odd");
    all_even = all_even && even && ha;
  }
  v.emplace_back("charp.genus_S_parity", all_even ? "even" : "mixed");

  ParityCertificate cert = char0_parity_obstruction_A4ext(n);
  v.emplace_back("char0.group", cert.group);
  v.emplace_back("char0.group_order", u64(cert.group_order));
  std::vector<std::string> res;
  for (std::size_t i = 0; i < cert.element_orders.size(); ++i)
    res.push_back(u64(cert.element_orders[i]) + ":" + u64(cert.residues[i]));
  v.emplace_back("char0.order_over_d_mod_4", join_list(res, " "));
  v.emplace_back("char0.genus_parity", cert.genus_parity);

  r.obstruction = ok && all_even && cert.genus_parity == "odd";
  r.conclusion = "g_S is even in characteristic 2 but every characteristic-0 genus is odd";
  return r;
}

ScenarioReport even_type56(ScenarioParams const &in)
{
  std::uint64_t const l = require_odd_prime_param(in.l, 3u, "l");
  ScenarioReport r;
  r.name = "even_type56";
  r.params = {{"l", u64(l)}};
  KV &v = r.values;

  v.emplace_back("type5.group", FamilySpec::product(FamilySpec::elementary_abelian(2u, 2u),
                                                    FamilySpec::cyclic(l)).str());
  v.emplace_back("type6.group_order", u64(12u * l));
  BigInt gz = wild_rh_genus(CoverSpec{4u, 0u, {wild_point({4u, 4u}, 2u)}, 2u});
  v.emplace_back("charp.genus_Z", gz.str());
  BigInt gy = tame_rh_genus(CoverSpec{3u * l, 0u, tame_points(3u * l, 2u), 2u});
  v.emplace_back("charp.genus_Y", gy.str());

  // branch locus x in {0, oo} of Y -> X pulled back along z^4 - z = x
  std::uint64_t nb = branch_pullback_count(4u, {4u, 1u});
  v.emplace_back("charp.fibers", "x=0:4 x=oo:1");
  v.emplace_back("charp.branch_count", u64(nb));
  BigInt gv = tame_rh_genus(CoverSpec{l, 0u, tame_points(l, nb), 2u});
  v.emplace_back("charp.genus_V", gv.str());

  FiniteGroup klein = build(FamilySpec::elementary_abelian(2u, 2u));
  std::vector<std::uint64_t> eo;
  for (Elem e = 0; e < klein.order(); ++e)
    eo.push_back(klein.order_of(e));
  bool even = char0_even_required(klein.order(), eo);
  v.emplace_back("char0.branch_count_even", yes_no(even));
  // g_V° = 1 - l + B°(l-1)/2 = g_V
  BigInt needed = (2 * gv - 2 + 2 * BigInt(l)) / (l - 1u);
  v.emplace_back("char0.branch_count_needed", needed.str());

  r.obstruction = gz == 0 && gy == 0 && nb == 5u && even && needed == nb && nb % 2u == 1u;
  r.conclusion = "#B = " + u64(nb) + " in characteristic 2 but #B° must be even";
  return r;
}

ScenarioReport even_type7(ScenarioParams const &)
{
  ScenarioReport r;
  r.name = "even_type7";
  KV &v = r.values;

  FamilySpec spec = FamilySpec::product(FamilySpec::cyclic(4u), FamilySpec::cyclic(2u));
  FiniteGroup g = build(spec);
  std::uint64_t const n = g.order();
  v.emplace_back("group", spec.str());
  v.emplace_back("charp.curve", "y^2 - y = x^5");
  BigInt gx = artin_schreier_genus(2u, 5u);
  v.emplace_back("charp.genus_X", gx.str());
  // 2g - 2 = |G|(0 - 2) + d at one totally ramified point
  BigInt d = 2 * gx - 2 + 2 * BigInt(n);
  v.emplace_back("charp.required_different", d.str());

  // lower filtrations of C4 x C2 with G_0 = G_1 = G and that different
  std::vector<std::uint64_t> sub_orders{8u, 4u, 2u};
  std::vector<std::string> candidates, admissible;
  std::vector<std::uint64_t> cur{8u, 8u};
  std::function<void(BigInt)> extend = [&](BigInt left) {
    if (left == 0) {
      RamificationFiltration f(cur, 2u);
      bool integral = upper_jumps_integral(f);
      candidates.push_back(f.str() + (integral ? "" : "(non-integral)"));
      if (integral && wild_rh_genus(CoverSpec{n, 0u, {BranchPoint{n, f}}, 2u}) == gx)
        admissible.push_back(f.str() + " upper " + upper_str(f));
      return;
    }
    for (auto s : sub_orders) {
      if (s > cur.back() || cur.back() % s != 0u || BigInt(s - 1u) > left)
        continue;
      cur.push_back(s);
      extend(left - (s - 1u));
      cur.pop_back();
    }
  };
  extend(d - 14);
  v.emplace_back("charp.candidate_filtrations", join_list(candidates, " "));
  v.emplace_back("charp.hasse_arf_filtrations", join_list(admissible, "; "));

  // all characteristic-0 branch data of C4 x C2 over the line with <= 6 points
  std::set<BigInt> genera;
  std::size_t data = 0;
  bool order4_even = true;
  std::vector<Elem> pick;
  std::function<void(Elem, Elem)> search = [&](Elem from, Elem prod) {
    if (pick.size() >= 2u && prod == FiniteGroup::identity() &&
        subgroup_generated(g, std::span<Elem const>(pick)).order() == n) {
      CoverSpec c{n, 0u, {}, 0u};
      std::size_t b4 = 0;
      for (auto e : pick) {
        c.branch.push_back(BranchPoint{g.order_of(e), std::nullopt});
        b4 += g.order_of(e) == 4u;
      }
      genera.insert(tame_rh_genus(c));
      order4_even = order4_even && b4 % 2u == 0u;
      ++data;
    }
    if (pick.size() == 6u)
      return;
    for (Elem e = from; e < n; ++e) {
      pick.push_back(e);
      search(e, g.mul(prod, e));
      pick.pop_back();
    }
  };
  search(1u, FiniteGroup::identity());
  std::vector<std::string> gs;
  bool all_odd = !genera.empty();
  for (auto const &x : genera) {
    gs.push_back(x.str());
    all_odd = all_odd && x % 2 == 1;
  }
  v.emplace_back("char0.branch_data_checked", u64(data));
  v.emplace_back("char0.order4_points_even", yes_no(order4_even));
  v.emplace_back("char0.genera", join_list(gs));
  v.emplace_back("char0.genus_parity", all_odd ? "odd" : "mixed");

  r.obstruction = gx == 2 && d == 18 && !admissible.empty() && all_odd;
  r.conclusion = "genus 2 in characteristic 2 but every characteristic-0 C4xC2 cover of the line "
                 "has odd genus";
  return r;
}

} // namespace

std::vector<std::string> const &scenario_names()
{
  static std::vector<std::string> const names{"odd_type4_lp", "odd_type45", "even_type34",
                                              "even_type56", "even_type7"};
  return names;
}

ScenarioReport scenario(std::string_view name, ScenarioParams const &params)
{
  if (name == "odd_type4_lp")
    return odd_type4_lp(params);
  if (name == "odd_type45")
    return odd_type45(params);
  if (name == "even_type34")
    return even_type34(params);
  if (name == "even_type56")
    return even_type56(params);
  if (name == "even_type7")
    return even_type7(params);
  throw UnknownScenario("unknown scenario '" + std::string(name) + "'; known: " +
                        join_list(scenario_names(), ", "));
}

} // namespace oortscan
