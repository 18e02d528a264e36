#include "oortscan/construct.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "oortscan/arith.hpp"
#include "oortscan/error.hpp"

namespace oortscan {

// ------------------------------------------------------------- factories

FamilySpec FamilySpec::cyclic(std::uint64_t n)
{
  FamilySpec s;
  s.kind = Kind::Cyclic;
  s.n = n;
  return s;
}

FamilySpec FamilySpec::dihedral(std::uint64_t order)
{
  FamilySpec s;
  s.kind = Kind::Dihedral;
  s.n = order;
  return s;
}

FamilySpec FamilySpec::semidihedral(std::uint64_t order)
{
  FamilySpec s;
  s.kind = Kind::SemiDihedral;
  s.n = order;
  return s;
}

FamilySpec FamilySpec::quaternion(std::uint64_t order)
{
  FamilySpec s;
  s.kind = Kind::Quaternion;
  s.n = order;
  return s;
}

FamilySpec FamilySpec::elementary_abelian(std::uint64_t p, unsigned rank)
{
  FamilySpec s;
  s.kind = Kind::ElementaryAbelian;
  s.n = p;
  s.rank = rank;
  return s;
}

FamilySpec FamilySpec::named(Kind k)
{
  FamilySpec s;
  s.kind = k;
  s.n = 0u;
  return s;
}

FamilySpec FamilySpec::product(FamilySpec a, FamilySpec b)
{
  FamilySpec s;
  s.kind = Kind::DirectProduct;
  s.n = 0u;
  s.parts = {std::move(a), std::move(b)};
  return s;
}

FamilySpec FamilySpec::semidirect(FamilySpec p, std::uint64_t m, std::string action)
{
  FamilySpec s;
  s.kind = Kind::SemiDirect;
  s.n = 0u;
  s.m = m;
  s.action = std::move(action);
  s.parts = {std::move(p)};
  return s;
}

FamilySpec FamilySpec::forbidden(std::uint64_t p, unsigned type, std::uint64_t param)
{
  FamilySpec s;
  s.kind = Kind::Forbidden;
  s.n = p;
  s.rank = type;
  s.m = param;
  return s;
}

std::string FamilySpec::str() const
{
  switch (kind) {
  case Kind::Cyclic: return "C:" + std::to_string(n);
  case Kind::Dihedral: return "D:" + std::to_string(n);
  case Kind::SemiDihedral: return "SD:" + std::to_string(n);
  case Kind::Quaternion: return "Q:" + std::to_string(n);
  case Kind::ElementaryAbelian:
    return "EA:" + std::to_string(n) + "^" + std::to_string(rank);
  case Kind::A4: return "A4";
  case Kind::S4: return "S4";
  case Kind::A5: return "A5";
  case Kind::SL23: return "SL23";
  case Kind::DirectProduct:
    return "prod(" + parts[0].str() + "," + parts[1].str() + ")";
  case Kind::SemiDirect:
    return "sd(" + parts[0].str() + "," + std::to_string(m) + "," + action + ")";
  case Kind::Forbidden: {
    std::string s = "fix(" + std::to_string(n) + "," + std::to_string(rank);
    if (m != 0u)
      s += "," + std::to_string(m);
    return s + ")";
  }
  }
  return "?";
}

// ---------------------------------------------------------------- parser

namespace {

class FamilyParser {
public:
  explicit FamilyParser(std::string_view text) : s_(text) {}

  FamilySpec parse_all()
  {
    FamilySpec spec = parse_spec();
    skip();
    if (pos_ != s_.size())
      fail("unexpected trailing input");
    return spec;
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0u;

  [[noreturn]] void fail(std::string const &msg) const
  { throw ParseError(msg + " in family spec '" + std::string(s_) + "'", 1u, pos_ + 1u); }

  void skip()
  {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool accept(std::string_view tok)
  {
    skip();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok)
  {
    if (!accept(tok))
      fail("expected '" + std::string(tok) + "'");
  }

  std::uint64_t number()
  {
    skip();
    std::uint64_t v = 0u;
    auto res = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (res.ec != std::errc())
      fail("expected a number");
    pos_ = static_cast<std::size_t>(res.ptr - s_.data());
    return v;
  }

  /// n or b^e
  std::uint64_t power()
  {
    std::uint64_t b = number();
    if (accept("^")) {
      std::uint64_t e = number();
      if (e > 63u)
        fail("exponent too large");
      return ipow(b, static_cast<unsigned>(e));
    }
    return b;
  }

  std::string action()
  {
    skip();
    std::size_t start = pos_;
    if (accept("[")) {
      while (pos_ < s_.size() && s_[pos_] != ']')
        ++pos_;
      expect("]");
    } else if (accept("pow:")) {
      number();
    } else if (!accept("id") && !accept("inv")) {
      fail("expected an action (id, inv, pow:k or [..])");
    }
    std::string res;
    for (char c : s_.substr(start, pos_ - start)) {
      if (!std::isspace(static_cast<unsigned char>(c)))
        res += c;
    }
    return res;
  }

  FamilySpec parse_spec()
  {
    using Kind = FamilySpec::Kind;
    skip();
    if (accept("prod(")) {
      FamilySpec a = parse_spec();
      expect(",");
      FamilySpec b = parse_spec();
      expect(")");
      return FamilySpec::product(std::move(a), std::move(b));
    }
    if (accept("sd(")) {
      FamilySpec p = parse_spec();
      expect(",");
      std::uint64_t m = number();
      expect(",");
      std::string act = action();
      expect(")");
      return FamilySpec::semidirect(std::move(p), m, std::move(act));
    }
    if (accept("fix(")) {
      std::uint64_t p = number();
      expect(",");
      std::uint64_t t = number();
      std::uint64_t param = 0u;
      if (accept(","))
        param = number();
      expect(")");
      return FamilySpec::forbidden(p, static_cast<unsigned>(t), param);
    }
    if (accept("SL23"))
      return FamilySpec::named(Kind::SL23);
    if (accept("SD:"))
      return FamilySpec::semidihedral(power());
    if (accept("EA:")) {
      std::uint64_t p = number();
      expect("^");
      std::uint64_t r = number();
      return FamilySpec::elementary_abelian(p, static_cast<unsigned>(r));
    }
    if (accept("A4"))
      return FamilySpec::named(Kind::A4);
    if (accept("A5"))
      return FamilySpec::named(Kind::A5);
    if (accept("S4"))
      return FamilySpec::named(Kind::S4);
    if (accept("C:"))
      return FamilySpec::cyclic(power());
    if (accept("D:"))
      return FamilySpec::dihedral(power());
    if (accept("Q:"))
      return FamilySpec::quaternion(power());
    fail("unknown family");
  }
};

} // namespace

FamilySpec parse_family(std::string_view text)
{
  return FamilyParser(text).parse_all();
}

// ---------------------------------------------------------- family order

std::uint64_t family_order(FamilySpec const &spec)
{
  using Kind = FamilySpec::Kind;
  switch (spec.kind) {
  case Kind::Cyclic:
  case Kind::Dihedral:
  case Kind::SemiDihedral:
  case Kind::Quaternion: return spec.n;
  case Kind::ElementaryAbelian: return ipow(spec.n, spec.rank);
  case Kind::A4: return 12u;
  case Kind::S4: return 24u;
  case Kind::A5: return 60u;
  case Kind::SL23: return 24u;
  case Kind::DirectProduct: return family_order(spec.parts[0]) * family_order(spec.parts[1]);
  case Kind::SemiDirect: return family_order(spec.parts[0]) * spec.m;
  case Kind::Forbidden:
    return family_order(forbidden_fixture_spec(spec.n, spec.rank, spec.m));
  }
  return 0u;
}

// ---------------------------------------------------------- realizations

namespace {

Permutation cycle_on(std::size_t degree, std::size_t offset, std::size_t len)
{
  std::vector<Point> c(len);
  std::iota(c.begin(), c.end(), static_cast<Point>(offset));
  return Permutation::from_cycles(degree, {c});
}

void check_power_of_two(std::uint64_t order, std::uint64_t least, char const *name)
{
  if (order < least || !is_power_of(order, 2u))
    throw BadParameters(std::string(name) + " order must be a power of 2 >= " +
                        std::to_string(least) + ", got " + std::to_string(order));
}

/// Regular action of the group {x^i y^j : i < half, j < 2} with
/// y x^k y^-1 = x^(k*twist) and y^2 = x^ysq.
GroupSpec metacyclic_regular(std::uint64_t order, std::uint64_t twist, std::uint64_t ysq)
{
  std::uint64_t const half = order / 2u;
  auto index = [&](std::uint64_t i, std::uint64_t j) { return static_cast<Point>(i + half * j); };

  // (x^i y^j)(x^k y^l)
  auto mul = [&](std::uint64_t i, std::uint64_t j, std::uint64_t k, std::uint64_t l) {
    std::uint64_t kk = (j == 0u) ? k : (k * twist) % half;
    std::uint64_t e = (i + kk) % half;
    std::uint64_t jj = j + l;
    if (jj == 2u) {
      e = (e + ysq) % half;
      jj = 0u;
    }
    return index(e, jj);
  };

  std::vector<Point> gx(order), gy(order);
  for (std::uint64_t j = 0; j < 2u; ++j) {
    for (std::uint64_t i = 0; i < half; ++i) {
      gx[index(i, j)] = mul(i, j, 1u, 0u);
      gy[index(i, j)] = mul(i, j, 0u, 1u);
    }
  }
  return GroupSpec{order, {Permutation::from_images(gx), Permutation::from_images(gy)}};
}

GroupSpec realize_sl23()
{
  // Nonzero vectors of F_3^2, indexed in reading order.
  std::vector<std::pair<int, int>> vecs;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (a != 0 || b != 0)
        vecs.emplace_back(a, b);
    }
  }
  auto index = [&](int a, int b) {
    auto it = std::find(vecs.begin(), vecs.end(), std::make_pair(((a % 3) + 3) % 3, ((b % 3) + 3) % 3));
    return static_cast<Point>(it - vecs.begin());
  };
  auto matrix = [&](int m00, int m01, int m10, int m11) {
    std::vector<Point> img(8);
    for (std::size_t v = 0; v < 8; ++v) {
      auto [a, b] = vecs[v];
      img[v] = index(m00 * a + m01 * b, m10 * a + m11 * b);
    }
    return Permutation::from_images(img);
  };
  return GroupSpec{8u, {matrix(1, 1, 0, 1), matrix(0, -1, 1, 0)}};
}

GroupSpec direct_product(GroupSpec const &a, GroupSpec const &b)
{
  std::size_t const deg = a.degree + b.degree;
  GroupSpec res{deg, {}};
  for (auto const &g : a.generators) {
    std::vector<Point> img(deg);
    std::iota(img.begin(), img.end(), Point{0});
    for (std::size_t i = 0; i < a.degree; ++i)
      img[i] = g[i];
    res.generators.push_back(Permutation::from_images(img));
  }
  for (auto const &g : b.generators) {
    std::vector<Point> img(deg);
    std::iota(img.begin(), img.end(), Point{0});
    for (std::size_t i = 0; i < b.degree; ++i)
      img[a.degree + i] = static_cast<Point>(a.degree + g[i]);
    res.generators.push_back(Permutation::from_images(img));
  }
  return res;
}

std::vector<std::uint64_t> parse_index_list(std::string const &action)
{
  std::vector<std::uint64_t> res;
  std::string body = action.substr(1u, action.size() - 2u);
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::uint64_t v = 0u;
    auto res_fc = std::from_chars(item.data(), item.data() + item.size(), v);
    if (res_fc.ec != std::errc() || res_fc.ptr != item.data() + item.size())
      throw BadParameters("bad action image '" + item + "'");
    res.push_back(v);
  }
  return res;
}

/// The automorphism of P named by `action`, as a full element map.
std::vector<Elem> resolve_action(FiniteGroup const &p, std::string const &action,
                                 std::uint64_t m)
{
  std::size_t const n = p.order();
  std::vector<Elem> alpha(n);

  if (action == "id") {
    std::iota(alpha.begin(), alpha.end(), Elem{0});
  } else if (action == "inv" || action.rfind("pow:", 0) == 0) {
    if (!p.is_abelian())
      throw BadParameters("action '" + action + "' needs an abelian normal factor");
    std::int64_t k = -1;
    if (action != "inv")
      k = std::stoll(action.substr(4u));
    std::size_t e = exponent(p);
    if (std::gcd(static_cast<std::size_t>(((k % static_cast<std::int64_t>(e)) +
                                           static_cast<std::int64_t>(e))),
                 e) != 1u)
      throw BadParameters("power map x -> x^" + std::to_string(k) + " is not bijective");
    for (Elem x = 0; x < n; ++x)
      alpha[x] = p.pow(x, k);
  } else if (!action.empty() && action.front() == '[' && action.back() == ']') {
    auto images = parse_index_list(action);
    auto const &gens = p.generators();
    if (images.size() != gens.size())
      throw BadParameters("action lists " + std::to_string(images.size()) +
                          " images for " + std::to_string(gens.size()) + " generators");
    for (auto v : images) {
      if (v >= n)
        throw BadParameters("action image " + std::to_string(v) + " out of range");
    }
    constexpr Elem unset = ~Elem{0};
    std::fill(alpha.begin(), alpha.end(), unset);
    alpha[0] = 0u;
    std::vector<Elem> queue{0u};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Elem x = queue[i];
      for (std::size_t j = 0; j < gens.size(); ++j) {
        Elem y = p.mul(x, gens[j]);
        Elem fy = p.mul(alpha[x], static_cast<Elem>(images[j]));
        if (alpha[y] == unset) {
          alpha[y] = fy;
          queue.push_back(y);
        } else if (alpha[y] != fy) {
          throw BadParameters("action " + action + " does not define a homomorphism");
        }
      }
    }
  } else {
    throw BadParameters("unknown action '" + action + "'");
  }

  std::vector<bool> hit(n, false);
  for (Elem v : alpha) {
    if (hit[v])
      throw BadParameters("action " + action + " is not bijective");
    hit[v] = true;
  }

  // alpha^m must be the identity
  std::vector<Elem> cur(n);
  std::iota(cur.begin(), cur.end(), Elem{0});
  for (std::uint64_t k = 0; k < m; ++k) {
    for (auto &v : cur)
      v = alpha[v];
  }
  for (Elem x = 0; x < n; ++x) {
    if (cur[x] != x)
      throw BadParameters("action " + action + " has order not dividing " +
                          std::to_string(m));
  }
  return alpha;
}

/// P acts on itself by right translation; the complement generator acts as
/// the automorphism on those points and as an m-cycle on m further points.
GroupSpec realize_semidirect(FamilySpec const &spec)
{
  if (spec.m < 1u)
    throw BadParameters("complement order must be positive");
  FiniteGroup p = build(spec.parts[0]);
  auto alpha = resolve_action(p, spec.action, spec.m);

  std::size_t const np = p.order();
  std::size_t const extra = spec.m > 1u ? spec.m : 0u;
  std::size_t const deg = np + extra;

  GroupSpec res{deg, {}};
  for (Elem s : p.generators()) {
    std::vector<Point> img(deg);
    std::iota(img.begin(), img.end(), Point{0});
    for (Elem x = 0; x < np; ++x)
      img[x] = static_cast<Point>(p.mul(x, s));
    res.generators.push_back(Permutation::from_images(img));
  }

  std::vector<Point> img(deg);
  for (Elem x = 0; x < np; ++x)
    img[x] = static_cast<Point>(alpha[x]);
  for (std::size_t k = 0; k < extra; ++k)
    img[np + k] = static_cast<Point>(np + (k + 1u) % extra);
  res.generators.push_back(Permutation::from_images(img));
  return res;
}

} // namespace

GroupSpec realize(FamilySpec const &spec)
{
  using Kind = FamilySpec::Kind;
  switch (spec.kind) {
  case Kind::Cyclic: {
    if (spec.n < 1u)
      throw BadParameters("cyclic order must be positive");
    if (spec.n == 1u)
      return GroupSpec{1u, {}};
    return GroupSpec{spec.n, {cycle_on(spec.n, 0u, spec.n)}};
  }
  case Kind::Dihedral: {
    if (spec.n < 2u || spec.n % 2u != 0u)
      throw BadParameters("dihedral order must be even and >= 2, got " +
                          std::to_string(spec.n));
    std::uint64_t const k = spec.n / 2u;
    if (k == 1u)
      return GroupSpec{2u, {cycle_on(2u, 0u, 2u)}};
    if (k == 2u)
      return GroupSpec{4u, {Permutation::from_cycles(4u, {{0, 1}, {2, 3}}),
                            Permutation::from_cycles(4u, {{0, 2}, {1, 3}})}};
    std::vector<Point> refl(k);
    for (std::uint64_t i = 0; i < k; ++i)
      refl[i] = static_cast<Point>((k - i) % k);
    return GroupSpec{k, {cycle_on(k, 0u, k), Permutation::from_images(refl)}};
  }
  case Kind::SemiDihedral: {
    check_power_of_two(spec.n, 16u, "semidihedral");
    std::uint64_t const half = spec.n / 2u;
    return metacyclic_regular(spec.n, half / 2u - 1u, 0u);
  }
  case Kind::Quaternion: {
    check_power_of_two(spec.n, 8u, "quaternion");
    std::uint64_t const half = spec.n / 2u;
    return metacyclic_regular(spec.n, half - 1u, half / 2u);
  }
  case Kind::ElementaryAbelian: {
    if (!is_prime(spec.n) || spec.rank < 1u)
      throw BadParameters("elementary abelian needs a prime and rank >= 1");
    std::size_t const deg = spec.n * spec.rank;
    GroupSpec res{deg, {}};
    for (unsigned i = 0; i < spec.rank; ++i)
      res.generators.push_back(cycle_on(deg, i * spec.n, spec.n));
    return res;
  }
  case Kind::A4:
    return GroupSpec{4u, {Permutation::from_cycles(4u, {{0, 1, 2}}),
                          Permutation::from_cycles(4u, {{0, 1}, {2, 3}})}};
  case Kind::S4:
    return GroupSpec{4u, {cycle_on(4u, 0u, 4u), Permutation::from_cycles(4u, {{0, 1}})}};
  case Kind::A5:
    return GroupSpec{5u, {cycle_on(5u, 0u, 5u), Permutation::from_cycles(5u, {{0, 1, 2}})}};
  case Kind::SL23:
    return realize_sl23();
  case Kind::DirectProduct:
    return direct_product(realize(spec.parts[0]), realize(spec.parts[1]));
  case Kind::SemiDirect:
    return realize_semidirect(spec);
  case Kind::Forbidden:
    return realize(forbidden_fixture_spec(spec.n, spec.rank, spec.m));
  }
  throw BadParameters("unknown family");
}

FiniteGroup build(FamilySpec const &spec, Limits const &limits)
{
  return build_from_spec(realize(spec), limits);
}

std::optional<IsoType> expected_iso_type(FamilySpec const &spec)
{
  using Kind = FamilySpec::Kind;
  switch (spec.kind) {
  case Kind::Cyclic: return IsoType::cyclic(spec.n);
  case Kind::Dihedral:
    if (spec.n == 2u)
      return IsoType::cyclic(2u);
    return IsoType::dihedral(spec.n);
  case Kind::SemiDihedral: return IsoType::semidihedral(spec.n);
  case Kind::Quaternion: return IsoType::quaternion(spec.n);
  case Kind::ElementaryAbelian:
    if (spec.rank == 1u)
      return IsoType::cyclic(spec.n);
    if (spec.n == 2u && spec.rank == 2u)
      return IsoType::dihedral(4u);
    return IsoType::elementary_abelian(spec.n, spec.rank);
  case Kind::A4: return IsoType::a4();
  case Kind::S4: return IsoType::s4();
  case Kind::A5: return IsoType::a5();
  case Kind::SL23: return IsoType::sl23();
  default: return std::nullopt;
  }
}

// ------------------------------------------------------ forbidden fixtures

namespace {

/// Polynomials over F_p of degree < k, little-endian coefficients.
using Poly = std::vector<std::uint64_t>;

/// a mod f for monic f.
Poly poly_mod(Poly a, Poly const &f, std::uint64_t p)
{
  std::size_t const k = f.size() - 1u;
  while (a.size() > k) {
    std::uint64_t lead = a.back() % p;
    std::size_t shift = a.size() - 1u - k;
    for (std::size_t i = 0; i <= k; ++i)
      a[shift + i] = (a[shift + i] + (p - lead) * f[i]) % p;
    a.pop_back();
  }
  return a;
}

Poly poly_mulmod(Poly const &a, Poly const &b, Poly const &f, std::uint64_t p)
{
  Poly r(a.size() + b.size() - 1u, 0u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  r = poly_mod(std::move(r), f, p);
  r.resize(f.size() - 1u, 0u);
  return r;
}

/// Monic polynomial of degree d from a base-p counter.
Poly monic_from_counter(std::uint64_t counter, unsigned d, std::uint64_t p)
{
  Poly f(d + 1u, 0u);
  for (unsigned i = 0; i < d; ++i) {
    f[i] = counter % p;
    counter /= p;
  }
  f[d] = 1u;
  return f;
}

bool divides(Poly const &g, Poly const &f, std::uint64_t p)
{
  Poly r = poly_mod(f, g, p);
  return std::all_of(r.begin(), r.end(), [](std::uint64_t c) { return c == 0u; });
}

Poly irreducible_poly(std::uint64_t p, unsigned k)
{
  for (std::uint64_t c = 0; c < ipow(p, k); ++c) {
    Poly f = monic_from_counter(c, k, p);
    bool irreducible = true;
    for (unsigned d = 1; d <= k / 2u && irreducible; ++d) {
      for (std::uint64_t e = 0; e < ipow(p, d); ++e) {
        if (divides(monic_from_counter(e, d, p), f, p)) {
          irreducible = false;
          break;
        }
      }
    }
    if (irreducible)
      return f;
  }
  throw BadParameters("no irreducible polynomial found");
}

/// Images of the basis 1, t, ..., t^(k-1) under multiplication by an element
/// of order m in F_p[t]/(f), written as coefficient vectors.
std::vector<Poly> multiplication_matrix(std::uint64_t p, unsigned k, std::uint64_t m)
{
  Poly f = irreducible_poly(p, k);
  Poly const one = [&] { Poly o(k, 0u); o[0] = 1u; return o; }();

  for (std::uint64_t c = 1; c < ipow(p, k); ++c) {
    Poly w(k, 0u);
    std::uint64_t t = c;
    for (unsigned i = 0; i < k; ++i) {
      w[i] = t % p;
      t /= p;
    }
    Poly x = w;
    std::uint64_t ord = 1u;
    while (x != one) {
      x = poly_mulmod(x, w, f, p);
      ++ord;
    }
    if (ord != m)
      continue;

    std::vector<Poly> cols;
    Poly basis(k, 0u);
    for (unsigned i = 0; i < k; ++i) {
      std::fill(basis.begin(), basis.end(), 0u);
      basis[i] = 1u;
      cols.push_back(poly_mulmod(basis, w, f, p));
    }
    return cols;
  }
  throw BadParameters("no element of order " + std::to_string(m) + " in GF(" +
                      std::to_string(p) + "^" + std::to_string(k) + ")");
}

/// Index of prod g_i^(v_i) in P, where g_i are P's generators.
Elem element_from_exponents(FiniteGroup const &p, std::vector<std::int64_t> const &v)
{
  Elem x = 0u;
  auto const &gens = p.generators();
  for (std::size_t i = 0; i < v.size(); ++i)
    x = p.mul(x, p.pow(gens[i], v[i]));
  return x;
}

std::string index_list(std::vector<Elem> const &images)
{
  std::string s = "[";
  for (std::size_t i = 0; i < images.size(); ++i)
    s += (i ? "," : "") + std::to_string(images[i]);
  return s + "]";
}

/// sd(EA:p^k, m, <multiplication by an element of order m>), k = ord_m(p).
FamilySpec irreducible_semidirect(std::uint64_t p, std::uint64_t m)
{
  unsigned const k = multiplicative_order(p, m);
  FamilySpec pspec = k == 1u ? FamilySpec::cyclic(p) : FamilySpec::elementary_abelian(p, k);
  FiniteGroup pg = build(pspec);
  auto cols = multiplication_matrix(p, k, m);
  std::vector<Elem> images;
  for (auto const &col : cols)
    images.push_back(element_from_exponents(
      pg, std::vector<std::int64_t>(col.begin(), col.end())));
  return FamilySpec::semidirect(pspec, m, index_list(images));
}

/// Block-diagonal copies of the order-3 action e1 -> e2, e2 -> e1 e2 on C2^(2b).
FamilySpec a4_blocks(unsigned blocks, std::uint64_t m)
{
  FamilySpec pspec = FamilySpec::elementary_abelian(2u, 2u * blocks);
  FiniteGroup pg = build(pspec);
  std::vector<Elem> images;
  for (unsigned b = 0; b < blocks; ++b) {
    std::vector<std::int64_t> v1(2u * blocks, 0), v2(2u * blocks, 0);
    v1[2u * b + 1u] = 1;
    v2[2u * b] = 1;
    v2[2u * b + 1u] = 1;
    images.push_back(element_from_exponents(pg, v1));
    images.push_back(element_from_exponents(pg, v2));
  }
  return FamilySpec::semidirect(pspec, m, index_list(images));
}

void require_odd_prime(std::uint64_t l, char const *what)
{
  if (l < 3u || !is_prime(l))
    throw BadParameters(std::string(what) + " must be an odd prime, got " + std::to_string(l));
}

} // namespace

FamilySpec forbidden_fixture_spec(std::uint64_t p, unsigned type, std::uint64_t param)
{
  if (!is_prime(p))
    throw BadParameters("fixture prime must be prime, got " + std::to_string(p));

  if (p != 2u) {
    switch (type) {
    case 1:
      return FamilySpec::elementary_abelian(p, 2u);
    case 2: {
      std::uint64_t m = param;
      if (m == 0u) {
        // smallest m >= 3 dividing p - 1, else one needing a rank-2 module
        for (std::uint64_t c = 3; c <= p - 1u; ++c) {
          if ((p - 1u) % c == 0u) {
            m = c;
            break;
          }
        }
        for (std::uint64_t c = 3; m == 0u; ++c) {
          if (std::gcd(c, p) == 1u && multiplicative_order(p, c) == 2u)
            m = c;
        }
      }
      if (m < 3u || m % p == 0u)
        throw BadParameters("type 2 needs m >= 3 prime to p");
      return irreducible_semidirect(p, m);
    }
    case 3:
      return FamilySpec::semidirect(FamilySpec::elementary_abelian(p, 2u), 2u, "inv");
    case 4: {
      std::uint64_t l = param ? param : (p == 3u ? 5u : 3u);
      require_odd_prime(l, "l");
      return FamilySpec::product(FamilySpec::dihedral(2u * p), FamilySpec::cyclic(l));
    }
    case 5:
      return FamilySpec::semidirect(FamilySpec::cyclic(p), 4u, "inv");
    default:
      throw BadParameters("odd-prime fixture types are 1..5, got " + std::to_string(type));
    }
  }

  switch (type) {
  case 1: {
    std::uint64_t m = param ? param : 7u;
    if (m < 5u || m % 2u == 0u)
      throw BadParameters("type 1 needs an odd m >= 5");
    return irreducible_semidirect(2u, m);
  }
  case 2:
    return a4_blocks(2u, 3u);
  case 3: {
    FamilySpec pspec = FamilySpec::product(FamilySpec::cyclic(4u), FamilySpec::cyclic(4u));
    FiniteGroup pg = build(pspec);
    Elem e1 = element_from_exponents(pg, {1, 0});
    Elem e2 = element_from_exponents(pg, {0, 1});
    Elem img2 = pg.inv(pg.mul(e1, e2));
    return FamilySpec::semidirect(pspec, 3u, index_list({e2, img2}));
  }
  case 4: {
    std::uint64_t c = param ? param : 1u;
    if (c == 1u)
      return FamilySpec::elementary_abelian(2u, 3u);
    if (c == 3u)
      return FamilySpec::product(FamilySpec::named(FamilySpec::Kind::A4),
                                 FamilySpec::cyclic(2u));
    throw BadParameters("type 4 parameter is 1 or 3");
  }
  case 5: {
    std::uint64_t l = param ? param : 3u;
    require_odd_prime(l, "l");
    return FamilySpec::product(FamilySpec::elementary_abelian(2u, 2u), FamilySpec::cyclic(l));
  }
  case 6: {
    std::uint64_t l = param ? param : 5u;
    require_odd_prime(l, "l");
    return a4_blocks(1u, 3u * l);
  }
  case 7:
    return FamilySpec::product(FamilySpec::cyclic(4u), FamilySpec::cyclic(2u));
  default:
    throw BadParameters("p = 2 fixture types are 1..7, got " + std::to_string(type));
  }
}

FiniteGroup forbidden_fixture(std::uint64_t p, unsigned type, std::uint64_t param,
                              Limits const &limits)
{
  return build(forbidden_fixture_spec(p, type, param), limits);
}

// ------------------------------------------------------------------ corpus

std::string Expectation::label() const
{
  if (!known())
    return "necessary-conditions-only";
  std::string s;
  if (oort)
    s += std::string("oort=") + (*oort ? "yes" : "no");
  if (local)
    s += std::string(s.empty() ? "" : " ") + "local=" + (*local ? "yes" : "no");
  return s;
}

Expectation expected_labels(FamilySpec const &spec, std::uint64_t p)
{
  using Kind = FamilySpec::Kind;
  Expectation e;
  e.p = p;
  std::uint64_t const order = family_order(spec);
  auto both = [&](bool v, char const *why) {
    e.oort = v;
    e.local = v;
    e.reason = why;
    return e;
  };

  if (spec.kind == Kind::Cyclic) {
    if (valuation(order, p) <= 2u)
      return both(true, "cyclic with p-part at most p^2");
    e.reason = "cyclic with p-part above p^2 is open here";
    return e;
  }
  if (order % p != 0u) {
    e.oort = true;
    e.reason = "order prime to p";
    return e;
  }

  switch (spec.kind) {
  case Kind::Dihedral:
    if (p != 2u && order == 2u * p)
      return both(true, "D_2p for odd p");
    if (p == 2u && order == 4u)
      return both(true, "Klein four at p = 2");
    break;
  case Kind::ElementaryAbelian:
    if (spec.n == p && spec.rank >= 2u) {
      if (p == 2u && spec.rank == 2u)
        return both(true, "Klein four at p = 2");
      return both(false, "elementary abelian of rank >= 2");
    }
    break;
  case Kind::A4:
    if (p == 2u)
      return both(true, "A4 at p = 2");
    break;
  case Kind::Quaternion:
    if (p == 2u && order == 8u)
      return both(false, "Q8 at p = 2");
    if (p == 2u) {
      e.oort = false;
      e.reason = "contains Q8";
      return e;
    }
    break;
  case Kind::SemiDihedral:
    if (p == 2u) {
      e.oort = false;
      e.reason = "contains Q8";
      return e;
    }
    break;
  case Kind::SL23:
    if (p == 2u)
      return both(false, "SL(2,3) at p = 2");
    break;
  case Kind::Forbidden:
    if (spec.n == p)
      return both(false, "forbidden quotient fixture");
    break;
  default:
    break;
  }
  return e;
}

std::vector<std::uint64_t> corpus_primes(FamilySpec const &spec)
{
  std::vector<std::uint64_t> ps{2u, 3u, 5u};
  if (spec.kind == FamilySpec::Kind::Forbidden &&
      std::find(ps.begin(), ps.end(), spec.n) == ps.end())
    ps.push_back(spec.n);
  return ps;
}

namespace {

void add_fixtures(std::vector<FamilySpec> &out, Profile profile)
{
  using F = FamilySpec;
  for (std::uint64_t p : {3u, 5u, 7u}) {
    for (unsigned t = 1; t <= 5u; ++t)
      out.push_back(F::forbidden(p, t));
  }
  // l = p variant of odd type 4, and a second l
  out.push_back(F::forbidden(3u, 4u, 3u));
  out.push_back(F::forbidden(5u, 4u, 5u));
  out.push_back(F::forbidden(3u, 4u, 7u));

  for (unsigned t = 1; t <= 7u; ++t)
    out.push_back(F::forbidden(2u, t));
  out.push_back(F::forbidden(2u, 4u, 3u));
  out.push_back(F::forbidden(2u, 5u, 5u));
  out.push_back(F::forbidden(2u, 6u, 3u));

  if (profile == Profile::Full) {
    out.push_back(F::forbidden(3u, 2u, 8u));
    out.push_back(F::forbidden(5u, 2u, 3u));
    out.push_back(F::forbidden(5u, 2u, 6u));
    out.push_back(F::forbidden(7u, 2u, 6u));
    out.push_back(F::forbidden(2u, 1u, 5u));
    out.push_back(F::forbidden(2u, 1u, 15u));
    out.push_back(F::forbidden(2u, 5u, 7u));
    out.push_back(F::forbidden(2u, 6u, 7u));
    out.push_back(F::forbidden(5u, 4u, 7u));
  }
}

} // namespace

std::vector<CorpusEntry> corpus(Profile profile)
{
  using F = FamilySpec;
  using Kind = FamilySpec::Kind;
  std::uint64_t const bound = profile == Profile::Smoke ? 64u : 1024u;
  std::uint64_t const max_points = 64u;

  std::vector<F> specs;
  for (std::uint64_t n = 1; n <= max_points; ++n)
    specs.push_back(F::cyclic(n));
  for (std::uint64_t n = 2; n <= max_points; ++n)
    specs.push_back(F::dihedral(2u * n));
  for (std::uint64_t o : {16u, 32u, 64u})
    specs.push_back(F::semidihedral(o));
  for (std::uint64_t o : {8u, 16u, 32u, 64u})
    specs.push_back(F::quaternion(o));

  for (unsigned r = 2; r <= (profile == Profile::Smoke ? 5u : 6u); ++r)
    specs.push_back(F::elementary_abelian(2u, r));
  for (unsigned r = 2; r <= 4u; ++r)
    specs.push_back(F::elementary_abelian(3u, r));
  for (unsigned r = 2; r <= 3u; ++r)
    specs.push_back(F::elementary_abelian(5u, r));
  specs.push_back(F::elementary_abelian(7u, 2u));

  specs.push_back(F::named(Kind::A4));
  specs.push_back(F::named(Kind::S4));
  specs.push_back(F::named(Kind::A5));
  specs.push_back(F::named(Kind::SL23));

  auto C = [](std::uint64_t n) { return F::cyclic(n); };
  auto D = [](std::uint64_t n) { return F::dihedral(n); };
  auto prod = [](F a, F b) { return F::product(std::move(a), std::move(b)); };

  // direct products
  specs.push_back(prod(C(2), C(4)));
  specs.push_back(prod(C(4), C(4)));
  specs.push_back(prod(C(2), C(6)));
  specs.push_back(prod(C(3), C(9)));
  specs.push_back(prod(C(2), C(8)));
  specs.push_back(prod(D(6), C(2)));
  specs.push_back(prod(D(6), C(5)));
  specs.push_back(prod(D(6), C(7)));
  specs.push_back(prod(D(10), C(3)));
  specs.push_back(prod(D(10), C(5)));
  specs.push_back(prod(D(18), C(2)));
  specs.push_back(prod(D(6), D(6)));
  specs.push_back(prod(D(8), C(2)));
  specs.push_back(prod(D(8), C(3)));
  specs.push_back(prod(D(8), C(5)));
  specs.push_back(prod(F::quaternion(8u), C(2)));
  specs.push_back(prod(F::quaternion(8u), C(3)));
  specs.push_back(prod(F::quaternion(8u), C(5)));
  specs.push_back(prod(F::named(Kind::A4), C(3)));
  specs.push_back(prod(F::named(Kind::A4), C(5)));
  specs.push_back(prod(F::named(Kind::SL23), C(2)));
  specs.push_back(prod(F::named(Kind::S4), C(2)));

  // semidirect products
  specs.push_back(F::semidirect(C(3), 2u, "inv"));
  specs.push_back(F::semidirect(C(5), 2u, "inv"));
  specs.push_back(F::semidirect(C(9), 2u, "inv"));
  specs.push_back(F::semidirect(C(25), 2u, "inv"));
  specs.push_back(F::semidirect(C(3), 8u, "inv"));
  specs.push_back(F::semidirect(C(5), 8u, "pow:2"));
  specs.push_back(F::semidirect(C(5), 6u, "inv"));
  specs.push_back(F::semidirect(C(7), 3u, "pow:2"));
  specs.push_back(F::semidirect(C(7), 6u, "pow:3"));
  specs.push_back(F::semidirect(C(9), 4u, "inv"));
  specs.push_back(F::semidirect(C(4), 3u, "id"));
  specs.push_back(F::semidirect(C(8), 2u, "pow:3"));
  specs.push_back(F::semidirect(C(8), 2u, "pow:5"));
  specs.push_back(F::semidirect(C(16), 2u, "pow:9"));
  specs.push_back(F::semidirect(C(3), 4u, "id"));
  specs.push_back(F::semidirect(C(9), 2u, "id"));

  if (profile == Profile::Full) {
    specs.push_back(prod(D(18), C(5)));
    specs.push_back(prod(D(54), C(2)));
    specs.push_back(prod(D(10), C(7)));
    specs.push_back(prod(D(50), C(3)));
    specs.push_back(prod(F::named(Kind::SL23), C(5)));
    specs.push_back(prod(F::named(Kind::A4), C(7)));
    specs.push_back(prod(F::quaternion(16u), C(3)));
    specs.push_back(prod(F::semidihedral(16u), C(3)));
    specs.push_back(prod(D(16), C(3)));
    specs.push_back(prod(F::named(Kind::A5), C(2)));
    specs.push_back(prod(C(4), C(8)));
    specs.push_back(prod(C(9), C(9)));
    specs.push_back(F::semidirect(C(27), 2u, "inv"));
    specs.push_back(F::semidirect(C(25), 4u, "pow:7"));
    specs.push_back(F::semidirect(C(9), 6u, "pow:2"));
    specs.push_back(F::semidirect(C(3), 16u, "inv"));
    specs.push_back(F::semidirect(C(5), 12u, "inv"));
    specs.push_back(F::semidirect(C(32), 2u, "pow:15"));
    specs.push_back(F::elementary_abelian(7u, 3u));
  }

  add_fixtures(specs, profile);

  std::vector<CorpusEntry> res;
  for (auto &s : specs) {
    std::uint64_t order = family_order(s);
    if (order > bound)
      continue;
    CorpusEntry e{s, order, {}};
    for (std::uint64_t p : corpus_primes(s))
      e.expectations.push_back(expected_labels(s, p));
    res.push_back(std::move(e));
  }
  return res;
}

Profile parse_profile(std::string_view name)
{
  if (name == "smoke")
    return Profile::Smoke;
  if (name == "full")
    return Profile::Full;
  throw BadParameters("unknown profile '" + std::string(name) + "'");
}

char const *profile_name(Profile p)
{
  return p == Profile::Smoke ? "smoke" : "full";
}

} // namespace oortscan
