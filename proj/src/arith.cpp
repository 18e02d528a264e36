#include "oortscan/arith.hpp"

#include <numeric>
#include <stdexcept>

namespace oortscan {

bool is_prime(std::uint64_t n)
{
  if (n < 2u)
    return false;
  for (std::uint64_t d = 2u; d * d <= n; ++d) {
    if (n % d == 0u)
      return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
  std::vector<std::uint64_t> res;
  for (std::uint64_t d = 2u; d * d <= n; ++d) {
    if (n % d == 0u) {
      res.push_back(d);
      while (n % d == 0u)
        n /= d;
    }
  }
  if (n > 1u)
    res.push_back(n);
  return res;
}

unsigned valuation(std::uint64_t n, std::uint64_t p)
{
  if (n == 0u || p < 2u)
    throw std::invalid_argument("valuation: need n > 0 and p >= 2");
  unsigned v = 0u;
  while (n % p == 0u) {
    n /= p;
    ++v;
  }
  return v;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p)
{
  return ipow(p, valuation(n, p));
}

bool is_power_of(std::uint64_t n, std::uint64_t p)
{
  if (n == 0u)
    return false;
  while (n % p == 0u)
    n /= p;
  return n == 1u;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp)
{
  std::uint64_t r = 1u;
  while (exp-- > 0u)
    r *= base;
  return r;
}

unsigned multiplicative_order(std::uint64_t base, std::uint64_t m)
{
  if (m < 2u || std::gcd(base, m) != 1u)
    throw std::invalid_argument("multiplicative_order: base not a unit");
  std::uint64_t x = base % m;
  unsigned k = 1u;
  while (x != 1u) {
    x = (x * base) % m;
    ++k;
  }
  return k;
}

std::string to_string(Rational const &r)
{
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1)
    return num.str();
  return num.str() + "/" + den.str();
}

} // namespace oortscan
