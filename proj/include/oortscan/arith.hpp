#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oortscan {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

bool is_prime(std::uint64_t n);

/// Distinct prime divisors of n in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Exponent of p in n (n > 0).
unsigned valuation(std::uint64_t n, std::uint64_t p);

/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

/// True iff n = p^k for some k >= 0.
bool is_power_of(std::uint64_t n, std::uint64_t p);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// Least k >= 1 with base^k = 1 mod m; requires gcd(base, m) = 1 and m >= 2.
unsigned multiplicative_order(std::uint64_t base, std::uint64_t m);

/// "a/b" in lowest terms, or "a" when the denominator is 1.
std::string to_string(Rational const &r);

} // namespace oortscan
