#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace ssg {

using BigInt = mpz_class;
using Rational = mpq_class;

// Quotient and remainder with 0 <= r < |b|.
void floor_divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);
BigInt parse_bigint(std::string_view text);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

// Exponent of the prime p in |v|; v must be nonzero.
long valuation(const BigInt& v, const BigInt& p);

// Distinct prime divisors of |v| by trial division, ascending.
std::vector<BigInt> prime_divisors(const BigInt& v);

}  // namespace ssg
