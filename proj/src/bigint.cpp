#include "ssg/bigint.hpp"

#include "ssg/errors.hpp"

namespace ssg {

void floor_divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r < 0) {  // negative divisor
    r -= b;
    q += 1;
  }
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw Error(ErrorKind::Parse, "expected an integer, got '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw Error(ErrorKind::Parse, "expected an integer, got '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

long valuation(const BigInt& v, const BigInt& p) {
  if (v == 0) throw Error(ErrorKind::InvalidArgument, "valuation of zero");
  BigInt rest = abs(v);
  long k = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
    rest /= p;
    ++k;
  }
  return k;
}

std::vector<BigInt> prime_divisors(const BigInt& v) {
  std::vector<BigInt> out;
  BigInt n = abs(v);
  if (n < 2) return out;
  for (BigInt p = 2; p * p <= n; ++p) {
    if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      out.push_back(p);
      while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace ssg
