#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace wfree {

// Exact rational number. Arithmetic results are canonical; the two-argument
// constructor is not, so build fractions with frac.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational frac(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

Integer factorial(long n);
Integer binomial(long n, long k);
Rational inv_factorial(long n);  // 0 for n < 0

inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace wfree
