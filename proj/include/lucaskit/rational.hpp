#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace lucaskit {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision rational. gmpxx keeps results of arithmetic in lowest
/// terms with a positive denominator; values built from a raw numerator and
/// denominator must go through make_rational().
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Binomial coefficient by the multiplicative formula; zero outside 0 <= b <= a.
inline Integer binomial(long a, long b) {
  if (b < 0 || b > a) {
    return 0;
  }
  if (b > a - b) {
    b = a - b;
  }
  Integer c = 1;
  for (long i = 1; i <= b; ++i) {
    c *= a - b + i;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return c;
}

/// Exact power of a rational; negative exponents require a nonzero base.
inline Rational rational_pow(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) {
      throw std::domain_error("zero raised to a negative power");
    }
    return 1 / rational_pow(base, -e);
  }
  Rational acc = 1;
  Rational sq = base;
  for (auto k = static_cast<unsigned long>(e); k != 0; k >>= 1) {
    if (k & 1U) {
      acc *= sq;
    }
    if (k > 1) {
      sq *= sq;
    }
  }
  return acc;
}

}  // namespace lucaskit
