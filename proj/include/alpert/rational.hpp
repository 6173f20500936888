#ifndef ALPERT_RATIONAL_HPP
#define ALPERT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace alpert {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) under arithmetic; constructors below canonicalize
// raw numerator/denominator pairs.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "a/b" or "a".
inline Rational parse_rational(const std::string& s) {
  Rational q(s);
  q.canonicalize();
  return q;
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Rising factorial (a)_n = a (a+1) ... (a+n-1) over the rationals.
inline Rational pochhammer(const Rational& a, unsigned long n) {
  Rational r(1);
  Rational t = a;
  for (unsigned long i = 0; i < n; ++i) {
    r *= t;
    t += 1;
  }
  return r;
}

// Binomial with rational top argument: C(a, n) = (a-n+1)_n / n!.
inline Rational binomial_rational(const Rational& a, unsigned long n) {
  return pochhammer(a - Rational(static_cast<long>(n)) + 1, n) /
         Rational(factorial(n));
}

inline int parity_sign(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace alpert

#endif
