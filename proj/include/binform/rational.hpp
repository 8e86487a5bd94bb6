#pragma once

// Exact rational scalars (GMP-backed) and small integer combinatorics used
// throughout the library. Every coefficient in the engine is a Rational;
// no floating point anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace binform {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational frac(long num, long den) {
  if (den == 0) throw std::invalid_argument("frac: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

// n!/(n-k)!, the falling factorial. Zero when k > n.
inline Integer falling(long n, long k) {
  if (k < 0 || n < 0) throw std::invalid_argument("falling: negative argument");
  if (k > n) return 0;
  Integer f = 1;
  for (long i = 0; i < k; ++i) f *= (n - i);
  return f;
}

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return b;
}

inline Rational rational_pow(const Rational& base, long k) {
  if (k < 0) throw std::invalid_argument("rational_pow: negative exponent");
  Rational acc = 1, b = base;
  while (k > 0) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

}  // namespace binform
