// Exact rational arithmetic (GMP) plus small formatting helpers shared by the
// scalar tower and the JSON/LaTeX exporters.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qgl3 {

using Rational = mpq_class;
using Integer = mpz_class;

// mpq_class(p, q) does not canonicalize; this does.
inline Rational make_ratio(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational rat_pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  Rational b = exp < 0 ? Rational(1) / base : base;
  unsigned long n = exp < 0 ? -static_cast<unsigned long>(exp) : exp;
  Rational acc(1);
  while (n != 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

inline std::string rat_string(const Rational& r) { return r.get_str(); }

// "p/q" or "p"; denominator must divide evenly into the sign convention of
// get_str already (mpq keeps den > 0).
inline Rational rat_from_string(const std::string& s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

}  // namespace qgl3
