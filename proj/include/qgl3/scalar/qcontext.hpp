// Scalar contexts.  All exponent bookkeeping is done in sixths of a power of
// q (the variable x with x^6 = q), so fractional Cartan exponents and the
// half-integer prefactors of the exponential coefficients stay integral.
//
// SymbolicQ computes in the fraction field of Laurent polynomials; NumericQ
// substitutes a fixed rational for x.  Everything downstream is templated on
// the context, so identities are checked symbolically and re-checked fast at
// a numeric point with the same code.
#pragma once

#include "qgl3/scalar/field.hpp"
#include "qgl3/scalar/rational.hpp"

#include <cassert>

namespace qgl3 {

struct SymbolicQ {
  using S = FieldScalar;
  S x_pow(long sixths) const { return FieldScalar::x_power(sixths); }
  S from_rational(const Rational& c) const { return FieldScalar(c); }
};

struct NumericQ {
  using S = Rational;
  Rational x;  // value of the sixth root of q
  S x_pow(long sixths) const { return rat_pow(x, sixths); }
  S from_rational(const Rational& c) const { return c; }
};

template <class Ctx>
typename Ctx::S q_pow(const Ctx& c, long units) {
  return c.x_pow(6 * units);
}

template <class Ctx>
typename Ctx::S q_pow_sixths(const Ctx& c, long sixths) {
  return c.x_pow(sixths);
}

// q^e for rational e with 6e integral.
template <class Ctx>
typename Ctx::S q_pow_rat(const Ctx& c, const Rational& e) {
  Rational s = e * 6;
  assert(s.get_den() == 1);
  return c.x_pow(s.get_num().get_si());
}

template <class Ctx>
typename Ctx::S kappa(const Ctx& c) {
  return q_pow(c, 1) - q_pow(c, -1);
}

// [n] = (q^n - q^-n)/(q - q^-1), expanded as a Laurent polynomial so it is
// division-free; odd in n.
template <class Ctx>
typename Ctx::S qnum(const Ctx& c, long n) {
  if (n == 0) return c.from_rational(Rational(0));
  if (n < 0) return -qnum(c, -n);
  typename Ctx::S acc = c.from_rational(Rational(0));
  for (long j = 0; j < n; ++j) acc += q_pow(c, n - 1 - 2 * j);
  return acc;
}

template <class Ctx>
typename Ctx::S qfactorial(const Ctx& c, long n) {
  typename Ctx::S acc = c.from_rational(Rational(1));
  for (long k = 2; k <= n; ++k) acc *= qnum(c, k);
  return acc;
}

// n-th coefficient of the deformed exponential: q^(-n(n-1)/4) / [n]!.
template <class Ctx>
typename Ctx::S qexp_coefficient(const Ctx& c, long n) {
  assert(n >= 0);
  const long sixths = -3 * (n * (n - 1) / 2);  // n(n-1) is even
  return c.x_pow(sixths) / qfactorial(c, n);
}

// q^(2k) + 1 + q^(-2k); never vanishes at a rational point.
template <class Ctx>
typename Ctx::S balanced_trinomial(const Ctx& c, long k) {
  return q_pow(c, 2 * k) + c.from_rational(Rational(1)) + q_pow(c, -2 * k);
}

// k-th coefficient of the scalar prefactor series: 1 / (k (q^2k + 1 + q^-2k)).
template <class Ctx>
typename Ctx::S prefactor_coefficient(const Ctx& c, long k) {
  assert(k >= 1);
  return c.from_rational(make_ratio(1, k)) / balanced_trinomial(c, k);
}

}  // namespace qgl3
