// Field of fractions of the Laurent ring, the scalar type of the symbolic
// path.  A value is num/den with den nonzero.  Two invariants are maintained
// cheaply after every operation: the denominator's lowest exponent is 0 and
// its lowest coefficient is 1 (so monomial denominators collapse to 1 and pure
// Laurent values have den == 1).  Full gcd reduction is deferred: equality
// cross-multiplies, and to_string()/canonical() reduce on demand.  Operand
// growth triggers an automatic gcd pass to keep term counts bounded.
#pragma once

#include "qgl3/scalar/laurent.hpp"

#include <string>

namespace qgl3 {

class FieldScalar {
 public:
  FieldScalar() : den_(Laurent::one()) {}
  FieldScalar(long n) : num_(Laurent::constant(Rational(n))), den_(Laurent::one()) {}
  FieldScalar(const Rational& c) : num_(Laurent::constant(c)), den_(Laurent::one()) {}
  static FieldScalar x_power(long exp) { return monomial(exp, Rational(1)); }
  static FieldScalar monomial(long exp, const Rational& c);
  static FieldScalar fraction(Laurent num, Laurent den);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }

  FieldScalar operator-() const;
  FieldScalar& operator+=(const FieldScalar& o);
  FieldScalar& operator-=(const FieldScalar& o);
  FieldScalar& operator*=(const FieldScalar& o);
  FieldScalar& operator/=(const FieldScalar& o);
  friend FieldScalar operator+(FieldScalar a, const FieldScalar& b) { a += b; return a; }
  friend FieldScalar operator-(FieldScalar a, const FieldScalar& b) { a -= b; return a; }
  friend FieldScalar operator*(FieldScalar a, const FieldScalar& b) { a *= b; return a; }
  friend FieldScalar operator/(FieldScalar a, const FieldScalar& b) { a /= b; return a; }

  FieldScalar inverse() const;
  FieldScalar pow(long e) const;

  bool operator==(const FieldScalar& o) const;
  bool operator!=(const FieldScalar& o) const { return !(*this == o); }

  // Fully gcd-reduced copy; dumps and exports go through this.
  FieldScalar canonical() const;

  // Substitute a nonzero rational for the variable; den must not vanish there.
  Rational eval_x(const Rational& x) const;

  // Canonical textual form, exponents printed in q-units as reduced
  // fractions: "q^(-1/2)", "(1 - q^(2))/(q^(4) + 1)", "0", "3/2".
  std::string to_string() const;

 private:
  void normalize_light();
  void reduce_full();

  Laurent num_;
  Laurent den_;
};

// Term-by-term rendering used by to_string and the exporters; exponents are
// divided by six and printed as reduced rationals.
std::string laurent_string_qunits(const Laurent& p);
std::string monomial_string_qunits(long exp_sixths, const Rational& coeff);

}  // namespace qgl3
