// Sparse Laurent polynomials in one variable over the rationals.
//
// The variable is the sixth root x of the deformation parameter, so every
// exponent that appears anywhere in the tower (including half- and
// third-integer powers of q) is an integer here.  Terms are kept sorted by
// ascending exponent with nonzero coefficients; that makes the representation
// canonical and structural equality exact.
#pragma once

#include "qgl3/scalar/rational.hpp"

#include <utility>
#include <vector>

namespace qgl3 {

class Laurent {
 public:
  using Term = std::pair<long, Rational>;

  Laurent() = default;  // zero
  static Laurent monomial(long exp, const Rational& coeff);
  static Laurent one() { return monomial(0, Rational(1)); }
  static Laurent constant(const Rational& c) { return monomial(0, c); }
  // Accepts unsorted/duplicated input, normalizes.
  static Laurent from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

  // Both require a nonzero polynomial.
  long min_exp() const { return terms_.front().first; }
  long max_exp() const { return terms_.back().first; }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(long exp) const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }
  friend Laurent operator+(Laurent a, const Laurent& b) { a += b; return a; }
  friend Laurent operator-(Laurent a, const Laurent& b) { a -= b; return a; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);

  Laurent& mul_monomial(long exp, const Rational& coeff);
  Laurent shifted(long d) const;
  Laurent& scale(const Rational& c) { return mul_monomial(0, c); }

  // Evaluation at a nonzero rational point.
  Rational eval(const Rational& x) const;

  bool operator==(const Laurent& o) const = default;

 private:
  std::vector<Term> terms_;
};

// Gcd of the polynomial parts (monomial factors x^min stripped first); the
// result has min_exp 0 and positive lowest coefficient, with integer-primitive
// coefficients.  gcd(0, b) is the normalized b.
Laurent laurent_gcd(const Laurent& a, const Laurent& b);

// Exact division; returns false (leaving quot untouched) if b does not divide a.
bool laurent_div_exact(const Laurent& a, const Laurent& b, Laurent& quot);

}  // namespace qgl3
