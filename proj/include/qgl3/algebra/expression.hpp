// Finite sums of scalar-weighted words in the generators E1, E2, F1, F2 and
// Cartan monomials.  No normal form is imposed beyond merging adjacent Cartan
// factors; equality of expressions is decided downstream by evaluation in
// weight representations.
#pragma once

#include "qgl3/algebra/cartan.hpp"
#include "qgl3/scalar/field.hpp"

#include <array>
#include <string>
#include <variant>
#include <vector>

namespace qgl3 {

enum class Gen : unsigned char { E1, E2, F1, F2 };

using Factor = std::variant<Gen, CartanMonomial>;

std::string factor_tag(const Factor& f);

struct GeneratorWord {
  FieldScalar coeff;
  std::vector<Factor> factors;

  bool operator==(const GeneratorWord&) const = default;
};

class AlgebraExpression {
 public:
  AlgebraExpression() = default;  // zero

  static AlgebraExpression scalar(FieldScalar c);
  static AlgebraExpression one() { return scalar(FieldScalar(1)); }
  static AlgebraExpression generator(Gen g);
  // coeff * q^{a G1 + b G2 + c G3}
  static AlgebraExpression cartan(CartanMonomial m, FieldScalar coeff = FieldScalar(1));

  const std::vector<GeneratorWord>& words() const { return words_; }
  bool is_zero() const { return words_.empty(); }

  AlgebraExpression operator-() const;
  AlgebraExpression& operator+=(const AlgebraExpression& o);
  AlgebraExpression& operator-=(const AlgebraExpression& o);
  friend AlgebraExpression operator+(AlgebraExpression a, const AlgebraExpression& b) { a += b; return a; }
  friend AlgebraExpression operator-(AlgebraExpression a, const AlgebraExpression& b) { a -= b; return a; }
  friend AlgebraExpression operator*(const AlgebraExpression& a, const AlgebraExpression& b);

  AlgebraExpression& scale_by(const FieldScalar& c);

  // Merge words with identical factor sequences, drop zero coefficients.
  AlgebraExpression& merge();

 private:
  std::vector<GeneratorWord> words_;
};

inline AlgebraExpression operator*(const FieldScalar& c, AlgebraExpression e) {
  return e.scale_by(c);
}

inline AlgebraExpression commutator(const AlgebraExpression& a, const AlgebraExpression& b) {
  return a * b - b * a;
}

// Replace every generator factor by its image (Cartan factors are kept as
// they are); used for the automorphism family.
AlgebraExpression substitute_generators(
    const AlgebraExpression& e, const std::array<AlgebraExpression, 4>& images);

}  // namespace qgl3
