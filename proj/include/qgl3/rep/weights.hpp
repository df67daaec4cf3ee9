// gl3 weights: eigenexponent triples for the Cartan generators.
#pragma once

#include "qgl3/scalar/rational.hpp"

#include <tuple>

namespace qgl3 {

struct GLWeight {
  Rational w1{0}, w2{0}, w3{0};

  GLWeight operator+(const GLWeight& o) const {
    return {w1 + o.w1, w2 + o.w2, w3 + o.w3};
  }
  // Pairing with a G-exponent triple (a, b, c).
  Rational pair(const Rational& a, const Rational& b, const Rational& c) const {
    return a * w1 + b * w2 + c * w3;
  }
  Rational total() const { return w1 + w2 + w3; }

  bool operator==(const GLWeight&) const = default;
  bool operator<(const GLWeight& o) const {
    return std::tie(w1, w2, w3) < std::tie(o.w1, o.w2, o.w3);
  }
};

}  // namespace qgl3
