// Cartan monomials q^{a G1 + b G2 + c G3}.  Exponents are rationals on the
// 1/6 lattice; the group law is exponent addition.
#pragma once

#include "qgl3/scalar/rational.hpp"

#include <string>

namespace qgl3 {

struct CartanMonomial {
  Rational a{0}, b{0}, c{0};

  static CartanMonomial identity() { return {}; }
  bool is_identity() const { return a == 0 && b == 0 && c == 0; }

  CartanMonomial operator*(const CartanMonomial& o) const {
    return {a + o.a, b + o.b, c + o.c};
  }
  CartanMonomial inverse() const { return {-a, -b, -c}; }

  // Pairing with the simple roots: alpha_1(G1,G2,G3) = (1,-1,0),
  // alpha_2 = (0,1,-1).
  Rational alpha(int i) const { return i == 1 ? a - b : b - c; }

  bool on_lattice() const {
    auto ok = [](const Rational& r) { return Rational(r * 6).get_den() == 1; };
    return ok(a) && ok(b) && ok(c);
  }

  bool operator==(const CartanMonomial&) const = default;
};

// Serialization tag "Q(a,b,c)".
std::string cartan_tag(const CartanMonomial& m);

}  // namespace qgl3
