// Distinguished elements of the deformed gl3: composite generators for the
// non-simple root, the three central elements, and the two-parameter
// automorphism family.
#pragma once

#include "qgl3/algebra/expression.hpp"

#include <utility>

namespace qgl3 {

inline AlgebraExpression gen(Gen g) { return AlgebraExpression::generator(g); }

// E3 = E1 E2 - q^{-1} E2 E1,  F3 = F2 F1 - q F1 F2.
std::pair<AlgebraExpression, AlgebraExpression> composite_generators();

// The central elements; k in {1, 2, 3}.  k = 1 and 2 have seven words each,
// k = 3 is the single Cartan word q^{-2(G1+G2+G3)}.
AlgebraExpression casimir(int k);

struct AutomorphismSpec {
  FieldScalar nu1, nu2;
  // nu[i-1][j-1] multiplies G_j in the Cartan twist attached to E_i, F_i.
  Rational nu[2][3];

  // The defining constraint: nu12 - nu13 = nu21 - nu22.
  bool valid() const {
    return !nu1.is_zero() && !nu2.is_zero() &&
           nu[0][1] - nu[0][2] == nu[1][0] - nu[1][1];
  }

  static AutomorphismSpec identity();
  // nu1 = nu2 = q^{-1/2}; nu row 1 = (-1/2, 1/2, 0), row 2 = (0, -1/2, 1/2).
  // Applied to the monodromy entries this produces the symmetric form.
  static AutomorphismSpec symmetric_form();
};

// E_i -> nu_i E_i q^{sum_j nu_ij G_j},  F_i -> nu_i^{-1} q^{-sum_j nu_ij G_j} F_i,
// Cartan monomials fixed.  The spec must satisfy its constraint.
AlgebraExpression apply_automorphism(const AutomorphismSpec& spec,
                                     const AlgebraExpression& e);

}  // namespace qgl3
