// Defining-relation suite, evaluated exactly in a given weight
// representation: Cartan group law, Cartan conjugation of the generators,
// the [E, F] relation, and both Serre relations.
#pragma once

#include "qgl3/algebra/gl3.hpp"
#include "qgl3/checks/identity.hpp"
#include "qgl3/rep/representation.hpp"

#include <array>
#include <string>
#include <vector>

namespace qgl3 {

template <class Ctx>
std::vector<IdentityResult> check_gl3_relations(const Ctx& ctx,
                                                const Representation<Ctx>& rep) {
  using S = typename Ctx::S;
  std::vector<IdentityResult> out;
  const std::size_t d = rep.dim();
  const Matrix<S> id = Matrix<S>::identity(d);

  // Exponent samples off the integer lattice to exercise the sixths.
  const std::array<CartanMonomial, 4> xs = {
      CartanMonomial{Rational(1), Rational(0), Rational(0)},
      CartanMonomial{Rational(0), Rational(1), Rational(0)},
      CartanMonomial{Rational(0), Rational(0), Rational(1)},
      CartanMonomial{make_ratio(1, 2), make_ratio(-1, 3), make_ratio(1, 6)}};

  out.push_back(matrices_equal("xx: q^0 = 1",
                               cartan_eval(ctx, rep, CartanMonomial::identity()), id));
  out.push_back(matrices_equal(
      "xx: q^X1 q^X2 = q^(X1+X2)",
      cartan_eval(ctx, rep, xs[0]) * cartan_eval(ctx, rep, xs[3]),
      cartan_eval(ctx, rep, xs[0] * xs[3])));

  for (int i = 1; i <= 2; ++i) {
    const Matrix<S>& e = i == 1 ? rep.e1 : rep.e2;
    const Matrix<S>& f = i == 1 ? rep.f1 : rep.f2;
    for (const CartanMonomial& x : xs) {
      const Matrix<S> qx = cartan_eval(ctx, rep, x);
      const Matrix<S> qxinv = cartan_eval(ctx, rep, x.inverse());
      out.push_back(matrices_equal(
          "xexf: q^X E" + std::to_string(i) + " q^-X",
          qx * e * qxinv, e * q_pow_rat(ctx, x.alpha(i))));
      out.push_back(matrices_equal(
          "xexf: q^X F" + std::to_string(i) + " q^-X",
          qx * f * qxinv, f * q_pow_rat(ctx, -x.alpha(i))));
    }
  }

  // [E_i, F_j] = delta_ij (q^{H_i} - q^{-H_i}) / kappa, H1 = G1-G2, H2 = G2-G3.
  const std::array<CartanMonomial, 2> h = {
      CartanMonomial{Rational(1), Rational(-1), Rational(0)},
      CartanMonomial{Rational(0), Rational(1), Rational(-1)}};
  const S kinv = S(1) / kappa(ctx);
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      const Matrix<S>& e = i == 1 ? rep.e1 : rep.e2;
      const Matrix<S>& f = j == 1 ? rep.f1 : rep.f2;
      Matrix<S> lhs = e * f - f * e;
      Matrix<S> rhs(d, d);
      if (i == j) {
        rhs = (cartan_eval(ctx, rep, h[i - 1]) -
               cartan_eval(ctx, rep, h[i - 1].inverse())) *
              kinv;
      }
      out.push_back(matrices_equal(
          "ef(" + std::to_string(i) + "," + std::to_string(j) + ")", lhs, rhs));
    }
  }

  // Serre relations for i != j.
  const S two = qnum(ctx, 2);
  for (int i = 1; i <= 2; ++i) {
    const int j = 3 - i;
    const Matrix<S>& ei = i == 1 ? rep.e1 : rep.e2;
    const Matrix<S>& ej = j == 1 ? rep.e1 : rep.e2;
    const Matrix<S>& fi = i == 1 ? rep.f1 : rep.f2;
    const Matrix<S>& fj = j == 1 ? rep.f1 : rep.f2;
    out.push_back(matrix_vanishes(
        "sr(E," + std::to_string(i) + "," + std::to_string(j) + ")",
        ei * ei * ej - ei * ej * ei * two + ej * ei * ei));
    out.push_back(matrix_vanishes(
        "sr(F," + std::to_string(i) + "," + std::to_string(j) + ")",
        fi * fi * fj - fi * fj * fi * two + fj * fi * fi));
  }
  return out;
}

}  // namespace qgl3
