#pragma once

#include <array>
#include <string>
#include <vector>

#include "qgl3/algebra/gl3.hpp"
#include "qgl3/checks/identity.hpp"
#include "qgl3/rep/representation.hpp"

namespace qgl3 {

// Images of the loop-algebra Chevalley triple (e_c, f_c, q^{h_c}), c = 0,1,2.
// Slot 0 carries the lowest root, slots 1 and 2 the two finite simple roots.
// h_c is stored as the exponent triple of its Cartan monomial image.
struct LoopImages {
  std::array<AlgebraExpression, 3> e;
  std::array<AlgebraExpression, 3> f;
  std::array<CartanMonomial, 3> h;
};

enum class LoopVariant {
  standard,   // lowest-root Cartan factor on the full weight lattice
  traceless,  // lowest-root Cartan factor shifted to the trace-free lattice
  twisted,    // composed with the diagram flip: finite slots swapped
  rotated2,   // slots rotated one step (slot c takes the standard slot c-1)
  rotated3,   // slots rotated two steps (slot c takes the standard slot c+1)
};

// Symmetrized Cartan pairing of the loop diagram, <h_i, root(e_j)>.
inline int loop_cartan_pairing(int i, int j) {
  static constexpr int a[3][3] = {{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
  return a[i][j];
}

inline LoopImages loop_images(LoopVariant variant = LoopVariant::standard) {
  auto [e3, f3] = composite_generators();
  const AlgebraExpression e1 = gen(Gen::E1);
  const AlgebraExpression e2 = gen(Gen::E2);
  const AlgebraExpression f1 = gen(Gen::F1);
  const AlgebraExpression f2 = gen(Gen::F2);

  const AlgebraExpression e0 =
      (variant == LoopVariant::traceless)
          ? f3 * AlgebraExpression::cartan(
                     CartanMonomial{make_ratio(-1, 3), make_ratio(2, 3), make_ratio(-1, 3)})
          : f3 * AlgebraExpression::cartan(CartanMonomial{-1, 0, -1});
  const AlgebraExpression f0 =
      (variant == LoopVariant::traceless)
          ? e3 * AlgebraExpression::cartan(
                     CartanMonomial{make_ratio(1, 3), make_ratio(-2, 3), make_ratio(1, 3)})
          : e3 * AlgebraExpression::cartan(CartanMonomial{1, 0, 1});

  const CartanMonomial h0{-1, 0, 1};
  const CartanMonomial h1{1, -1, 0};
  const CartanMonomial h2{0, 1, -1};

  LoopImages im;
  switch (variant) {
    case LoopVariant::standard:
    case LoopVariant::traceless:
      im.e = {e0, e1, e2};
      im.f = {f0, f1, f2};
      im.h = {h0, h1, h2};
      break;
    case LoopVariant::twisted:
      im.e = {e0, e2, e1};
      im.f = {f0, f2, f1};
      im.h = {h0, h2, h1};
      break;
    case LoopVariant::rotated2:
      im.e = {e2, e0, e1};
      im.f = {f2, f0, f1};
      im.h = {h2, h0, h1};
      break;
    case LoopVariant::rotated3:
      im.e = {e1, e2, e0};
      im.f = {f1, f2, f0};
      im.h = {h1, h2, h0};
      break;
  }
  return im;
}

// Defining-relation suite for a loop generator triple in a weight
// representation: Cartan monomial composition, Cartan conjugation of e/f
// (including fractional powers of the Cartan images), the e-f pairing, the
// cubic Serre relations for all distinct slot pairs, and triviality of the
// total Cartan product q^{nu(h0+h1+h2)}.
template <class Ctx>
std::vector<IdentityResult> check_loop_relations(const Ctx& ctx,
                                                 const Representation<Ctx>& rep,
                                                 const LoopImages& im) {
  using S = typename Ctx::S;
  using Mat = Matrix<S>;
  std::vector<IdentityResult> out;

  std::array<Mat, 3> e, f;
  for (int i = 0; i < 3; ++i) {
    e[i] = evaluate(ctx, rep, im.e[i]);
    f[i] = evaluate(ctx, rep, im.f[i]);
  }
  auto cartan_power = [&](int i, const Rational& nu) {
    return cartan_eval(ctx, rep,
                       CartanMonomial{im.h[i].a * nu, im.h[i].b * nu, im.h[i].c * nu});
  };
  auto slot = [](int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };

  const Mat id = Mat::identity(rep.dim());
  const Mat zero(rep.dim(), rep.dim());
  const S kap = kappa(ctx);
  const S two = qnum(ctx, 2);

  out.push_back(matrices_equal("cartan unit",
                               cartan_eval(ctx, rep, CartanMonomial::identity()), id));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      out.push_back(matrices_equal("cartan product " + slot(i, j),
                                   cartan_power(i, 1) * cartan_power(j, 1),
                                   cartan_eval(ctx, rep, im.h[i] * im.h[j])));

  const std::array<Rational, 3> scales = {Rational(1), make_ratio(1, 2), make_ratio(1, 3)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (const Rational& nu : scales) {
        const Mat k = cartan_power(i, nu);
        const S ce = q_pow_rat(ctx, nu * loop_cartan_pairing(i, j));
        const S cf = q_pow_rat(ctx, -nu * loop_cartan_pairing(i, j));
        const std::string tag = slot(i, j) + " scale " + rat_string(nu);
        out.push_back(matrices_equal("cartan conj e " + tag, k * e[j], (e[j] * k) * ce));
        out.push_back(matrices_equal("cartan conj f " + tag, k * f[j], (f[j] * k) * cf));
      }

  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Mat lhs = (e[i] * f[j] - f[j] * e[i]) * kap;
      const Mat rhs = (i == j) ? cartan_power(i, 1) - cartan_power(i, -1) : zero;
      out.push_back(matrices_equal("e-f pairing " + slot(i, j), lhs, rhs));
    }

  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      out.push_back(matrix_vanishes(
          "serre e " + slot(i, j),
          e[i] * e[i] * e[j] - (e[i] * e[j] * e[i]) * two + e[j] * e[i] * e[i]));
      out.push_back(matrix_vanishes(
          "serre f " + slot(i, j),
          f[i] * f[i] * f[j] - (f[i] * f[j] * f[i]) * two + f[j] * f[i] * f[i]));
    }

  const CartanMonomial total = im.h[0] * im.h[1] * im.h[2];
  out.push_back({"cartan sum trivial", total.is_identity(),
                 total.is_identity() ? "" : cartan_tag(total)});
  out.push_back(matrices_equal("cartan sum acts trivially",
                               cartan_eval(ctx, rep, total), id));
  return out;
}

}  // namespace qgl3
