// Closed polynomial presentations of the monodromy blocks: the source form,
// the rearranged display, its automorphism-balanced variant, the
// diagram-flipped variant, and the H-variable forms from the reduction to
// rank two, together with the Gauss elimination data the factor checks share.
#pragma once

#include "qgl3/algebra/gl3.hpp"
#include "qgl3/loop/ktfactors.hpp"
#include "qgl3/rep/representation.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace qgl3 {

// One 3x3 block family.  entry[a][b] lists the coefficients of a short
// polynomial in the block variable; tail[b] right-multiplies column b and
// central left-multiplies every entry when the family is folded.
struct ClosedFormBlocks {
  std::array<std::array<std::vector<AlgebraExpression>, 3>, 3> entry;
  std::array<CartanMonomial, 3> tail{CartanMonomial::identity(), CartanMonomial::identity(),
                                     CartanMonomial::identity()};
  CartanMonomial central = CartanMonomial::identity();
};

namespace blocks_detail {

inline FieldScalar qs(long units) { return FieldScalar::x_power(6 * units); }
inline FieldScalar kap() { return qs(1) - qs(-1); }

// scalar q^{shift} * q^{a G1 + b G2 + c G3}
inline AlgebraExpression qg(long a, long b, long c, long shift = 0) {
  return AlgebraExpression::cartan({Rational(a), Rational(b), Rational(c)}, qs(shift));
}

// scalar q^{halfshift/2} * q^{(a G1 + b G2 + c G3)/2}
inline AlgebraExpression hg(long a, long b, long c, long halfshift) {
  return AlgebraExpression::cartan({make_ratio(a, 2), make_ratio(b, 2), make_ratio(c, 2)},
                                   FieldScalar::x_power(3 * halfshift));
}

// scalar q^{2 c0/3} * q^{(c1 H1 + c2 H2)/3} rewritten in the G-variables,
// using H1 = G1 - G2, H2 = G2 - G3.
inline AlgebraExpression hx(long c1, long c2, long c0) {
  return AlgebraExpression::cartan(
      {make_ratio(c1, 3), make_ratio(c2 - c1, 3), make_ratio(-c2, 3)},
      FieldScalar::x_power(2 * c0));
}

inline std::array<CartanMonomial, 3> diagonal_tail() {
  return {CartanMonomial{make_ratio(2, 3), make_ratio(-1, 3), make_ratio(-1, 3)},
          CartanMonomial{make_ratio(-1, 3), make_ratio(2, 3), make_ratio(-1, 3)},
          CartanMonomial{make_ratio(-1, 3), make_ratio(-1, 3), make_ratio(2, 3)}};
}

}  // namespace blocks_detail

// Source form: diagonal 1 - zeta q^{-2 G_a}, strictly upper kappa q F q^{-G_a - G_b},
// strictly lower kappa E, constant diagonal tail q^{-G/3 + G_a}.  The flip
// switch negates the upper corner entry; it exists to demonstrate that the
// downstream consistency checks detect a corrupted input.
inline ClosedFormBlocks closed_form_blocks(bool flip_corner_sign = false) {
  using namespace blocks_detail;
  const auto [e3, f3] = composite_generators();
  const AlgebraExpression one = AlgebraExpression::one();
  ClosedFormBlocks m;
  m.entry[0][0] = {one, -qg(-2, 0, 0)};
  m.entry[1][1] = {one, -qg(0, -2, 0)};
  m.entry[2][2] = {one, -qg(0, 0, -2)};
  m.entry[0][1] = {kap() * (gen(Gen::F1) * qg(-1, -1, 0, 1))};
  m.entry[1][2] = {kap() * (gen(Gen::F2) * qg(0, -1, -1, 1))};
  m.entry[0][2] = {(flip_corner_sign ? -kap() : kap()) * (f3 * qg(-1, 0, -1, 1))};
  m.entry[1][0] = {kap() * gen(Gen::E1)};
  m.entry[2][1] = {kap() * gen(Gen::E2)};
  m.entry[2][0] = {kap() * e3};
  m.tail = diagonal_tail();
  return m;
}

// Rearranged display: diagonal q^{G_a} - zeta q^{-G_a}, one-sided Cartan
// factors on the off-diagonal entries, central q^{-G/3}; the column tail is
// already absorbed.
inline ClosedFormBlocks display_form_blocks() {
  using namespace blocks_detail;
  const auto [e3, f3] = composite_generators();
  ClosedFormBlocks m;
  m.entry[0][0] = {qg(1, 0, 0), -qg(-1, 0, 0)};
  m.entry[1][1] = {qg(0, 1, 0), -qg(0, -1, 0)};
  m.entry[2][2] = {qg(0, 0, 1), -qg(0, 0, -1)};
  m.entry[0][1] = {kap() * (qg(-1, 0, 0) * gen(Gen::F1))};
  m.entry[0][2] = {kap() * (qg(-1, 0, 0) * f3)};
  m.entry[1][2] = {kap() * (qg(0, -1, 0) * gen(Gen::F2))};
  m.entry[1][0] = {kap() * (gen(Gen::E1) * qg(1, 0, 0))};
  m.entry[2][0] = {kap() * (e3 * qg(1, 0, 0))};
  m.entry[2][1] = {kap() * (gen(Gen::E2) * qg(0, 1, 0))};
  m.central = CartanMonomial{make_ratio(-1, 3), make_ratio(-1, 3), make_ratio(-1, 3)};
  return m;
}

// The display after the balancing automorphism: each off-diagonal Cartan
// factor splits evenly around the generator, with a compensating half power
// of q.
inline ClosedFormBlocks symmetric_display_blocks() {
  using namespace blocks_detail;
  const auto [e3, f3] = composite_generators();
  ClosedFormBlocks m;
  m.entry[0][0] = {qg(1, 0, 0), -qg(-1, 0, 0)};
  m.entry[1][1] = {qg(0, 1, 0), -qg(0, -1, 0)};
  m.entry[2][2] = {qg(0, 0, 1), -qg(0, 0, -1)};
  m.entry[0][1] = {kap() * (hg(-1, -1, 0, 1) * gen(Gen::F1))};
  m.entry[0][2] = {kap() * (hg(-1, 0, -1, 1) * f3)};
  m.entry[1][2] = {kap() * (hg(0, -1, -1, 1) * gen(Gen::F2))};
  m.entry[1][0] = {kap() * (gen(Gen::E1) * hg(1, 1, 0, -1))};
  m.entry[2][0] = {kap() * (e3 * hg(1, 0, 1, -1))};
  m.entry[2][1] = {kap() * (gen(Gen::E2) * hg(0, 1, 1, -1))};
  m.central = CartanMonomial{make_ratio(-1, 3), make_ratio(-1, 3), make_ratio(-1, 3)};
  return m;
}

// Diagram-flipped variant: quadratic diagonal entries, mixed-degree
// off-diagonal entries, central q^{-2G/3}.
inline ClosedFormBlocks twisted_display_blocks() {
  using namespace blocks_detail;
  const auto [e3, f3] = composite_generators();
  const FieldScalar k1 = kap();
  const FieldScalar k2 = k1 * k1;
  const auto E1 = gen(Gen::E1), E2 = gen(Gen::E2), F1 = gen(Gen::F1), F2 = gen(Gen::F2);
  ClosedFormBlocks m;
  m.entry[0][0] = {qg(1, 1, 0), qg(1, -1, 0, 1) + qg(-1, 1, 0, -1) + k2 * (F1 * E1),
                   qg(-1, -1, 0)};
  m.entry[0][1] = {-(k1 * qs(2)) * (qg(1, 0, 0) * F2 * qg(0, -1, 0)) + k2 * (f3 * E1),
                   -(k1 * qs(1)) * (qg(-1, 0, 0) * F2 * qg(0, -1, 0))};
  m.entry[0][2] = {(k1 * qs(1)) * (qg(0, 1, 0) * f3 * qg(-1, 0, 0)),
                   (k1 * qs(2)) * (qg(0, -1, 0) * f3 * qg(-1, 0, 0)) +
                       (k2 * qs(2)) * (F1 * F2 * qg(-1, -1, 0))};
  m.entry[1][0] = {k1 * (qg(1, 0, 0) * E2 * qg(0, 1, 0)),
                   (k1 * qs(-1)) * (qg(-1, 0, 0) * E2 * qg(0, 1, 0)) + k2 * (F1 * e3)};
  m.entry[1][1] = {qg(1, 0, 1), qg(1, 0, -1, 1) + qg(-1, 0, 1, -1) + k2 * (f3 * e3),
                   qg(-1, 0, -1)};
  m.entry[1][2] = {-k1 * (qg(0, 0, 1) * F1 * qg(-1, 0, 0)) + (k2 * qs(1)) * (f3 * E2 * qg(-1, 1, 0)),
                   -(k1 * qs(1)) * (qg(0, 0, -1) * F1 * qg(-1, 0, 0))};
  m.entry[2][0] = {-(k1 * qs(1)) * (qg(0, 1, 0) * e3 * qg(1, 0, 0)) + k2 * (E1 * E2 * qg(1, 1, 0)),
                   -k1 * (qg(0, -1, 0) * e3 * qg(1, 0, 0))};
  m.entry[2][1] = {k1 * (qg(0, 0, 1) * E1 * qg(1, 0, 0)),
                   (k1 * qs(1)) * (qg(0, 0, -1) * E1 * qg(1, 0, 0)) +
                       (k2 * qs(1)) * (F2 * e3 * qg(1, -1, 0))};
  m.entry[2][2] = {qg(0, 1, 1), qg(0, 1, -1, 1) + qg(0, -1, 1, -1) + k2 * (F2 * E2),
                   qg(0, -1, -1)};
  m.central = CartanMonomial{make_ratio(-2, 3), make_ratio(-2, 3), make_ratio(-2, 3)};
  return m;
}

// Source form written in the H-variables of the rank-two subalgebra, after
// renormalizing the loop parameter by the central character.
inline ClosedFormBlocks rank_two_blocks() {
  using namespace blocks_detail;
  const auto [e3, f3] = composite_generators();
  const AlgebraExpression one = AlgebraExpression::one();
  ClosedFormBlocks m;
  m.entry[0][0] = {one, -hx(-4, -2, -2)};
  m.entry[1][1] = {one, -hx(2, -2, -2)};
  m.entry[2][2] = {one, -hx(2, 4, -2)};
  m.entry[0][1] = {kap() * (gen(Gen::F1) * hx(-1, -2, 1))};
  m.entry[1][2] = {kap() * (gen(Gen::F2) * hx(2, 1, 1))};
  m.entry[0][2] = {kap() * (f3 * hx(-1, 1, 1))};
  m.entry[1][0] = {kap() * gen(Gen::E1)};
  m.entry[2][1] = {kap() * gen(Gen::E2)};
  m.entry[2][0] = {kap() * e3};
  m.tail = diagonal_tail();
  return m;
}

// The three central words in the same H-variables; index k corresponds to
// the degree-(k+1) word family.
inline std::array<AlgebraExpression, 3> rank_two_casimirs() {
  using namespace blocks_detail;
  const auto [e3, f3] = composite_generators();
  const FieldScalar k2 = kap() * kap();
  const FieldScalar k3 = k2 * kap();
  const auto E1 = gen(Gen::E1), E2 = gen(Gen::E2), F1 = gen(Gen::F1), F2 = gen(Gen::F2);
  AlgebraExpression c1 = hx(-4, -2, -8) + hx(2, -2, -2) + hx(2, 4, 4) +
                         k2 * (F1 * E1 * hx(-1, -2, -5)) + k2 * (F2 * E2 * hx(2, 1, 1)) +
                         k2 * (f3 * e3 * hx(-1, 1, 1)) - k3 * (f3 * E1 * E2 * hx(-1, 1, -2));
  AlgebraExpression c2 = -hx(-2, -4, -10) - hx(-2, 2, -4) - hx(4, 2, 2) -
                         k2 * (F1 * E1 * hx(1, 2, -1)) - k2 * (F2 * E2 * hx(-2, -1, -7)) -
                         k2 * (f3 * e3 * hx(1, -1, -1)) - k3 * (F1 * F2 * e3 * hx(1, -1, -1));
  AlgebraExpression c3 = AlgebraExpression::scalar(FieldScalar::x_power(-12));
  return {c1, c2, c3};
}

// Evaluate a block family in a representation as a graded matrix.  Folding
// multiplies in the central factor and the per-column tail; the unfolded
// form keeps the raw entries for elimination.
template <class Ctx>
GradedMatrix<Matrix<typename Ctx::S>> graded_from_blocks(const Ctx& ctx,
                                                         const Representation<Ctx>& rep,
                                                         const ClosedFormBlocks& blocks,
                                                         const GradingSpec& s, std::size_t order,
                                                         bool fold = true) {
  using Mat = Matrix<typename Ctx::S>;
  const std::size_t n = rep.dim();
  const Mat zero(n, n);
  const Mat central = cartan_eval(ctx, rep, blocks.central);
  std::array<Mat, 3> tail;
  for (int b = 0; b < 3; ++b) tail[b] = cartan_eval(ctx, rep, blocks.tail[b]);
  GradedMatrix<Mat> g;
  g.s = s;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      g.entry[a][b] = ZSeries<Mat>::zeros(order, zero);
      const auto& poly = blocks.entry[a][b];
      for (std::size_t k = 0; k < poly.size() && k <= order; ++k) {
        Mat v = evaluate(ctx, rep, poly[k]);
        if (fold) v = central * v * tail[b];
        g.entry[a][b][k] = v;
      }
    }
  return g;
}

// Multiply every entry of a graded matrix by one central scalar series.
template <class T>
GradedMatrix<T> apply_central_series(const GradedMatrix<T>& g, const ZSeries<T>& c) {
  GradedMatrix<T> out;
  out.s = g.s;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) out.entry[a][b] = c * g.entry[a][b];
  return out;
}

// Gauss elimination data over the source form: the (1,1) inverse, the
// once-reduced middle blocks, the inverse of the reduced (2,2), and the
// fully reduced (3,3).  Shift placement follows the graded product rule.
template <class Ctx>
struct EliminationForms {
  using Mat = Matrix<typename Ctx::S>;
  ZSeries<Mat> n11i;
  ZSeries<Mat> r22, r23, r32, r33;
  ZSeries<Mat> r22i;
  ZSeries<Mat> r33f;
};

template <class Ctx>
EliminationForms<Ctx> elimination_forms(const GradedMatrix<Matrix<typename Ctx::S>>& n) {
  EliminationForms<Ctx> e;
  e.n11i = series_inverse(n(0, 0));
  e.r23 = n(1, 2) - n(1, 0) * e.n11i * n(0, 2);
  e.r32 = n(2, 1) - series_shift_up(n(2, 0) * e.n11i * n(0, 1), 1);
  e.r22 = n(1, 1) - series_shift_up(n(1, 0) * e.n11i * n(0, 1), 1);
  e.r33 = n(2, 2) - series_shift_up(n(2, 0) * e.n11i * n(0, 2), 1);
  e.r22i = series_inverse(e.r22);
  e.r33f = e.r33 - series_shift_up(e.r32 * e.r22i * e.r23, 1);
  return e;
}

// Renormalize the loop parameter by the central character
// q^{2(G1+G2+G3)/3} q^{-2/3}: block k of entry (a,b) picks up the k-th power,
// upper entries one extra, matching how the block variable enters each slot.
template <class Ctx>
GradedMatrix<Matrix<typename Ctx::S>> substitute_central_charge(
    const Ctx& ctx, const Representation<Ctx>& rep,
    const GradedMatrix<Matrix<typename Ctx::S>>& g) {
  using Mat = Matrix<typename Ctx::S>;
  const Mat x = cartan_eval(ctx, rep, make_ratio(2, 3), make_ratio(2, 3), make_ratio(2, 3)) *
                to_scalar(ctx, FieldScalar::x_power(-4));
  const std::size_t order = g(0, 0).order();
  std::vector<Mat> xp(order + 2, Mat::identity(rep.dim()));
  for (std::size_t k = 1; k < xp.size(); ++k) xp[k] = xp[k - 1] * x;
  GradedMatrix<Mat> out;
  out.s = g.s;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      out.entry[a][b] = g.entry[a][b];
      for (std::size_t k = 0; k <= order; ++k)
        out.entry[a][b][k] = out.entry[a][b][k] * xp[k + (a < b ? 1 : 0)];
    }
  return out;
}

}  // namespace qgl3
