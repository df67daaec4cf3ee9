// Verification suites over one representation: triangular-factor identities,
// positional reading of the exchange matrix, exchange relations for every
// block-family variant, central-element properties, and the rank-two
// reduction.  Each suite returns one result per named identity.
#pragma once

#include "qgl3/checks/identity.hpp"
#include "qgl3/loop/images.hpp"
#include "qgl3/loop/ktfactors.hpp"
#include "qgl3/loop/rootvectors.hpp"
#include "qgl3/mono/center.hpp"
#include "qgl3/mono/closedform.hpp"
#include "qgl3/mono/rll.hpp"
#include "qgl3/mono/rmatrix.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace qgl3 {

namespace checks_detail {

template <class Mat>
ZSeries<Mat> unit_series(std::size_t order, std::size_t n) {
  ZSeries<Mat> u = ZSeries<Mat>::zeros(order, Mat(n, n));
  u[0] = Mat::identity(n);
  return u;
}

// 1 - C1 z - C2 z^2 - C3 z^3 as a matrix series.
template <class Ctx>
ZSeries<Matrix<typename Ctx::S>> casimir_polynomial(
    const std::array<Matrix<typename Ctx::S>, 3>& cas, std::size_t order) {
  using Mat = Matrix<typename Ctx::S>;
  ZSeries<Mat> p = ZSeries<Mat>::zeros(order, cas[0]);
  p[0] = Mat::identity(cas[0].rows());
  for (std::size_t k = 1; k <= order && k <= 3; ++k) p[k] = -cas[k - 1];
  return p;
}

template <class Mat>
void push_series_equal(std::vector<IdentityResult>& out, const std::string& label,
                       const ZSeries<Mat>& x, const ZSeries<Mat>& y) {
  for (std::size_t k = 0; k <= x.order(); ++k)
    if (!(x[k] == y[k])) {
      out.push_back({label, false, "coefficient " + std::to_string(k)});
      return;
    }
  out.push_back({label, true, ""});
}

}  // namespace checks_detail

// Shared ingredients of the two triangular-factor suites.  Building them
// dominates both runtimes, so callers running check_kt_factors and check_uvw
// against the same configuration should build once and pass the data to both.
template <class Ctx>
struct FactorData {
  RootSeriesSet<Ctx> rs;
  KTFactors<Ctx> kt;
  GradedMatrix<Matrix<typename Ctx::S>> n;
  EliminationForms<Ctx> el;
  std::array<Matrix<typename Ctx::S>, 3> cas;
  ZSeries<Matrix<typename Ctx::S>> fser;
  bool flip_corner_sign = false;
};

template <class Ctx>
FactorData<Ctx> build_factor_data(const Ctx& ctx, const Representation<Ctx>& rep,
                                  const GradingSpec& s, std::size_t order,
                                  bool flip_corner_sign = false) {
  const RootSeriesSet<Ctx> rs = build_root_series(ctx, rep, loop_images(), order);
  KTFactors<Ctx> kt = build_kt_factors(ctx, rep, rs);
  GradedMatrix<Matrix<typename Ctx::S>> n =
      graded_from_blocks(ctx, rep, closed_form_blocks(flip_corner_sign), s, order, false);
  EliminationForms<Ctx> el = elimination_forms<Ctx>(n);
  const std::array<Matrix<typename Ctx::S>, 3> cas = casimir_matrices(ctx, rep);
  ZSeries<Matrix<typename Ctx::S>> fser = central_series_from(ctx, cas, order);
  return {rs, std::move(kt), std::move(n), std::move(el), cas, std::move(fser), flip_corner_sign};
}

// Triangular-factor suite: the factor entries against Gauss elimination of
// the source form, the tower and level-family embeddings, the diagonal
// quotients, the central polynomial, and the response to grading characters.
template <class Ctx>
std::vector<IdentityResult> check_kt_factors(const Ctx& ctx, const Representation<Ctx>& rep,
                                             const FactorData<Ctx>& data, const GradingSpec& s,
                                             std::size_t order) {
  using S = typename Ctx::S;
  using Mat = Matrix<S>;
  using checks_detail::push_series_equal;
  std::vector<IdentityResult> out;

  const RootSeriesSet<Ctx>& rs = data.rs;
  const KTFactors<Ctx>& kt = data.kt;
  const GradedMatrix<Mat>& n = data.n;
  const EliminationForms<Ctx>& el = data.el;
  const ZSeries<Mat> fexp = series_exp(data.fser);
  const S kap = kappa(ctx);
  const S kinv = SeriesTraits<S>::invert_unit(kap);
  const S mqm2 = -q_pow(ctx, -2);
  const S qm3 = q_pow(ctx, -3);

  push_series_equal(out, "lower factor entry (2,1) solves the elimination", kt.u21,
                    n(1, 0) * el.n11i);
  push_series_equal(out, "lower factor entry (3,1) solves the elimination", kt.u31,
                    n(2, 0) * el.n11i);
  push_series_equal(out, "lower factor entry (3,2) solves the elimination", kt.u32,
                    el.r32 * el.r22i);
  push_series_equal(out, "upper factor entry (1,2) solves the elimination", kt.w12,
                    el.n11i * n(0, 1));
  push_series_equal(out, "upper factor entry (1,3) solves the elimination", kt.w13,
                    el.n11i * n(0, 2));
  push_series_equal(out, "upper factor entry (2,3) solves the elimination", kt.w23,
                    el.r22i * el.r23);
  push_series_equal(out, "diagonal factor (1,1) carries the central series", kt.v11,
                    fexp * n(0, 0));
  push_series_equal(out, "diagonal factor (2,2) carries the central series", kt.v22,
                    fexp * el.r22);
  push_series_equal(out, "diagonal factor (3,3) carries the central series", kt.v33,
                    fexp * el.r33f);

  push_series_equal(out, "raising tower over the first root embeds", rs.e_root[0],
                    detail::scale_coeffs(series_scale_arg(n(1, 0) * el.n11i, mqm2), kinv));
  push_series_equal(out, "raising tower over the second root embeds", rs.e_root[1],
                    detail::scale_coeffs(series_scale_arg(el.r32 * el.r22i, qm3), kinv));
  push_series_equal(out, "raising tower over the composite root embeds", rs.e_root[2],
                    detail::scale_coeffs(series_scale_arg(n(2, 0) * el.n11i, mqm2), kinv));
  push_series_equal(
      out, "dual raising tower over the first root embeds", rs.e_dual[0],
      detail::scale_coeffs(series_scale_arg(el.n11i * n(0, 1), mqm2), kinv * q_pow(ctx, -1)));
  push_series_equal(
      out, "dual raising tower over the second root embeds", rs.e_dual[1],
      detail::scale_coeffs(series_scale_arg(el.r22i * el.r23, qm3), -(kinv * q_pow(ctx, -2))));
  push_series_equal(
      out, "dual raising tower over the composite root embeds", rs.e_dual[2],
      detail::scale_coeffs(series_scale_arg(el.n11i * n(0, 2), mqm2), kinv * q_pow(ctx, -1)));

  const ZSeries<Mat> unit = checks_detail::unit_series<Mat>(order, rep.dim());
  push_series_equal(out, "first level family exponentiates the (1,1)-(2,2) quotient",
                    unit + detail::scale_coeffs(rs.e_im_prime[0], kap),
                    series_scale_arg(el.n11i * el.r22, mqm2));
  push_series_equal(out, "second level family exponentiates the (2,2)-(3,3) quotient",
                    unit + detail::scale_coeffs(rs.e_im_prime[1], kap),
                    series_scale_arg(el.r22i * el.r33f, qm3));

  push_series_equal(out, "diagonal quotient (1,1)-(2,2)", series_inverse(kt.v11) * kt.v22,
                    el.n11i * el.r22);
  push_series_equal(out, "diagonal quotient (2,2)-(3,3)", series_inverse(kt.v22) * kt.v33,
                    el.r22i * el.r33f);

  const ZSeries<Mat> cpoly = checks_detail::casimir_polynomial<Ctx>(data.cas, order);
  push_series_equal(out, "ordered diagonal product recovers the central polynomial",
                    series_scale_arg(n(0, 0), q_pow(ctx, 2)) * el.r22 *
                        series_scale_arg(el.r33f, q_pow(ctx, -2)),
                    cpoly);
  push_series_equal(out, "central series sums to the log of the central polynomial",
                    series_scale_arg(data.fser, q_pow(ctx, 2)) + data.fser +
                        series_scale_arg(data.fser, q_pow(ctx, -2)),
                    -series_log(cpoly));

  {
    IdentityResult r{"elimination blocks commute with the level families", true, ""};
    for (int g = 0; g < 2 && r.ok; ++g)
      for (std::size_t j = 0; j <= order && r.ok; ++j)
        for (std::size_t k = 0; k <= order && r.ok; ++k) {
          if (n(0, 0)[j].is_zero() && el.r22[j].is_zero()) continue;
          const Mat& lv = rs.e_im_prime[g][k];
          if (lv.is_zero()) continue;
          if (!(n(0, 0)[j] * lv == lv * n(0, 0)[j]) || !(el.r22[j] * lv == lv * el.r22[j])) {
            r.ok = false;
            r.detail = "family " + std::to_string(g + 1) + ", block " + std::to_string(j) +
                       ", level " + std::to_string(k);
          }
        }
    out.push_back(r);
  }

  for (auto& r : check_grading_response(ctx, rep, loop_images(), s, order, make_ratio(5, 7)))
    out.push_back(std::move(r));
  return out;
}

template <class Ctx>
std::vector<IdentityResult> check_kt_factors(const Ctx& ctx, const Representation<Ctx>& rep,
                                             const GradingSpec& s, std::size_t order,
                                             bool flip_corner_sign = false) {
  return check_kt_factors(ctx, rep, build_factor_data(ctx, rep, s, order, flip_corner_sign), s,
                          order);
}

// Assembled-product suite: the triangular product against the closed form
// with its central prefactor, the display and balanced presentations, and
// the constant diagonal tail.
template <class Ctx>
std::vector<IdentityResult> check_uvw(const Ctx& ctx, const Representation<Ctx>& rep,
                                      const FactorData<Ctx>& data, const GradingSpec& s,
                                      std::size_t order) {
  using Mat = Matrix<typename Ctx::S>;
  std::vector<IdentityResult> out;

  const bool flip_corner_sign = data.flip_corner_sign;
  const KTFactors<Ctx>& kt = data.kt;
  const ZSeries<Mat> fexp = series_exp(data.fser);

  out.push_back(graded_matrices_equal(
      "triangular product reproduces the closed form", kt_product(ctx, kt, s),
      apply_central_series(
          graded_from_blocks(ctx, rep, closed_form_blocks(flip_corner_sign), s, order, true),
          fexp)));
  out.push_back(graded_matrices_equal(
      "display form equals the source form with the tail folded",
      graded_from_blocks(ctx, rep, display_form_blocks(), s, order, true),
      graded_from_blocks(ctx, rep, closed_form_blocks(flip_corner_sign), s, order, true)));

  {
    const AutomorphismSpec spec = AutomorphismSpec::symmetric_form();
    const ClosedFormBlocks disp = display_form_blocks();
    const ClosedFormBlocks bal = symmetric_display_blocks();
    IdentityResult r{"balanced form is the automorphism image of the display", true, ""};
    for (int a = 0; a < 3 && r.ok; ++a)
      for (int b = 0; b < 3 && r.ok; ++b)
        for (std::size_t k = 0; k < disp.entry[a][b].size() && r.ok; ++k)
          if (!(evaluate(ctx, rep, apply_automorphism(spec, disp.entry[a][b][k])) ==
                evaluate(ctx, rep, bal.entry[a][b][k]))) {
            r.ok = false;
            r.detail = "entry (" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                       "), block " + std::to_string(k);
          }
    out.push_back(r);
  }

  const ClosedFormBlocks src = closed_form_blocks();
  out.push_back(matrices_equal("constant diagonal tail (1,1)", kt.d11,
                               cartan_eval(ctx, rep, src.tail[0])));
  out.push_back(matrices_equal("constant diagonal tail (2,2)", kt.d22,
                               cartan_eval(ctx, rep, src.tail[1])));
  out.push_back(matrices_equal("constant diagonal tail (3,3)", kt.d33,
                               cartan_eval(ctx, rep, src.tail[2])));
  return out;
}

template <class Ctx>
std::vector<IdentityResult> check_uvw(const Ctx& ctx, const Representation<Ctx>& rep,
                                      const GradingSpec& s, std::size_t order,
                                      bool flip_corner_sign = false) {
  return check_uvw(ctx, rep, build_factor_data(ctx, rep, s, order, flip_corner_sign), s, order);
}

// Positional suite in the defining representation: every exchange component
// sits on its pattern position, the positional reading reproduces the block
// family, and the scalar prefactor matches the central series.
template <class Ctx>
std::vector<IdentityResult> check_positional(const Ctx& ctx, const GradingSpec& s,
                                             std::size_t order, bool flip_corner_sign = false) {
  using S = typename Ctx::S;
  using Mat = Matrix<S>;
  using checks_detail::push_series_equal;
  std::vector<IdentityResult> out;

  const Representation<Ctx> rep = fundamental(ctx);
  const RMatrixData<Ctx> r = r_matrix(ctx, s);
  const GradedMatrix<Mat> m =
      graded_from_blocks(ctx, rep, closed_form_blocks(flip_corner_sign), s, order, true);

  {
    IdentityResult res{"exchange components respect the positional pattern", true, ""};
    for (int i = 0; i < 9 && res.ok; ++i)
      for (int j = 0; j < 9 && res.ok; ++j) {
        const long base = pattern_exponent(s, i % 3, j % 3);
        for (const auto& [e, v] : r.b[i][j]) {
          (void)v;
          const long diff = e - base;
          if (diff < 0 || diff % s.s_delta() != 0) {
            res.ok = false;
            res.detail = "component (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         "), exponent " + std::to_string(e);
            break;
          }
        }
      }
    out.push_back(res);
  }

  GradedMatrix<Mat> expected;
  expected.s = s;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      expected.entry[a][b] = ZSeries<Mat>::zeros(order, Mat(3, 3));
      const long base = pattern_exponent(s, a, b);
      for (std::size_t k = 0; k <= order; ++k) {
        Mat w(3, 3);
        const long e = base + static_cast<long>(k) * s.s_delta();
        for (int c = 0; c < 3; ++c)
          for (int d = 0; d < 3; ++d) {
            const auto poly = r.component(3 * c + a, 3 * d + b);
            const auto it = poly.find(e);
            if (it != poly.end()) w(c, d) = it->second;
          }
        expected.entry[a][b][k] = w;
      }
    }
  out.push_back(
      graded_matrices_equal("positional reading reproduces the block family", m, expected));

  const ZSeries<Mat> fser = central_series(ctx, rep, order);
  const ZSeries<S> fscalar = fundamental_prefactor_log(ctx, order);
  {
    IdentityResult res{"central series is scalar in the defining representation", true, ""};
    for (std::size_t k = 0; k <= order; ++k)
      if (!(fser[k] == Mat::identity(3) * fscalar[k])) {
        res.ok = false;
        res.detail = "coefficient " + std::to_string(k);
        break;
      }
    out.push_back(res);
  }

  ZSeries<Mat> fexp_scalar = checks_detail::unit_series<Mat>(order, 3);
  {
    const ZSeries<S> es = series_exp(fscalar);
    for (std::size_t k = 0; k <= order; ++k) fexp_scalar[k] = Mat::identity(3) * es[k];
  }
  out.push_back(graded_matrices_equal("positional reading with the scalar prefactor",
                                      apply_central_series(m, series_exp(fser)),
                                      apply_central_series(expected, fexp_scalar)));
  return out;
}

// Exchange relation for the source block family, optionally rechecked with
// the truncated central prefactor attached.
template <class Ctx>
std::vector<IdentityResult> check_exchange_source(const Ctx& ctx, const Representation<Ctx>& rep,
                                                  const GradingSpec& s, std::size_t order,
                                                  bool flip_corner_sign = false,
                                                  bool with_prefactor = false) {
  using Mat = Matrix<typename Ctx::S>;
  std::vector<IdentityResult> out;
  const auto rh = exchange_components(r_matrix(ctx, s));
  const GradedMatrix<Mat> m =
      graded_from_blocks(ctx, rep, closed_form_blocks(flip_corner_sign), s, order, true);
  out.push_back(
      check_exchange_relation("exchange relation, source form", rh, entry_polynomials<Ctx>(m)));
  if (with_prefactor) {
    const ZSeries<Mat> fexp = series_exp(central_series(ctx, rep, order));
    out.push_back(check_exchange_relation(
        "exchange relation with the central prefactor", rh,
        entry_polynomials<Ctx>(apply_central_series(m, fexp)),
        static_cast<long>(order) * s.s_delta()));
  }
  return out;
}

// Exchange relation for the flipped block family against the same exchange
// matrix.
template <class Ctx>
std::vector<IdentityResult> check_exchange_flipped(const Ctx& ctx, const Representation<Ctx>& rep,
                                                   const GradingSpec& s, std::size_t order) {
  return {check_exchange_relation(
      "exchange relation, flipped form", exchange_components(r_matrix(ctx, s)),
      entry_polynomials<Ctx>(
          graded_from_blocks(ctx, rep, twisted_display_blocks(), s, order, true)))};
}

// Combined exchange-relation suite for the source and flipped families.
template <class Ctx>
std::vector<IdentityResult> check_exchange(const Ctx& ctx, const Representation<Ctx>& rep,
                                           const GradingSpec& s, std::size_t order,
                                           bool flip_corner_sign = false,
                                           bool with_prefactor = false) {
  std::vector<IdentityResult> out =
      check_exchange_source(ctx, rep, s, order, flip_corner_sign, with_prefactor);
  auto flipped = check_exchange_flipped(ctx, rep, s, order);
  out.insert(out.begin() + 1, std::make_move_iterator(flipped.begin()),
             std::make_move_iterator(flipped.end()));
  return out;
}

// Rotated-variant suite: cyclic relabeling invariants, the conjugated
// exchange data, and the exchange relation for each rotated family.
template <class Ctx>
std::vector<IdentityResult> check_rotations(const Ctx& ctx, const Representation<Ctx>& rep,
                                            const GradingSpec& s, std::size_t order) {
  std::vector<IdentityResult> out;

  const auto same_spec = [](const GradingSpec& a, const GradingSpec& b) {
    return a.s0 == b.s0 && a.s1 == b.s1 && a.s2 == b.s2;
  };
  const auto m1 = entry_polynomials<Ctx>(
      graded_from_blocks(ctx, rep, closed_form_blocks(), s, order, true));
  out.push_back({"three rotation steps restore the layout",
                 rotate_positions(m1, 3) == m1 && same_spec(rotate_grading(s, 3), s), ""});
  out.push_back({"step zero is the identity variant",
                 rotate_positions(m1, 0) == m1 && same_spec(rotate_grading(s, 0), s), ""});

  const auto rh = exchange_components(r_matrix(ctx, s));
  if (s.s0 == s.s1 && s.s1 == s.s2) {
    const auto rh1 =
        rotate_exchange<Ctx>(exchange_components(r_matrix(ctx, rotate_grading(s, 1))), 1);
    out.push_back({"uniform grading keeps the exchange data fixed", rh1 == rh, ""});
  }

  for (int i = 2; i <= 3; ++i) {
    const int step = i - 1;
    const GradingSpec si = rotate_grading(s, step);
    const auto rhi = rotate_exchange<Ctx>(exchange_components(r_matrix(ctx, si)), step);
    out.push_back(check_exchange_relation(
        "exchange relation, rotated variant " + std::to_string(i), rhi,
        rotate_positions(entry_polynomials<Ctx>(
                             graded_from_blocks(ctx, rep, closed_form_blocks(), si, order, true)),
                         step)));
    out.push_back(check_exchange_relation(
        "exchange relation, rotated flipped variant " + std::to_string(i), rhi,
        rotate_positions(entry_polynomials<Ctx>(graded_from_blocks(
                             ctx, rep, twisted_display_blocks(), si, order, true)),
                         step)));
  }
  return out;
}

// Flipped-family suite: the corner quotients against the elimination data,
// the flipped diagonal in closed form, its inversion relations with the
// standard diagonal, the unit triple product, and the assembled product
// against the flipped display.
template <class Ctx>
std::vector<IdentityResult> check_flipped(const Ctx& ctx, const Representation<Ctx>& rep,
                                          const GradingSpec& s, std::size_t order) {
  using S = typename Ctx::S;
  using Mat = Matrix<S>;
  using checks_detail::push_series_equal;
  std::vector<IdentityResult> out;

  const RootSeriesSet<Ctx> rs = build_root_series(ctx, rep, loop_images(), order);
  const KTFactors<Ctx> kt = build_kt_factors(ctx, rep, rs);
  const KTFactors<Ctx> tw = build_kt_factors_twisted(ctx, rep, rs);
  const GradedMatrix<Mat> n = graded_from_blocks(ctx, rep, closed_form_blocks(), s, order, false);
  const EliminationForms<Ctx> el = elimination_forms<Ctx>(n);
  const ZSeries<Mat> fser = central_series(ctx, rep, order);
  const S mq = -q_pow(ctx, 1);
  const S mqi = -q_pow(ctx, -1);

  push_series_equal(out, "flipped lower entry (2,1) matches the elimination", tw.u21,
                    series_scale_arg(el.r32 * el.r22i, mqi));
  push_series_equal(out, "flipped lower entry (3,1) matches the elimination", tw.u31,
                    detail::scale_coeffs(series_scale_arg(n(2, 0) * el.n11i, mq), mq) +
                        series_scale_arg(n(1, 0) * el.n11i, mq) *
                            series_scale_arg(el.r32 * el.r22i, mqi));
  push_series_equal(out, "flipped lower entry (3,2) matches the elimination", tw.u32,
                    series_scale_arg(n(1, 0) * el.n11i, mq));
  push_series_equal(out, "flipped upper entry (1,2) matches the elimination", tw.w12,
                    detail::scale_coeffs(series_scale_arg(el.r22i * el.r23, mqi), mqi));
  push_series_equal(out, "flipped upper entry (1,3) matches the elimination", tw.w13,
                    series_scale_arg(el.n11i * n(0, 2), mq) +
                        series_shift_up(series_scale_arg(el.r22i * el.r23, mqi) *
                                            series_scale_arg(el.n11i * n(0, 1), mq),
                                        1));
  push_series_equal(out, "flipped upper entry (2,3) matches the elimination", tw.w23,
                    detail::scale_coeffs(series_scale_arg(el.n11i * n(0, 1), mq), mq));

  const ZSeries<Mat> barpref =
      series_exp(series_scale_arg(fser, mqi) + series_scale_arg(fser, mq));
  push_series_equal(out, "flipped diagonal (1,1) in closed form", tw.v11,
                    barpref * series_scale_arg(n(0, 0), mq) * series_scale_arg(el.r22, mqi));
  push_series_equal(out, "flipped diagonal (2,2) in closed form", tw.v22,
                    barpref * series_scale_arg(n(0, 0), mq) * series_scale_arg(el.r33f, mqi));
  push_series_equal(out, "flipped diagonal (3,3) in closed form", tw.v33,
                    barpref * series_scale_arg(el.r22, mq) * series_scale_arg(el.r33f, mqi));

  const S mq3 = -q_pow(ctx, 3);
  const S mqm3 = -q_pow(ctx, -3);
  push_series_equal(out, "flipped diagonal (1,1) inverts the standard (3,3)", tw.v11,
                    series_inverse(series_scale_arg(kt.v33, mqm3)));
  push_series_equal(out, "flipped diagonal (3,3) inverts the standard (1,1)", tw.v33,
                    series_inverse(series_scale_arg(kt.v11, mq3)));
  push_series_equal(out, "flipped diagonal triple product is one",
                    series_scale_arg(tw.v11, q_pow(ctx, 2)) * tw.v22 *
                        series_scale_arg(tw.v33, q_pow(ctx, -2)),
                    checks_detail::unit_series<Mat>(order, rep.dim()));

  out.push_back(graded_matrices_equal(
      "flipped triangular product reproduces the flipped display", kt_product(ctx, tw, s),
      apply_central_series(
          graded_from_blocks(ctx, rep, twisted_display_blocks(), s, order, true), barpref)));
  return out;
}

// Central-element suite: each central word commutes with the generators and
// the Cartan monomials.
template <class Ctx>
std::vector<IdentityResult> check_centrality(const Ctx& ctx, const Representation<Ctx>& rep) {
  using Mat = Matrix<typename Ctx::S>;
  std::vector<IdentityResult> out;
  const std::array<Mat, 3> cas = casimir_matrices(ctx, rep);
  const std::pair<std::string, Mat> gens[] = {
      {"E1", rep.gen_matrix(Gen::E1)},
      {"E2", rep.gen_matrix(Gen::E2)},
      {"F1", rep.gen_matrix(Gen::F1)},
      {"F2", rep.gen_matrix(Gen::F2)},
      {"q^G1", cartan_eval(ctx, rep, Rational(1), Rational(0), Rational(0))},
      {"q^G2", cartan_eval(ctx, rep, Rational(0), Rational(1), Rational(0))},
      {"q^G3", cartan_eval(ctx, rep, Rational(0), Rational(0), Rational(1))}};
  for (int k = 0; k < 3; ++k)
    for (const auto& [name, g] : gens)
      out.push_back(matrix_vanishes(
          "central word " + std::to_string(k + 1) + " commutes with " + name,
          cas[k] * g - g * cas[k]));
  return out;
}

// Eigenvalue suite: on each highest-weight vector the central words act by
// the elementary symmetric functions of the shifted weight characters, and
// the log-word families by their power sums.
template <class Ctx>
std::vector<IdentityResult> check_eigenvalues(const Ctx& ctx, const Representation<Ctx>& rep) {
  using S = typename Ctx::S;
  using Mat = Matrix<S>;
  std::vector<IdentityResult> out;
  const std::array<Mat, 3> cas = casimir_matrices(ctx, rep);
  const std::vector<CenterPoly> words = center_log_words(3);
  std::array<Mat, 3> logw{center_poly_eval(ctx, words[1], cas),
                          center_poly_eval(ctx, words[2], cas),
                          center_poly_eval(ctx, words[3], cas)};

  const auto scaled = [](const std::vector<S>& v, const S& c) {
    std::vector<S> r = v;
    for (S& x : r) x = x * c;
    return r;
  };

  for (const auto& [w, v] : highest_weight_vectors(ctx, rep)) {
    const std::string tag =
        "(" + rat_string(w.w1) + "," + rat_string(w.w2) + "," + rat_string(w.w3) + ")";
    const S mu1 = q_pow_rat(ctx, Rational(-2) * (w.w1 + 1));
    const S mu2 = q_pow_rat(ctx, Rational(-2) * w.w2);
    const S mu3 = q_pow_rat(ctx, Rational(-2) * (w.w3 - 1));
    const S e1 = mu1 + mu2 + mu3;
    const S e2 = mu1 * mu2 + mu1 * mu3 + mu2 * mu3;
    const S e3 = mu1 * mu2 * mu3;
    const S zero = ctx.from_rational(Rational(0));
    const std::array<S, 3> ev = {e1, zero - e2, e3};
    for (int k = 0; k < 3; ++k)
      out.push_back({"central word " + std::to_string(k + 1) + " eigenvalue on weight " + tag,
                     mat_apply(cas[k], v) == scaled(v, ev[k]), ""});
    std::array<S, 3> mupow = {mu1, mu2, mu3};
    for (int k = 1; k <= 3; ++k) {
      out.push_back({"log word " + std::to_string(k) + " power sum on weight " + tag,
                     mat_apply(logw[k - 1], v) == scaled(v, mupow[0] + mupow[1] + mupow[2]),
                     ""});
      for (int i = 0; i < 3; ++i) mupow[i] = mupow[i] * (i == 0 ? mu1 : i == 1 ? mu2 : mu3);
    }
  }
  return out;
}

// Rank-two reduction suite: the renormalized source form, central words, and
// central series against their H-variable presentations.
template <class Ctx>
std::vector<IdentityResult> check_rank_two(const Ctx& ctx, const Representation<Ctx>& rep,
                                           const GradingSpec& s, std::size_t order) {
  using Mat = Matrix<typename Ctx::S>;
  using checks_detail::push_series_equal;
  std::vector<IdentityResult> out;

  const GradedMatrix<Mat> n = graded_from_blocks(ctx, rep, closed_form_blocks(), s, order, false);
  out.push_back(graded_matrices_equal(
      "renormalized source form matches the rank-two form",
      substitute_central_charge(ctx, rep, n),
      graded_from_blocks(ctx, rep, rank_two_blocks(), s, order, false)));

  const Mat x = cartan_eval(ctx, rep, make_ratio(2, 3), make_ratio(2, 3), make_ratio(2, 3)) *
                to_scalar(ctx, FieldScalar::x_power(-4));
  const std::array<Mat, 3> cas = casimir_matrices(ctx, rep);
  const std::array<AlgebraExpression, 3> rtc = rank_two_casimirs();
  Mat xp = x;
  std::array<Mat, 3> cas2;
  for (int k = 0; k < 3; ++k) {
    cas2[k] = evaluate(ctx, rep, rtc[k]);
    out.push_back(matrices_equal(
        "renormalized central word " + std::to_string(k + 1) + " matches the rank-two form",
        cas[k] * xp, cas2[k]));
    xp = xp * x;
  }
  out.push_back(matrices_equal("third rank-two central word is the constant",
                               cas2[2],
                               Mat::identity(rep.dim()) * q_pow(ctx, -2)));
  push_series_equal(out, "renormalized central series matches the rank-two form",
                    series_scale_arg(central_series_from(ctx, cas, order), x),
                    central_series_from(ctx, cas2, order));
  return out;
}

}  // namespace qgl3
