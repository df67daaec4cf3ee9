#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgl3/loop/images.hpp"
#include "qgl3/loop/ktfactors.hpp"
#include "qgl3/loop/rootvectors.hpp"

using namespace qgl3;

namespace {

const SymbolicQ ctx{};
using S = SymbolicQ::S;
using Mat = Matrix<S>;

const Representation<SymbolicQ>& fund() {
  static const auto r = fundamental(ctx);
  return r;
}
const Representation<SymbolicQ>& square() {
  static const auto r = tensor(ctx, fund(), fund());
  return r;
}
const Representation<SymbolicQ>& cube() {
  static const auto r = tensor(ctx, square(), fund());
  return r;
}

void require_all(const std::vector<IdentityResult>& rs) {
  for (const auto& r : rs) {
    INFO(r.label << (r.detail.empty() ? "" : ": " + r.detail));
    CHECK(r.ok);
  }
}

ZSeries<Mat> unit_series(std::size_t order, std::size_t dim) {
  ZSeries<Mat> s = ZSeries<Mat>::zeros(order, Mat(dim, dim));
  s[0] = Mat::identity(dim);
  return s;
}

}  // namespace

TEST_CASE("loop relations hold for every image variant") {
  const LoopVariant variants[] = {LoopVariant::standard, LoopVariant::traceless,
                                  LoopVariant::twisted, LoopVariant::rotated2,
                                  LoopVariant::rotated3};
  for (LoopVariant v : variants) {
    const LoopImages im = loop_images(v);
    require_all(check_loop_relations(ctx, fund(), im));
    require_all(check_loop_relations(ctx, square(), im));
  }
}

TEST_CASE("lowest root images in the defining representation") {
  const LoopImages im = loop_images();
  CHECK(evaluate(ctx, fund(), im.e[0]) == Mat::unit(3, 2, 0) * q_pow(ctx, -1));
  CHECK(evaluate(ctx, fund(), im.f[0]) == Mat::unit(3, 0, 2) * q_pow(ctx, 1));
  const LoopImages sl = loop_images(LoopVariant::traceless);
  CHECK(evaluate(ctx, fund(), sl.e[0]) == Mat::unit(3, 2, 0) * q_pow_sixths(ctx, -2));
  CHECK(evaluate(ctx, fund(), sl.f[0]) == Mat::unit(3, 0, 2) * q_pow_sixths(ctx, 2));
}

TEST_CASE("dual root seeds collapse to single words") {
  const LoopImages im = loop_images();
  auto [e3x, f3x] = composite_generators();
  (void)e3x;

  const AlgebraExpression dual_a =
      gen(Gen::F1) * AlgebraExpression::cartan(CartanMonomial{-1, -1, 0});
  const AlgebraExpression dual_b =
      (-q_pow(ctx, 1)) * (gen(Gen::F2) * AlgebraExpression::cartan(CartanMonomial{0, -1, -1})) +
      (kappa(ctx) * q_pow(ctx, -1)) *
          (f3x * gen(Gen::E1) * AlgebraExpression::cartan(CartanMonomial{-1, 0, -1}));

  for (const auto* rep : {&fund(), &square(), &cube()}) {
    const auto seeds = root_seeds(ctx, *rep, im);
    CHECK(seeds.e_dual[0] == evaluate(ctx, *rep, dual_a));
    CHECK(seeds.e_dual[1] == evaluate(ctx, *rep, dual_b));
  }
}

TEST_CASE("raising towers in the defining representation") {
  const std::size_t order = 5;
  const auto rs = build_root_series(ctx, fund(), loop_images(), order);

  CHECK(rs.e_dual[0][0] == Mat::unit(3, 1, 0) * q_pow(ctx, -1));
  CHECK(rs.e_dual[1][0] == Mat::unit(3, 2, 1) * (-q_pow(ctx, -2)));

  for (std::size_t k = 0; k <= order; ++k) {
    S c = q_pow(ctx, 0);
    for (std::size_t j = 0; j < k; ++j) c = c * (-q_pow(ctx, -2));
    CHECK(rs.e_root[0][k] == Mat::unit(3, 0, 1) * c);
  }

  Mat lvl(3, 3);
  lvl(0, 0) = q_pow(ctx, -1);
  lvl(1, 1) = -q_pow(ctx, -3);
  CHECK(rs.e_im_prime[0][1] == lvl);
}

TEST_CASE("lowering towers in the defining representation") {
  const std::size_t order = 5;
  const auto rs = build_root_series(ctx, fund(), loop_images(), order);

  for (std::size_t k = 0; k <= order; ++k) {
    const long lk = static_cast<long>(k);
    const S sgn = ctx.from_rational(Rational(k % 2 ? -1 : 1));
    CHECK(rs.f_root[0][k] == Mat::unit(3, 1, 0) * (sgn * q_pow(ctx, 2 * lk)));
    CHECK(rs.f_dual[0][k] == Mat::unit(3, 0, 1) * (sgn * q_pow(ctx, 2 * lk + 1)));
    CHECK(rs.f_root[1][k] == Mat::unit(3, 2, 1) * q_pow(ctx, 3 * lk));
    CHECK(rs.f_dual[1][k] == Mat::unit(3, 1, 2) * (-q_pow(ctx, 3 * lk + 2)));
    CHECK(rs.f_root[2][k] == Mat::unit(3, 2, 0) * (sgn * q_pow(ctx, 2 * lk)));
    CHECK(rs.f_dual[2][k] == Mat::unit(3, 0, 2) * (sgn * q_pow(ctx, 2 * lk + 1)));
  }

  for (std::size_t k = 1; k <= order; ++k) {
    const long lk = static_cast<long>(k);
    const S ratio = qnum(ctx, static_cast<int>(k)) * ctx.from_rational(make_ratio(1, lk));
    const S sgn = ctx.from_rational(Rational(k % 2 ? 1 : -1));
    Mat da(3, 3), db(3, 3);
    da(0, 0) = sgn * ratio * q_pow(ctx, lk);
    da(1, 1) = -(sgn * ratio * q_pow(ctx, 3 * lk));
    db(1, 1) = -(ratio * q_pow(ctx, 2 * lk));
    db(2, 2) = ratio * q_pow(ctx, 4 * lk);
    CHECK(rs.f_im[0][k] == da);
    CHECK(rs.f_im[1][k] == db);
  }
}

TEST_CASE("level families commute") {
  for (const auto* rep : {&fund(), &square()}) {
    const auto rs = build_root_series(ctx, *rep, loop_images(), 4);
    require_all(check_level_family_commutes<SymbolicQ>(rs));
  }
}

TEST_CASE("diagonal factor logs differ by the first level log") {
  const std::size_t order = 5;
  for (const auto* rep : {&fund(), &square()}) {
    const auto rs = build_root_series(ctx, *rep, loop_images(), order);
    const auto kt = build_kt_factors(ctx, *rep, rs);
    const auto expected =
        detail::scale_coeffs(series_scale_arg(rs.e_im[0], -q_pow(ctx, 2)), kappa(ctx));
    CHECK(kt.logv22 - kt.logv11 == expected);

    const auto ktt = build_kt_factors_twisted(ctx, *rep, rs);
    const auto expected_t =
        detail::scale_coeffs(series_scale_arg(rs.e_im[1], -q_pow(ctx, 2)), kappa(ctx));
    CHECK(ktt.logv22 - ktt.logv11 == expected_t);
  }
}

TEST_CASE("shifted diagonal triple product is one") {
  const std::size_t order = 5;
  for (const auto* rep : {&fund(), &square()}) {
    const auto rs = build_root_series(ctx, *rep, loop_images(), order);
    const auto kt = build_kt_factors(ctx, *rep, rs);
    const auto prod = series_scale_arg(kt.v11, q_pow(ctx, 2)) * kt.v22 *
                      series_scale_arg(kt.v33, q_pow(ctx, -2));
    CHECK(prod == unit_series(order, rep->dim()));
  }
}

TEST_CASE("primed level family from consecutive diagonal factors") {
  const std::size_t order = 5;
  for (const auto* rep : {&fund(), &square()}) {
    const auto rs = build_root_series(ctx, *rep, loop_images(), order);
    const auto kt = build_kt_factors(ctx, *rep, rs);

    ZSeries<Mat> lhs_a = unit_series(order, rep->dim());
    ZSeries<Mat> lhs_b = unit_series(order, rep->dim());
    for (std::size_t k = 1; k <= order; ++k) {
      lhs_a[k] = rs.e_im_prime[0][k] * kappa(ctx);
      lhs_b[k] = rs.e_im_prime[1][k] * kappa(ctx);
    }
    const auto rhs_a = series_inverse(series_scale_arg(kt.v11, -q_pow(ctx, -2))) *
                       series_scale_arg(kt.v22, -q_pow(ctx, -2));
    const auto rhs_b = series_inverse(series_scale_arg(kt.v22, q_pow(ctx, -3))) *
                       series_scale_arg(kt.v33, q_pow(ctx, -3));
    CHECK(lhs_a == rhs_a);
    CHECK(lhs_b == rhs_b);
  }
}

TEST_CASE("towers respond to slot rescaling through the grading") {
  const GradingSpec gradings[] = {{1, 1, 1}, {1, 0, 0}, {2, 1, 3}};
  for (const auto& s : gradings)
    require_all(
        check_grading_response(ctx, fund(), loop_images(), s, 3, make_ratio(2, 1)));
}

TEST_CASE("slot rotation is conjugation up to a diagonal gauge") {
  Mat sigma(3, 3);
  sigma(0, 2) = q_pow(ctx, 0);
  sigma(1, 0) = q_pow(ctx, 0);
  sigma(2, 1) = q_pow(ctx, 0);
  Mat sigma_inv(3, 3);
  sigma_inv(2, 0) = q_pow(ctx, 0);
  sigma_inv(0, 1) = q_pow(ctx, 0);
  sigma_inv(1, 2) = q_pow(ctx, 0);
  Mat t(3, 3), t_inv(3, 3);
  t(0, 0) = q_pow(ctx, 0);
  t(1, 1) = q_pow(ctx, 0);
  t(2, 2) = q_pow(ctx, -1);
  t_inv(0, 0) = q_pow(ctx, 0);
  t_inv(1, 1) = q_pow(ctx, 0);
  t_inv(2, 2) = q_pow(ctx, 1);

  const LoopImages std_im = loop_images();
  const LoopImages rot2 = loop_images(LoopVariant::rotated2);
  const LoopImages rot3 = loop_images(LoopVariant::rotated3);

  auto conj_back = [&](const Mat& m) { return t * (sigma_inv * m * sigma) * t_inv; };
  auto conj_fwd = [&](const Mat& m) {
    return (sigma * t_inv) * m * (t * sigma_inv);
  };

  for (int c = 0; c < 3; ++c) {
    CHECK(evaluate(ctx, fund(), rot2.e[c]) == conj_back(evaluate(ctx, fund(), std_im.e[c])));
    CHECK(evaluate(ctx, fund(), rot2.f[c]) == conj_back(evaluate(ctx, fund(), std_im.f[c])));
    CHECK(cartan_eval(ctx, fund(), rot2.h[c]) ==
          sigma_inv * cartan_eval(ctx, fund(), std_im.h[c]) * sigma);
    CHECK(evaluate(ctx, fund(), rot3.e[c]) == conj_fwd(evaluate(ctx, fund(), std_im.e[c])));
    CHECK(evaluate(ctx, fund(), rot3.f[c]) == conj_fwd(evaluate(ctx, fund(), std_im.f[c])));
    CHECK(cartan_eval(ctx, fund(), rot3.h[c]) ==
          sigma * cartan_eval(ctx, fund(), std_im.h[c]) * sigma_inv);
  }
}
