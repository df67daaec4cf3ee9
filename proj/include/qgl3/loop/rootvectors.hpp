#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "qgl3/checks/identity.hpp"
#include "qgl3/loop/images.hpp"
#include "qgl3/rep/matrix.hpp"
#include "qgl3/rep/representation.hpp"
#include "qgl3/scalar/series.hpp"

namespace qgl3 {

// Positive finite roots, indexed 0 -> alpha (slot 1), 1 -> beta (slot 2),
// 2 -> alpha+beta.
enum class FiniteRoot { alpha = 0, beta = 1, alpha_beta = 2 };

inline const char* root_name(int g) {
  static const char* names[3] = {"alpha", "beta", "alpha+beta"};
  return names[g];
}

// Evaluated root-vector towers over one representation.  For each finite
// root gamma, coefficient k of:
//   e_root[gamma]  - the raising vector at gamma plus k copies of the null root,
//   e_dual[gamma]  - the raising vector at (null - gamma) plus k copies,
//   e_im_prime[gamma] - the primed level family (coefficient 0 is zero),
//   e_im[gamma]    - its logarithm, the commuting level family,
// and the four mirrored lowering towers.
template <class Ctx>
struct RootSeriesSet {
  using S = typename Ctx::S;
  using Mat = Matrix<S>;
  std::array<ZSeries<Mat>, 3> e_root, e_dual, e_im_prime, e_im;
  std::array<ZSeries<Mat>, 3> f_root, f_dual, f_im_prime, f_im;
};

// Level-zero seed matrices: simple vectors straight from the images, the
// composite finite root via q-commutators, dual roots via the lowest slot.
template <class Ctx>
struct RootSeeds {
  using Mat = Matrix<typename Ctx::S>;
  std::array<Mat, 3> e_root, e_dual, f_root, f_dual;
};

template <class Ctx>
RootSeeds<Ctx> root_seeds_from(const Ctx& ctx,
                               const std::array<Matrix<typename Ctx::S>, 3>& e,
                               const std::array<Matrix<typename Ctx::S>, 3>& f) {
  const auto qm = q_pow(ctx, -1);
  const auto qp = q_pow(ctx, 1);
  RootSeeds<Ctx> s;
  s.e_root = {e[1], e[2], e[1] * e[2] - (e[2] * e[1]) * qm};
  s.e_dual = {e[2] * e[0] - (e[0] * e[2]) * qm, e[1] * e[0] - (e[0] * e[1]) * qm, e[0]};
  s.f_root = {f[1], f[2], f[2] * f[1] - (f[1] * f[2]) * qp};
  s.f_dual = {f[0] * f[2] - (f[2] * f[0]) * qp, f[0] * f[1] - (f[1] * f[0]) * qp, f[0]};
  return s;
}

template <class Ctx>
RootSeeds<Ctx> root_seeds(const Ctx& ctx, const Representation<Ctx>& rep,
                          const LoopImages& im) {
  using Mat = Matrix<typename Ctx::S>;
  const std::array<Mat, 3> e = {evaluate(ctx, rep, im.e[0]), evaluate(ctx, rep, im.e[1]),
                                evaluate(ctx, rep, im.e[2])};
  const std::array<Mat, 3> f = {evaluate(ctx, rep, im.f[0]), evaluate(ctx, rep, im.f[1]),
                                evaluate(ctx, rep, im.f[2])};
  return root_seeds_from(ctx, e, f);
}

// Grows the towers from the seeds.  The raising side iterates
//   x_k = [2]^{-1} (x_{k-1} p - p x_{k-1}),   y_k = [2]^{-1} (p y_{k-1} - y_{k-1} p),
//   p_k = x_{k-1} y_0 - q^{-2} y_0 x_{k-1},
// with p = p_1 the level-one element; the lowering side mirrors this with
// q^{+2} and reversed factor order.  The commuting level families are the
// (scaled) logarithms of 1 +- kappa * (primed family).
template <class Ctx>
RootSeriesSet<Ctx> build_root_series_from(const Ctx& ctx, const RootSeeds<Ctx>& seeds,
                                          std::size_t order) {
  using S = typename Ctx::S;
  using Mat = Matrix<S>;

  const S qm2 = q_pow(ctx, -2);
  const S qp2 = q_pow(ctx, 2);
  const S two_inv = SeriesTraits<S>::invert_unit(qnum(ctx, 2));
  const S kap = kappa(ctx);
  const S kap_inv = SeriesTraits<S>::invert_unit(kap);

  RootSeriesSet<Ctx> rs;
  for (int g = 0; g < 3; ++g) {
    const Mat& x0 = seeds.e_root[g];
    const Mat& y0 = seeds.e_dual[g];
    const Mat zero(x0.rows(), x0.cols());
    const Mat id = Mat::identity(x0.rows());

    std::vector<Mat> xs(order + 1, zero), ys(order + 1, zero), ps(order + 1, zero);
    std::vector<Mat> one_plus(order + 1, zero);
    xs[0] = x0;
    ys[0] = y0;
    one_plus[0] = id;
    Mat p1 = x0 * y0 - (y0 * x0) * qm2;
    for (std::size_t k = 1; k <= order; ++k) {
      ps[k] = xs[k - 1] * y0 - (y0 * xs[k - 1]) * qm2;
      xs[k] = (xs[k - 1] * p1 - p1 * xs[k - 1]) * two_inv;
      ys[k] = (p1 * ys[k - 1] - ys[k - 1] * p1) * two_inv;
      one_plus[k] = ps[k] * kap;
    }
    rs.e_root[g] = ZSeries<Mat>(xs);
    rs.e_dual[g] = ZSeries<Mat>(ys);
    rs.e_im_prime[g] = ZSeries<Mat>(ps);
    ZSeries<Mat> lg = series_log(ZSeries<Mat>(one_plus));
    for (std::size_t k = 0; k <= order; ++k) lg[k] = lg[k] * kap_inv;
    rs.e_im[g] = lg;

    const Mat& u0 = seeds.f_root[g];
    const Mat& v0 = seeds.f_dual[g];
    std::vector<Mat> us(order + 1, zero), vs(order + 1, zero), qs(order + 1, zero);
    std::vector<Mat> one_minus(order + 1, zero);
    us[0] = u0;
    vs[0] = v0;
    one_minus[0] = id;
    Mat r1 = v0 * u0 - (u0 * v0) * qp2;
    for (std::size_t k = 1; k <= order; ++k) {
      qs[k] = v0 * us[k - 1] - (us[k - 1] * v0) * qp2;
      us[k] = (r1 * us[k - 1] - us[k - 1] * r1) * two_inv;
      vs[k] = (vs[k - 1] * r1 - r1 * vs[k - 1]) * two_inv;
      one_minus[k] = -(qs[k] * kap);
    }
    rs.f_root[g] = ZSeries<Mat>(us);
    rs.f_dual[g] = ZSeries<Mat>(vs);
    rs.f_im_prime[g] = ZSeries<Mat>(qs);
    ZSeries<Mat> lgf = series_log(ZSeries<Mat>(one_minus));
    for (std::size_t k = 0; k <= order; ++k) lgf[k] = -(lgf[k] * kap_inv);
    rs.f_im[g] = lgf;
  }
  return rs;
}

template <class Ctx>
RootSeriesSet<Ctx> build_root_series(const Ctx& ctx, const Representation<Ctx>& rep,
                                     const LoopImages& im, std::size_t order) {
  return build_root_series_from(ctx, root_seeds(ctx, rep, im), order);
}

// Every pair of coefficients within one level family must commute; this is
// what makes the diagonal factor logs well defined.
template <class Ctx>
std::vector<IdentityResult> check_level_family_commutes(const RootSeriesSet<Ctx>& rs) {
  std::vector<IdentityResult> out;
  auto run = [&](const char* side, const std::array<ZSeries<Matrix<typename Ctx::S>>, 3>& fam) {
    for (int g = 0; g < 3; ++g)
      for (std::size_t j = 1; j <= fam[g].order(); ++j)
        for (std::size_t k = j + 1; k <= fam[g].order(); ++k)
          out.push_back(matrix_vanishes(
              std::string(side) + " level family " + root_name(g) + " [" +
                  std::to_string(j) + "," + std::to_string(k) + "]",
              fam[g][j] * fam[g][k] - fam[g][k] * fam[g][j]));
  };
  run("raising", rs.e_im_prime);
  run("lowering", rs.f_im_prime);
  return out;
}

}  // namespace qgl3
