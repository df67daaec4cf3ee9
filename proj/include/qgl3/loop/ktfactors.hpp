#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "qgl3/checks/identity.hpp"
#include "qgl3/loop/rootvectors.hpp"
#include "qgl3/rep/matrix.hpp"
#include "qgl3/scalar/series.hpp"

namespace qgl3 {

// Integer grading weights (s0, s1, s2) of the three loop slots.  Every series
// below lives in the block variable zeta^{s_delta}, s_delta = s0 + s1 + s2.
struct GradingSpec {
  long s0 = 1, s1 = 1, s2 = 1;
  long s_delta() const { return s0 + s1 + s2; }
  long s_alpha() const { return s1; }
  long s_beta() const { return s2; }
  bool valid() const { return s_delta() >= 1; }
};

inline long root_grading(const GradingSpec& s, int g) {
  switch (g) {
    case 0: return s.s_alpha();
    case 1: return s.s_beta();
    default: return s.s_alpha() + s.s_beta();
  }
}
inline long dual_grading(const GradingSpec& s, int g) {
  return s.s_delta() - root_grading(s, g);
}

// Charge of a 0-based matrix index: chi(0) = 0, chi(1) = s_alpha,
// chi(2) = s_alpha + s_beta.
inline long index_charge(const GradingSpec& s, int a) {
  return (a == 0) ? 0 : (a == 1) ? s.s_alpha() : s.s_alpha() + s.s_beta();
}

// zeta-power carried by entry (a,b), 0-based: chi(a) - chi(b), plus one block
// for strictly upper entries.  Entry (a,b) of a graded matrix is the stored
// series evaluated at zeta^{s_delta}, multiplied by zeta^{pattern_exponent}.
inline long pattern_exponent(const GradingSpec& s, int a, int b) {
  return index_charge(s, a) - index_charge(s, b) + (a < b ? s.s_delta() : 0);
}

// 3x3 matrix over series in the block variable, entries carrying the
// positional zeta-pattern above.  The product of two patterned entries lands
// on the target pattern shifted up by 0 or 1 blocks:
//   [a<c] + [c<b] - [a<b]  is always 0 or 1.
template <class T>
struct GradedMatrix {
  GradingSpec s;
  std::array<std::array<ZSeries<T>, 3>, 3> entry;

  const ZSeries<T>& operator()(int a, int b) const { return entry[a][b]; }
  ZSeries<T>& operator()(int a, int b) { return entry[a][b]; }
};

template <class T>
GradedMatrix<T> operator*(const GradedMatrix<T>& x, const GradedMatrix<T>& y) {
  GradedMatrix<T> out;
  out.s = x.s;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      ZSeries<T> acc = ZSeries<T>::zeros(x.entry[a][b].order(), x.entry[a][b][0]);
      for (int c = 0; c < 3; ++c) {
        ZSeries<T> term = x.entry[a][c] * y.entry[c][b];
        const int shift = (a < c ? 1 : 0) + (c < b ? 1 : 0) - (a < b ? 1 : 0);
        if (shift) term = series_shift_up(term, 1);
        acc = acc + term;
      }
      out.entry[a][b] = acc;
    }
  return out;
}

template <class T>
IdentityResult graded_matrices_equal(const std::string& label, const GradedMatrix<T>& x,
                                     const GradedMatrix<T>& y) {
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (std::size_t k = 0; k <= x.entry[a][b].order(); ++k)
        if (!(x.entry[a][b][k] == y.entry[a][b][k]))
          return {label, false,
                  "entry (" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                      "), block " + std::to_string(k)};
  return {label, true, ""};
}

// Triangular-diagonal factor data over one representation: the primed entry
// series as functions of a plain argument (pattern powers are attached only
// at assembly time), the diagonal factor logs, and the constant diagonal
// tail.  The twisted flavor carries the diagram-flipped data in the same
// positional slots.
template <class Ctx>
struct KTFactors {
  using S = typename Ctx::S;
  using Mat = Matrix<S>;
  ZSeries<Mat> u21, u31, u32;
  ZSeries<Mat> w12, w13, w23;
  ZSeries<Mat> logv11, logv22, logv33;
  ZSeries<Mat> v11, v22, v33;
  Mat d11, d22, d33;
};

namespace detail {

template <class Mat, class S>
ZSeries<Mat> scale_coeffs(ZSeries<Mat> a, const S& c) {
  for (std::size_t k = 0; k <= a.order(); ++k) a[k] = a[k] * c;
  return a;
}

// Shared diagonal-log assembly: coefficient k of the three logs as the
// stated combinations of the two level families A (first slot) and B
// (second slot), over the common denominator q^{4k} + q^{2k} + 1.
template <class Ctx>
void fill_diagonal_logs(const Ctx& ctx, const ZSeries<Matrix<typename Ctx::S>>& fam_a,
                        const ZSeries<Matrix<typename Ctx::S>>& fam_b,
                        KTFactors<Ctx>& kt) {
  using S = typename Ctx::S;
  using Mat = Matrix<S>;
  const std::size_t order = fam_a.order();
  const S kap = kappa(ctx);
  const Mat zero(fam_a[0].rows(), fam_a[0].cols());
  std::vector<Mat> l1(order + 1, zero), l2(order + 1, zero), l3(order + 1, zero);
  for (std::size_t k = 1; k <= order; ++k) {
    const S tri = q_pow(ctx, 4 * static_cast<long>(k)) + q_pow(ctx, 2 * static_cast<long>(k)) +
                  q_pow(ctx, 0);
    const S inv = SeriesTraits<S>::invert_unit(tri);
    const S sgn = q_pow(ctx, 0) * Rational(k % 2 ? -1 : 1);
    const long lk = static_cast<long>(k);
    const Mat a = fam_a[k];
    const Mat b = fam_b[k];
    l1[k] = -(a * (sgn * (q_pow(ctx, 4 * lk) + q_pow(ctx, 2 * lk)) * kap * inv) +
              b * (q_pow(ctx, 3 * lk) * kap * inv));
    l2[k] = a * (sgn * q_pow(ctx, 6 * lk) * kap * inv) - b * (q_pow(ctx, 3 * lk) * kap * inv);
    l3[k] = a * (sgn * q_pow(ctx, 6 * lk) * kap * inv) +
            b * ((q_pow(ctx, 7 * lk) + q_pow(ctx, 5 * lk)) * kap * inv);
  }
  kt.logv11 = ZSeries<Mat>(l1);
  kt.logv22 = ZSeries<Mat>(l2);
  kt.logv33 = ZSeries<Mat>(l3);
  kt.v11 = series_exp(kt.logv11);
  kt.v22 = series_exp(kt.logv22);
  kt.v33 = series_exp(kt.logv33);
}

}  // namespace detail

template <class Ctx>
KTFactors<Ctx> build_kt_factors(const Ctx& ctx, const Representation<Ctx>& rep,
                                const RootSeriesSet<Ctx>& rs) {
  using S = typename Ctx::S;
  KTFactors<Ctx> kt;
  const S kap = kappa(ctx);
  const S qp = q_pow(ctx, 1);
  const S mq2 = -q_pow(ctx, 2);
  const S q3 = q_pow(ctx, 3);

  kt.u21 = detail::scale_coeffs(series_scale_arg(rs.e_root[0], mq2), kap);
  kt.u32 = detail::scale_coeffs(series_scale_arg(rs.e_root[1], q3), kap);
  kt.u31 = detail::scale_coeffs(series_scale_arg(rs.e_root[2], mq2), kap);
  kt.w12 = detail::scale_coeffs(series_scale_arg(rs.e_dual[0], mq2), kap * qp);
  kt.w23 = detail::scale_coeffs(series_scale_arg(rs.e_dual[1], q3), -(kap * qp * qp));
  kt.w13 = detail::scale_coeffs(series_scale_arg(rs.e_dual[2], mq2), kap * qp);

  detail::fill_diagonal_logs(ctx, rs.e_im[0], rs.e_im[1], kt);

  kt.d11 = cartan_eval(ctx, rep, make_ratio(2, 3), make_ratio(-1, 3), make_ratio(-1, 3));
  kt.d22 = cartan_eval(ctx, rep, make_ratio(-1, 3), make_ratio(2, 3), make_ratio(-1, 3));
  kt.d33 = cartan_eval(ctx, rep, make_ratio(-1, 3), make_ratio(-1, 3), make_ratio(2, 3));
  return kt;
}

// Diagram-flipped factors in the same positional slots: the two finite root
// families exchange roles, corner entries pick up the cross terms, and the
// constant diagonal reverses.
template <class Ctx>
KTFactors<Ctx> build_kt_factors_twisted(const Ctx& ctx, const Representation<Ctx>& rep,
                                        const RootSeriesSet<Ctx>& rs) {
  using S = typename Ctx::S;
  KTFactors<Ctx> kt;
  const S kap = kappa(ctx);
  const S qp = q_pow(ctx, 1);
  const S mq2 = -q_pow(ctx, 2);
  const S q3 = q_pow(ctx, 3);

  kt.u21 = detail::scale_coeffs(series_scale_arg(rs.e_root[1], mq2), kap);
  kt.u32 = detail::scale_coeffs(series_scale_arg(rs.e_root[0], q3), kap);
  kt.u31 = detail::scale_coeffs(series_scale_arg(rs.e_root[2], q3), -(kap * qp)) +
           kt.u32 * kt.u21;
  kt.w12 = detail::scale_coeffs(series_scale_arg(rs.e_dual[1], mq2), kap * qp);
  kt.w23 = detail::scale_coeffs(series_scale_arg(rs.e_dual[0], q3), -(kap * qp * qp));
  kt.w13 = detail::scale_coeffs(series_scale_arg(rs.e_dual[2], q3), kap * qp) +
           series_shift_up(kt.w12 * kt.w23, 1);

  detail::fill_diagonal_logs(ctx, rs.e_im[1], rs.e_im[0], kt);

  kt.d11 = cartan_eval(ctx, rep, make_ratio(1, 3), make_ratio(1, 3), make_ratio(-2, 3));
  kt.d22 = cartan_eval(ctx, rep, make_ratio(1, 3), make_ratio(-2, 3), make_ratio(1, 3));
  kt.d33 = cartan_eval(ctx, rep, make_ratio(-2, 3), make_ratio(1, 3), make_ratio(1, 3));
  return kt;
}

// Assembled unitriangular / diagonal factors as graded matrices.
template <class Ctx>
GradedMatrix<Matrix<typename Ctx::S>> assemble_lower(const KTFactors<Ctx>& kt,
                                                     const GradingSpec& s) {
  using Mat = Matrix<typename Ctx::S>;
  const std::size_t order = kt.u21.order();
  const std::size_t n = kt.u21[0].rows();
  GradedMatrix<Mat> m;
  m.s = s;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      m.entry[a][b] = ZSeries<Mat>::zeros(order, kt.u21[0]);
      if (a == b) m.entry[a][b][0] = Mat::identity(n);
    }
  m.entry[1][0] = kt.u21;
  m.entry[2][0] = kt.u31;
  m.entry[2][1] = kt.u32;
  return m;
}

template <class Ctx>
GradedMatrix<Matrix<typename Ctx::S>> assemble_upper(const KTFactors<Ctx>& kt,
                                                     const GradingSpec& s) {
  using Mat = Matrix<typename Ctx::S>;
  const std::size_t order = kt.w12.order();
  const std::size_t n = kt.w12[0].rows();
  GradedMatrix<Mat> m;
  m.s = s;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      m.entry[a][b] = ZSeries<Mat>::zeros(order, kt.w12[0]);
      if (a == b) m.entry[a][b][0] = Mat::identity(n);
    }
  m.entry[0][1] = kt.w12;
  m.entry[0][2] = kt.w13;
  m.entry[1][2] = kt.w23;
  return m;
}

template <class Ctx>
GradedMatrix<Matrix<typename Ctx::S>> assemble_diagonal(const KTFactors<Ctx>& kt,
                                                        const GradingSpec& s) {
  using Mat = Matrix<typename Ctx::S>;
  const std::size_t order = kt.v11.order();
  GradedMatrix<Mat> m;
  m.s = s;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) m.entry[a][b] = ZSeries<Mat>::zeros(order, kt.v11[0]);
  m.entry[0][0] = kt.v11;
  m.entry[1][1] = kt.v22;
  m.entry[2][2] = kt.v33;
  return m;
}

// The towers respond to rescaling the loop slots by characters of the
// grading: scaling slot c by rho^{s_c} multiplies coefficient k of the tower
// over root gamma by rho^{s_gamma + k s_delta} (dual tower: rho^{s_delta -
// s_gamma + k s_delta}; level families: rho^{k s_delta}), and mirrored with
// rho^{-...} on the lowering side.
template <class Ctx>
std::vector<IdentityResult> check_grading_response(const Ctx& ctx,
                                                   const Representation<Ctx>& rep,
                                                   const LoopImages& im, const GradingSpec& s,
                                                   std::size_t order, const Rational& rho) {
  using S = typename Ctx::S;
  using Mat = Matrix<S>;
  std::vector<IdentityResult> out;

  const RootSeriesSet<Ctx> base = build_root_series(ctx, rep, im, order);

  const long slot_weight[3] = {s.s0, s.s1, s.s2};
  std::array<Mat, 3> e, f;
  for (int c = 0; c < 3; ++c) {
    e[c] = evaluate(ctx, rep, im.e[c]) * ctx.from_rational(rat_pow(rho, slot_weight[c]));
    f[c] = evaluate(ctx, rep, im.f[c]) * ctx.from_rational(rat_pow(rho, -slot_weight[c]));
  }
  const RootSeriesSet<Ctx> scaled =
      build_root_series_from(ctx, root_seeds_from(ctx, e, f), order);

  auto expect = [&](const char* fam, const ZSeries<Mat>& got, const ZSeries<Mat>& ref, int g,
                    long weight0, long sign) {
    for (std::size_t k = 0; k <= got.order(); ++k) {
      const S c = ctx.from_rational(
          rat_pow(rho, sign * (weight0 + static_cast<long>(k) * s.s_delta())));
      out.push_back(matrices_equal(std::string(fam) + " " + root_name(g) + " block " +
                                       std::to_string(k),
                                   got[k], ref[k] * c));
    }
  };
  for (int g = 0; g < 3; ++g) {
    expect("raising tower", scaled.e_root[g], base.e_root[g], g, root_grading(s, g), 1);
    expect("raising dual tower", scaled.e_dual[g], base.e_dual[g], g, dual_grading(s, g), 1);
    expect("raising level family", scaled.e_im_prime[g], base.e_im_prime[g], g, 0, 1);
    expect("raising level log", scaled.e_im[g], base.e_im[g], g, 0, 1);
    expect("lowering tower", scaled.f_root[g], base.f_root[g], g, root_grading(s, g), -1);
    expect("lowering dual tower", scaled.f_dual[g], base.f_dual[g], g, dual_grading(s, g), -1);
    expect("lowering level family", scaled.f_im_prime[g], base.f_im_prime[g], g, 0, -1);
    expect("lowering level log", scaled.f_im[g], base.f_im[g], g, 0, -1);
  }
  return out;
}

// Full triangular product: lower * diagonal * upper, right-multiplied by the
// constant diagonal tail.  Central prefactors are not included.
template <class Ctx>
GradedMatrix<Matrix<typename Ctx::S>> kt_product(const Ctx& ctx, const KTFactors<Ctx>& kt,
                                                 const GradingSpec& s) {
  (void)ctx;
  using Mat = Matrix<typename Ctx::S>;
  GradedMatrix<Mat> m = assemble_lower(kt, s) * assemble_diagonal(kt, s) * assemble_upper(kt, s);
  const Mat d[3] = {kt.d11, kt.d22, kt.d33};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (std::size_t k = 0; k <= m.entry[a][b].order(); ++k)
        m.entry[a][b][k] = m.entry[a][b][k] * d[b];
  return m;
}

}  // namespace qgl3
