#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qgl3/algebra/gl3.hpp"
#include "qgl3/rep/representation.hpp"
#include "qgl3/scalar/series.hpp"

namespace qgl3 {

// Commutative polynomial in the three central words; monomial exponent
// triple -> rational coefficient.  The center is commutative, so the
// generating-series logarithm is computed once at this symbolic level and
// evaluated in any representation afterwards.
struct CenterPoly {
  std::map<std::array<int, 3>, Rational> terms;

  static CenterPoly constant(const Rational& c) {
    CenterPoly p;
    if (c != 0) p.terms[{0, 0, 0}] = c;
    return p;
  }
  static CenterPoly word(int i) {
    CenterPoly p;
    std::array<int, 3> m = {0, 0, 0};
    m[static_cast<std::size_t>(i)] = 1;
    p.terms[m] = 1;
    return p;
  }
  bool is_zero() const { return terms.empty(); }
  bool operator==(const CenterPoly&) const = default;
};

inline CenterPoly operator+(const CenterPoly& a, const CenterPoly& b) {
  CenterPoly r = a;
  for (const auto& [m, c] : b.terms) {
    Rational& slot = r.terms[m];
    slot += c;
    if (slot == 0) r.terms.erase(m);
  }
  return r;
}

inline CenterPoly operator*(const CenterPoly& a, const CenterPoly& b) {
  CenterPoly r;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      const std::array<int, 3> m = {ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
      Rational& slot = r.terms[m];
      slot += ca * cb;
      if (slot == 0) r.terms.erase(m);
    }
  return r;
}

inline CenterPoly operator*(const CenterPoly& a, const Rational& c) {
  CenterPoly r;
  if (c == 0) return r;
  for (const auto& [m, v] : a.terms) r.terms[m] = v * c;
  return r;
}

/// Words F_1..F_order of the central generating relation: F_k is k times the
// k-th coefficient of -log(1 - c1 z - c2 z^2 - c3 z^3).  Index 0 is unused.
inline std::vector<CenterPoly> center_log_words(std::size_t order) {
  std::vector<CenterPoly> n(order + 1);
  if (order >= 1) n[1] = CenterPoly::word(0);
  if (order >= 2) n[2] = CenterPoly::word(1);
  if (order >= 3) n[3] = CenterPoly::word(2);

  std::vector<CenterPoly> acc(order + 1), pw = n;
  for (std::size_t j = 1; j <= order; ++j) {
    if (j > 1) {
      std::vector<CenterPoly> next(order + 1);
      for (std::size_t u = 1; u <= order; ++u)
        for (std::size_t v = 1; u + v <= order; ++v) {
          if (pw[u].is_zero() || n[v].is_zero()) continue;
          next[u + v] = next[u + v] + pw[u] * n[v];
        }
      pw = next;
    }
    for (std::size_t k = j; k <= order; ++k) acc[k] = acc[k] + pw[k] * make_ratio(1, static_cast<long>(j));
  }
  std::vector<CenterPoly> f(order + 1);
  for (std::size_t k = 1; k <= order; ++k) f[k] = acc[k] * Rational(static_cast<long>(k));
  return f;
}

template <class Ctx>
Matrix<typename Ctx::S> center_poly_eval(const Ctx& ctx, const CenterPoly& p,
                                         const std::array<Matrix<typename Ctx::S>, 3>& c) {
  using Mat = Matrix<typename Ctx::S>;
  const std::size_t n = c[0].rows();
  std::array<std::vector<Mat>, 3> pows;
  for (int i = 0; i < 3; ++i) pows[i].push_back(Mat::identity(n));
  auto power = [&](int i, int e) {
    while (static_cast<int>(pows[i].size()) <= e) pows[i].push_back(pows[i].back() * c[i]);
    return pows[i][static_cast<std::size_t>(e)];
  };
  Mat acc(n, n);
  for (const auto& [m, coeff] : p.terms) {
    Mat term = power(0, m[0]) * power(1, m[1]) * power(2, m[2]);
    acc = acc + term * ctx.from_rational(coeff);
  }
  return acc;
}

template <class Ctx>
std::array<Matrix<typename Ctx::S>, 3> casimir_matrices(const Ctx& ctx,
                                                        const Representation<Ctx>& rep) {
  return {evaluate(ctx, rep, casimir(1)), evaluate(ctx, rep, casimir(2)),
          evaluate(ctx, rep, casimir(3))};
}

// Central scalar series F(z) = sum_{k>=1} F_k z^k / (k (q^{2k} + 1 + q^{-2k}))
// evaluated over a representation, built from given images of the three
// central words.
template <class Ctx>
ZSeries<Matrix<typename Ctx::S>> central_series_from(
    const Ctx& ctx, const std::array<Matrix<typename Ctx::S>, 3>& c, std::size_t order) {
  using Mat = Matrix<typename Ctx::S>;
  const std::vector<CenterPoly> f = center_log_words(order);
  ZSeries<Mat> r = ZSeries<Mat>::zeros(order, Mat(c[0].rows(), c[0].cols()));
  for (std::size_t k = 1; k <= order; ++k)
    r[k] = center_poly_eval(ctx, f[k], c) * prefactor_coefficient(ctx, static_cast<int>(k));
  return r;
}

template <class Ctx>
ZSeries<Matrix<typename Ctx::S>> central_series(const Ctx& ctx, const Representation<Ctx>& rep,
                                                std::size_t order) {
  return central_series_from(ctx, casimir_matrices(ctx, rep), order);
}

// Scalar prefactor series of the defining-representation image: the sum of
// the three shifted copies of the basic log series, f3(q^2 z) + f3(z) +
// f3(q^{-4} z) with f3(z) = sum_k z^k / (k (q^{2k} + 1 + q^{-2k})).
template <class Ctx>
ZSeries<typename Ctx::S> fundamental_prefactor_log(const Ctx& ctx, std::size_t order) {
  using S = typename Ctx::S;
  std::vector<S> c(order + 1, ctx.from_rational(Rational(0)));
  for (std::size_t k = 1; k <= order; ++k) {
    const long lk = static_cast<long>(k);
    c[k] = (q_pow(ctx, 2 * lk) + q_pow(ctx, 0) + q_pow(ctx, -4 * lk)) *
           prefactor_coefficient(ctx, static_cast<int>(k));
  }
  return ZSeries<S>(c);
}

}  // namespace qgl3
