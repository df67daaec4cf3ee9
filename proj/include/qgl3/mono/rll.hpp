// Exchange relation between the positional exchange matrix and a monodromy
// block family: both sides are expanded as exact polynomials in the two
// spectral variables with operator coefficients, entry by entry, so a
// truncation never hides a residual.  Also houses the cyclic relabeling
// used by the rotated variants.
#pragma once

#include "qgl3/checks/identity.hpp"
#include "qgl3/mono/closedform.hpp"
#include "qgl3/mono/rmatrix.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>

namespace qgl3 {

// A 3x3 family of sparse one-variable polynomials with matrix coefficients,
// exponents absolute (pattern power plus block periods).
template <class Ctx>
struct MonoEntryPolys {
  using Mat = Matrix<typename Ctx::S>;
  using Poly = std::map<long, Mat>;
  std::array<std::array<Poly, 3>, 3> entry;
  std::size_t dim = 0;

  bool operator==(const MonoEntryPolys&) const = default;
};

template <class Ctx>
MonoEntryPolys<Ctx> entry_polynomials(const GradedMatrix<Matrix<typename Ctx::S>>& g) {
  MonoEntryPolys<Ctx> m;
  m.dim = g(0, 0)[0].rows();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const long base = pattern_exponent(g.s, a, b);
      for (std::size_t k = 0; k <= g(a, b).order(); ++k)
        if (!g(a, b)[k].is_zero())
          m.entry[a][b].emplace(base + static_cast<long>(k) * g.s.s_delta(), g(a, b)[k]);
    }
  return m;
}

// Entry (a, b) taken from (a + step, b + step) mod 3: simultaneous cyclic
// relabeling of both tensor slots.
template <class Ctx>
MonoEntryPolys<Ctx> rotate_positions(const MonoEntryPolys<Ctx>& m, int step) {
  MonoEntryPolys<Ctx> out;
  out.dim = m.dim;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) out.entry[a][b] = m.entry[(a + step) % 3][(b + step) % 3];
  return out;
}

// One cyclic step of the grading relabeling that accompanies the rotation.
inline GradingSpec rotate_grading(const GradingSpec& s, int step) {
  GradingSpec out = s;
  for (int t = 0; t < step; ++t) out = GradingSpec{out.s1, out.s2, out.s0};
  return out;
}

template <class Ctx>
using ExchangeComponents = std::array<std::array<typename RMatrixData<Ctx>::Poly, 9>, 9>;

// Row-transposed reading of the exchange matrix: pair row (a,b), pair column
// (c,d) holds the component (a,b) -> (d,c).
template <class Ctx>
ExchangeComponents<Ctx> exchange_components(const RMatrixData<Ctx>& r) {
  ExchangeComponents<Ctx> rh;
  for (int i = 0; i < 9; ++i)
    for (int c = 0; c < 3; ++c)
      for (int d = 0; d < 3; ++d) rh[i][3 * c + d] = r.component(i, 3 * d + c);
  return rh;
}

// Conjugation by the cyclic slot permutation on both tensor factors.
template <class Ctx>
ExchangeComponents<Ctx> rotate_exchange(const ExchangeComponents<Ctx>& rh, int step) {
  const auto p = [step](int i) {
    return 3 * ((i / 3 + step) % 3) + (i % 3 + step) % 3;
  };
  ExchangeComponents<Ctx> out;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) out[i][j] = rh[p(i)][p(j)];
  return out;
}

namespace rll_detail {

template <class K, class Mat>
void add_term(std::map<K, Mat>& z, const K& key, const Mat& v) {
  auto it = z.find(key);
  if (it == z.end())
    z.emplace(key, v);
  else
    it->second += v;
}

}  // namespace rll_detail

// R (M x M) = (M~ x M~) R with the spectral variables swapped on the right,
// checked as an exact identity per pair entry.  The first nonzero residual
// names the pair row, pair column, and monomial.  A nonnegative
// max_total_degree restricts the residual scan to monomials with
// e1 + e2 <= max_total_degree; entries carrying a truncated series are only
// reliable that far, while the exact block families need no bound.
template <class Ctx>
IdentityResult check_exchange_relation(const std::string& label,
                                       const ExchangeComponents<Ctx>& rh,
                                       const MonoEntryPolys<Ctx>& m,
                                       long max_total_degree = -1) {
  using Mat = Matrix<typename Ctx::S>;
  using Z2M = std::map<std::pair<long, long>, Mat>;
  using rll_detail::add_term;

  // (M x M) pair entry (l -> j): sum over products M_ac(z1) M_bd(z2); the
  // swapped side reads the same product with the variable roles exchanged.
  const auto box = [&m](int l, int j, bool swapped) {
    const int a = l / 3, b = l % 3, c = j / 3, d = j % 3;
    Z2M out;
    for (const auto& [e1, v1] : m.entry[a][c])
      for (const auto& [e2, v2] : m.entry[b][d])
        add_term(out, swapped ? std::pair{e2, e1} : std::pair{e1, e2}, v1 * v2);
    return out;
  };

  std::array<std::array<Z2M, 9>, 9> b12, b21;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) {
      b12[i][j] = box(i, j, false);
      b21[i][j] = box(i, j, true);
    }

  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) {
      Z2M res;
      for (int l = 0; l < 9; ++l) {
        for (const auto& [e, sc] : rh[i][l])
          for (const auto& [k, mv] : b12[l][j])
            add_term(res, std::pair{e + k.first, k.second - e}, mv * sc);
        for (const auto& [k, mv] : b21[i][l])
          for (const auto& [e, sc] : rh[l][j])
            add_term(res, std::pair{k.first + e, k.second - e}, -(mv * sc));
      }
      for (const auto& [k, v] : res) {
        if (max_total_degree >= 0 && k.first + k.second > max_total_degree) continue;
        if (!v.is_zero())
          return {label, false,
                  "pair row (" + std::to_string(i / 3 + 1) + "," + std::to_string(i % 3 + 1) +
                      "), pair column (" + std::to_string(j / 3 + 1) + "," +
                      std::to_string(j % 3 + 1) + "), monomial z1^(" +
                      std::to_string(k.first) + ") z2^(" + std::to_string(k.second) + ")"};
      }
    }
  return {label, true, ""};
}

}  // namespace qgl3
