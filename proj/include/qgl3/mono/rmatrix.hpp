// The positional exchange matrix on the 9-dimensional tensor square of the
// defining space: sparse one-variable Laurent polynomials per component pair,
// a constant diagonal tail, and the exact 27-dimensional triple-exchange
// consistency check in two independent spectral ratios.
#pragma once

#include "qgl3/checks/identity.hpp"
#include "qgl3/loop/ktfactors.hpp"
#include "qgl3/scalar/qcontext.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qgl3 {

// Component (i, j) with i = 3a + b, j = 3c + d addresses the pair
// (a,b) -> (c,d).  The b-block is the polynomial part with the common scalar
// prefactor stripped; k_diag is the constant diagonal tail, indexed by the
// column pair.
template <class Ctx>
struct RMatrixData {
  using S = typename Ctx::S;
  using Poly = std::map<long, S>;

  GradingSpec s;
  std::array<std::array<Poly, 9>, 9> b;
  std::array<S, 9> k_diag;

  Poly component(int i, int j) const {
    Poly r;
    for (const auto& [e, v] : b[i][j]) r.emplace(e, v * k_diag[j]);
    return r;
  }
};

template <class Ctx>
RMatrixData<Ctx> r_matrix(const Ctx& ctx, const GradingSpec& s) {
  using S = typename Ctx::S;
  RMatrixData<Ctx> r;
  r.s = s;
  const S one = q_pow(ctx, 0);
  const S kap = kappa(ctx);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const int i = 3 * a + b;
      auto& diag = r.b[i][i];
      diag[0] = one;
      diag[s.s_delta()] = a == b ? -q_pow(ctx, -2) : -one;
      if (a != b) r.b[i][3 * b + a][pattern_exponent(s, b, a)] = kap;
      r.k_diag[i] = q_pow_sixths(ctx, a == b ? 4 : -2);
    }
  return r;
}

// Triple-exchange consistency on three tensor slots, sparse over exact
// two-variable Laurent polynomials in the independent ratios of the three
// spectral parameters; the scalar prefactors cancel identically, so the
// comparison needs no truncation.
template <class Ctx>
IdentityResult check_triple_exchange(const Ctx& ctx, const GradingSpec& s) {
  using S = typename Ctx::S;
  using Z2 = std::map<std::pair<long, long>, S>;
  using SparseRows = std::vector<std::map<int, Z2>>;

  const RMatrixData<Ctx> r = r_matrix(ctx, s);

  // Embed the component matrix on slots (l1, l2) of the cube, weighting the
  // polynomial exponent into the two ratio variables by (w1, w2).
  const auto embed = [&](int l1, int l2, long w1, long w2) {
    SparseRows rows(27);
    for (int i = 0; i < 27; ++i) {
      const int d[3] = {i / 9, (i / 3) % 3, i % 3};
      const int p = 3 * d[l1] + d[l2];
      for (int c1 = 0; c1 < 3; ++c1)
        for (int c2 = 0; c2 < 3; ++c2) {
          const auto poly = r.component(p, 3 * c1 + c2);
          if (poly.empty()) continue;
          int e[3] = {d[0], d[1], d[2]};
          e[l1] = c1;
          e[l2] = c2;
          Z2& cell = rows[i][9 * e[0] + 3 * e[1] + e[2]];
          for (const auto& [m, v] : poly) cell[{m * w1, m * w2}] += v;
        }
    }
    return rows;
  };

  const auto mul = [](const SparseRows& x, const SparseRows& y) {
    SparseRows out(27);
    for (int i = 0; i < 27; ++i)
      for (const auto& [k, px] : x[i])
        for (const auto& [j, py] : y[k]) {
          Z2& acc = out[i][j];
          for (const auto& [ex, vx] : px)
            for (const auto& [ey, vy] : py)
              acc[{ex.first + ey.first, ex.second + ey.second}] += vx * vy;
        }
    return out;
  };

  const SparseRows r12 = embed(0, 1, 1, 0);
  const SparseRows r13 = embed(0, 2, 1, 1);
  const SparseRows r23 = embed(1, 2, 0, 1);
  const SparseRows lhs = mul(mul(r12, r13), r23);
  const SparseRows rhs = mul(mul(r23, r13), r12);

  for (int i = 0; i < 27; ++i) {
    std::map<int, Z2> res = lhs[i];
    for (const auto& [j, py] : rhs[i])
      for (const auto& [e, v] : py) res[j][e] -= v;
    for (const auto& [j, p] : res)
      for (const auto& [e, v] : p)
        if (!scalar_is_zero(v))
          return {"triple exchange", false,
                  "row " + std::to_string(i + 1) + ", column " + std::to_string(j + 1) +
                      ", monomial u^(" + std::to_string(e.first) + ") v^(" +
                      std::to_string(e.second) + "): " + scalar_dump(v)};
  }
  return {"triple exchange", true, ""};
}

}  // namespace qgl3
