// Finite-dimensional weight representations: the 3-dimensional vector
// representation, the trivial one, tensor products via the fixed coproduct
// Delta(E_i) = E_i x 1 + q^{-H_i} x E_i, Delta(F_i) = F_i x q^{H_i} + 1 x F_i,
// expression evaluation, and exact highest-weight-vector extraction.
#pragma once

#include "qgl3/algebra/expression.hpp"
#include "qgl3/rep/matrix.hpp"
#include "qgl3/rep/weights.hpp"
#include "qgl3/scalar/qcontext.hpp"

#include <cassert>
#include <map>
#include <utility>
#include <vector>

namespace qgl3 {

template <class Ctx>
struct Representation {
  using S = typename Ctx::S;
  Matrix<S> e1, e2, f1, f2;
  std::vector<GLWeight> weights;

  std::size_t dim() const { return weights.size(); }
  const Matrix<S>& gen_matrix(Gen g) const {
    switch (g) {
      case Gen::E1: return e1;
      case Gen::E2: return e2;
      case Gen::F1: return f1;
      default: return f2;
    }
  }
};

inline FieldScalar to_scalar(const SymbolicQ&, const FieldScalar& f) { return f; }
inline Rational to_scalar(const NumericQ& c, const FieldScalar& f) {
  return f.eval_x(c.x);
}

template <class Ctx>
Representation<Ctx> fundamental(const Ctx&) {
  using S = typename Ctx::S;
  Representation<Ctx> r;
  r.e1 = Matrix<S>::unit(3, 0, 1);
  r.e2 = Matrix<S>::unit(3, 1, 2);
  r.f1 = Matrix<S>::unit(3, 1, 0);
  r.f2 = Matrix<S>::unit(3, 2, 1);
  r.weights = {{Rational(1), Rational(0), Rational(0)},
               {Rational(0), Rational(1), Rational(0)},
               {Rational(0), Rational(0), Rational(1)}};
  return r;
}

template <class Ctx>
Representation<Ctx> trivial_rep(const Ctx&) {
  using S = typename Ctx::S;
  Representation<Ctx> r;
  r.e1 = Matrix<S>(1, 1);
  r.e2 = Matrix<S>(1, 1);
  r.f1 = Matrix<S>(1, 1);
  r.f2 = Matrix<S>(1, 1);
  r.weights = {GLWeight{}};
  return r;
}

// Diagonal action of q^{a G1 + b G2 + c G3} read off the weight table.
template <class Ctx>
Matrix<typename Ctx::S> cartan_eval(const Ctx& ctx, const Representation<Ctx>& rep,
                                    const Rational& a, const Rational& b,
                                    const Rational& c) {
  Matrix<typename Ctx::S> m(rep.dim(), rep.dim());
  for (std::size_t i = 0; i < rep.dim(); ++i)
    m(i, i) = q_pow_rat(ctx, rep.weights[i].pair(a, b, c));
  return m;
}

template <class Ctx>
Matrix<typename Ctx::S> cartan_eval(const Ctx& ctx, const Representation<Ctx>& rep,
                                    const CartanMonomial& x) {
  return cartan_eval(ctx, rep, x.a, x.b, x.c);
}

template <class Ctx>
Representation<Ctx> tensor(const Ctx& ctx, const Representation<Ctx>& r1,
                           const Representation<Ctx>& r2) {
  using S = typename Ctx::S;
  Representation<Ctx> r;
  const Matrix<S> i1 = Matrix<S>::identity(r1.dim());
  const Matrix<S> i2 = Matrix<S>::identity(r2.dim());
  // q^{+-H_i} factors of the coproduct.
  const Matrix<S> qh1m = cartan_eval(ctx, r1, Rational(-1), Rational(1), Rational(0));
  const Matrix<S> qh2m = cartan_eval(ctx, r1, Rational(0), Rational(-1), Rational(1));
  const Matrix<S> qh1p = cartan_eval(ctx, r2, Rational(1), Rational(-1), Rational(0));
  const Matrix<S> qh2p = cartan_eval(ctx, r2, Rational(0), Rational(1), Rational(-1));

  r.e1 = kron(r1.e1, i2) + kron(qh1m, r2.e1);
  r.e2 = kron(r1.e2, i2) + kron(qh2m, r2.e2);
  r.f1 = kron(r1.f1, qh1p) + kron(i1, r2.f1);
  r.f2 = kron(r1.f2, qh2p) + kron(i1, r2.f2);

  r.weights.reserve(r1.dim() * r2.dim());
  for (const GLWeight& w1 : r1.weights)
    for (const GLWeight& w2 : r2.weights) r.weights.push_back(w1 + w2);
  return r;
}

template <class Ctx>
Matrix<typename Ctx::S> evaluate(const Ctx& ctx, const Representation<Ctx>& rep,
                                 const AlgebraExpression& expr) {
  using S = typename Ctx::S;
  Matrix<S> acc(rep.dim(), rep.dim());
  for (const GeneratorWord& w : expr.words()) {
    Matrix<S> m = Matrix<S>::identity(rep.dim()) * to_scalar(ctx, w.coeff);
    for (const Factor& f : w.factors) {
      if (const Gen* g = std::get_if<Gen>(&f)) {
        m = m * rep.gen_matrix(*g);
      } else {
        m = m * cartan_eval(ctx, rep, std::get<CartanMonomial>(f));
      }
    }
    acc += m;
  }
  return acc;
}

// Joint kernel of E1 and E2, organized by weight: a deterministic basis of
// highest-weight vectors.  Elimination works weight block by weight block
// (E_i maps a weight space into a different one, so blocks are independent);
// pivots take the first nonzero entry in dump order.
template <class Ctx>
std::vector<std::pair<GLWeight, std::vector<typename Ctx::S>>>
highest_weight_vectors(const Ctx&, const Representation<Ctx>& rep) {
  using S = typename Ctx::S;
  const std::size_t d = rep.dim();

  // Weight blocks in order of first appearance in the basis.
  std::vector<GLWeight> block_weights;
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < d; ++i) {
    bool placed = false;
    for (std::size_t b = 0; b < block_weights.size(); ++b) {
      if (block_weights[b] == rep.weights[i]) {
        blocks[b].push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) {
      block_weights.push_back(rep.weights[i]);
      blocks.push_back({i});
    }
  }

  std::vector<std::pair<GLWeight, std::vector<S>>> out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::vector<std::size_t>& cols = blocks[b];
    const std::size_t n = cols.size();
    // Stack the E1 and E2 restrictions: 2d rows, n columns.
    std::vector<std::vector<S>> m(2 * d, std::vector<S>(n, S(0)));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < d; ++i) {
        m[i][j] = rep.e1(i, cols[j]);
        m[d + i][j] = rep.e2(i, cols[j]);
      }
    }
    // Forward elimination with pivot = first nonzero entry scanning rows then
    // columns left to right.
    std::vector<std::size_t> pivot_col;
    std::size_t rank_row = 0;
    for (std::size_t j = 0; j < n && rank_row < m.size(); ++j) {
      std::size_t p = rank_row;
      while (p < m.size() && scalar_is_zero(m[p][j])) ++p;
      if (p == m.size()) continue;
      std::swap(m[p], m[rank_row]);
      const S inv = S(1) / m[rank_row][j];
      for (std::size_t jj = j; jj < n; ++jj) m[rank_row][jj] *= inv;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i == rank_row || scalar_is_zero(m[i][j])) continue;
        const S f = m[i][j];
        for (std::size_t jj = j; jj < n; ++jj) m[i][jj] -= f * m[rank_row][jj];
      }
      pivot_col.push_back(j);
      ++rank_row;
    }
    // Free columns give the kernel basis.
    std::size_t pc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (pc < pivot_col.size() && pivot_col[pc] == j) {
        ++pc;
        continue;
      }
      std::vector<S> v(d, S(0));
      v[cols[j]] = S(1);
      for (std::size_t r = 0; r < pivot_col.size(); ++r)
        v[cols[pivot_col[r]]] = -m[r][j];
      out.emplace_back(block_weights[b], std::move(v));
    }
  }
  return out;
}

}  // namespace qgl3
