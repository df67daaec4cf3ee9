// Representation-layer tests: fundamental matrices, Cartan diagonal action,
// tensor products, highest-weight extraction, eigenvalue spot checks.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgl3/algebra/gl3.hpp"
#include "qgl3/algebra/relations.hpp"
#include "qgl3/rep/representation.hpp"

#include <algorithm>

using namespace qgl3;

namespace {
const SymbolicQ sym;
using M = Matrix<FieldScalar>;
using V = std::vector<FieldScalar>;

bool is_zero_vec(const V& v) {
  return std::all_of(v.begin(), v.end(), [](const FieldScalar& s) { return s.is_zero(); });
}

V scale(const V& v, const FieldScalar& c) {
  V r = v;
  for (auto& s : r) s *= c;
  return r;
}

V sub(V a, const V& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
}  // namespace

TEST_CASE("fundamental representation") {
  auto rep = fundamental(sym);
  CHECK(rep.dim() == 3);
  CHECK(rep.e1 == M::unit(3, 0, 1));
  CHECK(rep.e2 == M::unit(3, 1, 2));
  CHECK(rep.f1 == M::unit(3, 1, 0));
  CHECK(rep.f2 == M::unit(3, 2, 1));

  // q^{nu G1} = diag(q^nu, 1, 1)
  M d = cartan_eval(sym, rep, make_ratio(1, 2), Rational(0), Rational(0));
  M expect(3, 3);
  expect(0, 0) = q_pow_rat(sym, make_ratio(1, 2));
  expect(1, 1) = FieldScalar(1);
  expect(2, 2) = FieldScalar(1);
  CHECK(d == expect);

  CHECK(cartan_eval(sym, rep, CartanMonomial::identity()) == M::identity(3));

  // q^{-G/3 + G1} = diag(q^{2/3}, q^{-1/3}, q^{-1/3})
  M k = cartan_eval(sym, rep, make_ratio(2, 3), make_ratio(-1, 3), make_ratio(-1, 3));
  CHECK(k(0, 0) == q_pow_rat(sym, make_ratio(2, 3)));
  CHECK(k(1, 1) == q_pow_rat(sym, make_ratio(-1, 3)));
  CHECK(k(2, 2) == q_pow_rat(sym, make_ratio(-1, 3)));
}

TEST_CASE("tensor square structure") {
  auto rep = tensor(sym, fundamental(sym), fundamental(sym));
  CHECK(rep.dim() == 9);
  CHECK(rep.weights[0] == GLWeight{Rational(2), Rational(0), Rational(0)});

  // G acts as total degree 2: q^{G/3} = q^{2/3} Id.
  M g3 = cartan_eval(sym, rep, make_ratio(1, 3), make_ratio(1, 3), make_ratio(1, 3));
  CHECK(g3 == M::identity(9) * q_pow_rat(sym, make_ratio(2, 3)));

  CHECK(all_ok(check_gl3_relations(sym, rep)));
}

TEST_CASE("highest weight vectors in the fundamental") {
  auto rep = fundamental(sym);
  auto hw = highest_weight_vectors(sym, rep);
  REQUIRE(hw.size() == 1);
  CHECK(hw[0].first == GLWeight{Rational(1), Rational(0), Rational(0)});
  CHECK(hw[0].second == V{FieldScalar(1), FieldScalar(0), FieldScalar(0)});
}

TEST_CASE("highest weight vectors in tensor powers") {
  auto fund = fundamental(sym);
  auto t2 = tensor(sym, fund, fund);
  auto hw2 = highest_weight_vectors(sym, t2);
  REQUIRE(hw2.size() == 2);
  std::size_t n200 = 0, n110 = 0;
  for (const auto& [w, v] : hw2) {
    if (w == GLWeight{Rational(2), Rational(0), Rational(0)}) ++n200;
    if (w == GLWeight{Rational(1), Rational(1), Rational(0)}) ++n110;
    CHECK(is_zero_vec(mat_apply(t2.e1, v)));
    CHECK(is_zero_vec(mat_apply(t2.e2, v)));
  }
  CHECK(n200 == 1);
  CHECK(n110 == 1);

  auto t3 = tensor(sym, t2, fund);
  auto hw3 = highest_weight_vectors(sym, t3);
  std::size_t n300 = 0, n210 = 0, n111 = 0;
  for (const auto& [w, v] : hw3) {
    if (w == GLWeight{Rational(3), Rational(0), Rational(0)}) ++n300;
    if (w == GLWeight{Rational(2), Rational(1), Rational(0)}) ++n210;
    if (w == GLWeight{Rational(1), Rational(1), Rational(1)}) ++n111;
    CHECK(is_zero_vec(mat_apply(t3.e1, v)));
    CHECK(is_zero_vec(mat_apply(t3.e2, v)));
  }
  CHECK(hw3.size() == 4);
  CHECK(n300 == 1);
  CHECK(n210 == 2);
  CHECK(n111 == 1);
}

TEST_CASE("casimir eigenvalue on a mixed-weight highest vector") {
  auto fund = fundamental(sym);
  auto t2 = tensor(sym, fund, fund);
  M c1 = evaluate(sym, t2, casimir(1));
  for (const auto& [w, v] : highest_weight_vectors(sym, t2)) {
    if (!(w == GLWeight{Rational(1), Rational(1), Rational(0)})) continue;
    // lambda = (1,1,0): eigenvalue q^-4 + q^-2 + q^2.
    FieldScalar ev = q_pow(sym, -4) + q_pow(sym, -2) + q_pow(sym, 2);
    CHECK(is_zero_vec(sub(mat_apply(c1, v), scale(v, ev))));
  }
}

TEST_CASE("weight table spans the whole space") {
  auto rep = tensor(sym, fundamental(sym), fundamental(sym));
  std::map<GLWeight, std::size_t> dims;
  for (const auto& w : rep.weights) ++dims[w];
  std::size_t total = 0;
  for (const auto& [w, n] : dims) total += n;
  CHECK(total == rep.dim());
  CHECK(dims[GLWeight{Rational(1), Rational(1), Rational(0)}] == 2);
}

TEST_CASE("numeric context representations") {
  NumericQ num{make_ratio(3, 2)};
  auto rep = tensor(num, fundamental(num), fundamental(num));
  CHECK(all_ok(check_gl3_relations(num, rep)));
  auto hw = highest_weight_vectors(num, rep);
  CHECK(hw.size() == 2);
}
