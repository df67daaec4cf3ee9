#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgl3/mono/checks.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

using qgl3::FieldScalar;
using qgl3::GradingSpec;
using qgl3::IdentityResult;
using qgl3::Matrix;
using qgl3::NumericQ;
using qgl3::Rational;
using qgl3::SymbolicQ;
using qgl3::make_ratio;

namespace {

NumericQ numeric_point() { return NumericQ{make_ratio(3, 2)}; }

void expect_all(const std::vector<IdentityResult>& rs) {
  REQUIRE(!rs.empty());
  for (const auto& r : rs) {
    INFO(r.label << (r.detail.empty() ? std::string() : " [" + r.detail + "]"));
    CHECK(r.ok);
  }
}

}  // namespace

TEST_CASE("center log words expand the generating relation") {
  using qgl3::CenterPoly;
  const auto f = qgl3::center_log_words(4);
  const CenterPoly c1 = CenterPoly::word(0);
  const CenterPoly c2 = CenterPoly::word(1);
  const CenterPoly c3 = CenterPoly::word(2);
  CHECK(f[1] == c1);
  CHECK(f[2] == c2 * Rational(2) + c1 * c1);
  CHECK(f[3] == c3 * Rational(3) + c2 * c1 * Rational(3) + c1 * c1 * c1);
  CHECK(f[4] == c3 * c1 * Rational(4) + c2 * c2 * Rational(2) + c2 * c1 * c1 * Rational(4) +
                    c1 * c1 * c1 * c1);
}

TEST_CASE("defining-representation prefactor coefficients") {
  const SymbolicQ ctx;
  const auto q = [&](long u) { return qgl3::q_pow(ctx, u); };
  const FieldScalar one = q(0);
  const auto f = qgl3::fundamental_prefactor_log(ctx, 3);
  CHECK(f[0] == FieldScalar());
  CHECK(f[1] == (q(2) + one + q(-4)) / (q(2) + one + q(-2)));
  CHECK(f[2] == (q(4) + one + q(-8)) / ((q(4) + one + q(-4)) * FieldScalar(2)));
  CHECK(f[3] == (q(6) + one + q(-12)) / ((q(6) + one + q(-6)) * FieldScalar(3)));
}

TEST_CASE("exchange matrix components sit on their pattern positions") {
  const SymbolicQ ctx;
  const auto q = [&](long u) { return qgl3::q_pow(ctx, u); };
  const FieldScalar one = q(0);
  const FieldScalar kap = qgl3::kappa(ctx);

  const auto expect_poly = [&](const std::map<long, FieldScalar>& got,
                               const std::vector<std::pair<long, FieldScalar>>& want) {
    REQUIRE(got.size() == want.size());
    for (const auto& [e, v] : want) {
      const auto it = got.find(e);
      REQUIRE(it != got.end());
      CHECK(it->second == v);
    }
  };
  const auto nonzero_count = [](const auto& r) {
    int n = 0;
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j)
        if (!r.b[i][j].empty()) ++n;
    return n;
  };

  SUBCASE("uniform grading") {
    const GradingSpec s{1, 1, 1};
    const auto r = qgl3::r_matrix(ctx, s);
    CHECK(nonzero_count(r) == 15);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        const int i = 3 * a + b;
        expect_poly(r.b[i][i], {{0, one}, {3, a == b ? -q(-2) : -one}});
        CHECK(r.k_diag[i] == qgl3::q_pow_sixths(ctx, a == b ? 4 : -2));
      }
    expect_poly(r.b[1][3], {{1, kap}});
    expect_poly(r.b[3][1], {{2, kap}});
    expect_poly(r.b[2][6], {{2, kap}});
    expect_poly(r.b[6][2], {{1, kap}});
    expect_poly(r.b[5][7], {{1, kap}});
    expect_poly(r.b[7][5], {{2, kap}});
    expect_poly(r.component(0, 0), {{0, qgl3::q_pow_sixths(ctx, 4)}, {3, -q(-2) * qgl3::q_pow_sixths(ctx, 4)}});
  }

  SUBCASE("mixed grading") {
    const GradingSpec s{2, 1, 3};
    const auto r = qgl3::r_matrix(ctx, s);
    CHECK(nonzero_count(r) == 15);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        const int i = 3 * a + b;
        expect_poly(r.b[i][i], {{0, one}, {6, a == b ? -q(-2) : -one}});
      }
    expect_poly(r.b[1][3], {{1, kap}});
    expect_poly(r.b[3][1], {{5, kap}});
    expect_poly(r.b[2][6], {{4, kap}});
    expect_poly(r.b[6][2], {{2, kap}});
    expect_poly(r.b[5][7], {{3, kap}});
    expect_poly(r.b[7][5], {{3, kap}});
  }
}

TEST_CASE("tensor-factor products distribute over the matrix tensor product") {
  using Mat = Matrix<FieldScalar>;
  const auto mono = [](long e, long c) { return FieldScalar::monomial(e, Rational(c)); };
  Mat a(2, 2), b(2, 2), c(2, 2), d(2, 2);
  a(0, 0) = mono(1, 1);
  a(0, 1) = mono(-2, 3);
  a(1, 1) = mono(0, 2);
  b(0, 1) = mono(3, 1);
  b(1, 0) = mono(-1, 5);
  c(0, 0) = mono(2, 7);
  c(1, 0) = mono(0, 1);
  c(1, 1) = mono(-3, 2);
  d(0, 0) = mono(1, 4);
  d(1, 1) = mono(4, 9);
  CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
}

TEST_CASE("triple exchange identity") {
  const SymbolicQ sym;
  expect_all({qgl3::check_triple_exchange(sym, GradingSpec{1, 1, 1})});
  expect_all({qgl3::check_triple_exchange(sym, GradingSpec{2, 1, 3})});
  expect_all({qgl3::check_triple_exchange(numeric_point(), GradingSpec{1, 1, 1})});
}

TEST_CASE("positional reading of the block family") {
  const SymbolicQ sym;
  expect_all(qgl3::check_positional(sym, GradingSpec{1, 1, 1}, 6));
  expect_all(qgl3::check_positional(sym, GradingSpec{1, 0, 0}, 3));
  expect_all(qgl3::check_positional(numeric_point(), GradingSpec{1, 1, 1}, 6));
}

TEST_CASE("triangular factor suite") {
  const SymbolicQ sym;
  const auto fund = qgl3::fundamental(sym);
  expect_all(qgl3::check_kt_factors(sym, fund, GradingSpec{1, 1, 1}, 6));
  expect_all(qgl3::check_uvw(sym, fund, GradingSpec{1, 1, 1}, 6));
  expect_all(qgl3::check_kt_factors(sym, fund, GradingSpec{1, 2, 1}, 3));
  expect_all(qgl3::check_uvw(sym, fund, GradingSpec{1, 2, 1}, 3));
  expect_all(qgl3::check_uvw(sym, tensor(sym, fund, fund), GradingSpec{1, 1, 1}, 3));
  const NumericQ num = numeric_point();
  const auto nf = qgl3::fundamental(num);
  const auto nt3 = tensor(num, tensor(num, nf, nf), nf);
  expect_all(qgl3::check_kt_factors(num, nt3, GradingSpec{1, 1, 1}, 3));
  expect_all(qgl3::check_uvw(num, nt3, GradingSpec{1, 1, 1}, 3));
}

TEST_CASE("exchange relations") {
  const SymbolicQ sym;
  const auto fund = qgl3::fundamental(sym);
  expect_all(qgl3::check_exchange(sym, fund, GradingSpec{1, 1, 1}, 6));
  expect_all(qgl3::check_exchange(sym, fund, GradingSpec{1, 1, 1}, 3, false, true));
  expect_all(qgl3::check_exchange(sym, fund, GradingSpec{1, 2, 1}, 4));
  expect_all(qgl3::check_exchange(sym, tensor(sym, fund, fund), GradingSpec{1, 1, 1}, 3));
  expect_all(qgl3::check_exchange(sym, qgl3::trivial_rep(sym), GradingSpec{1, 1, 1}, 4));
  const NumericQ num = numeric_point();
  const auto nf = qgl3::fundamental(num);
  expect_all(qgl3::check_exchange(num, nf, GradingSpec{1, 1, 1}, 6, false, true));
  expect_all(qgl3::check_exchange(num, tensor(num, nf, nf), GradingSpec{1, 1, 1}, 6));
}

TEST_CASE("rotated variants") {
  const SymbolicQ sym;
  const auto fund = qgl3::fundamental(sym);
  expect_all(qgl3::check_rotations(sym, fund, GradingSpec{1, 1, 1}, 4));
  expect_all(qgl3::check_rotations(sym, fund, GradingSpec{1, 2, 1}, 3));
  expect_all(qgl3::check_rotations(numeric_point(), qgl3::fundamental(numeric_point()),
                                   GradingSpec{1, 1, 1}, 6));
}

TEST_CASE("flipped family") {
  const SymbolicQ sym;
  const auto fund = qgl3::fundamental(sym);
  expect_all(qgl3::check_flipped(sym, fund, GradingSpec{1, 1, 1}, 6));
  expect_all(qgl3::check_flipped(sym, tensor(sym, fund, fund), GradingSpec{1, 1, 1}, 3));
  expect_all(qgl3::check_flipped(numeric_point(), qgl3::fundamental(numeric_point()),
                                 GradingSpec{1, 1, 1}, 6));
}

TEST_CASE("central words commute with the generators") {
  const SymbolicQ sym;
  const auto fund = qgl3::fundamental(sym);
  expect_all(qgl3::check_centrality(sym, fund));
  expect_all(qgl3::check_centrality(sym, tensor(sym, fund, fund)));
  const NumericQ num = numeric_point();
  const auto nf = qgl3::fundamental(num);
  expect_all(qgl3::check_centrality(num, tensor(num, tensor(num, nf, nf), nf)));
}

TEST_CASE("central eigenvalues factor through the shifted weight characters") {
  const SymbolicQ sym;
  const auto fund = qgl3::fundamental(sym);
  const auto t2 = tensor(sym, fund, fund);
  const auto t3 = tensor(sym, t2, fund);
  expect_all(qgl3::check_eigenvalues(sym, fund));
  expect_all(qgl3::check_eigenvalues(sym, t2));
  expect_all(qgl3::check_eigenvalues(sym, t3));

  const auto count_weight = [&](const auto& hw, long a, long b, long c) {
    int n = 0;
    for (const auto& [w, v] : hw)
      if (w.w1 == Rational(a) && w.w2 == Rational(b) && w.w3 == Rational(c)) ++n;
    return n;
  };
  const auto h1 = qgl3::highest_weight_vectors(sym, fund);
  REQUIRE(h1.size() == 1);
  CHECK(count_weight(h1, 1, 0, 0) == 1);
  const auto h2 = qgl3::highest_weight_vectors(sym, t2);
  REQUIRE(h2.size() == 2);
  CHECK(count_weight(h2, 2, 0, 0) == 1);
  CHECK(count_weight(h2, 1, 1, 0) == 1);
  const auto h3 = qgl3::highest_weight_vectors(sym, t3);
  REQUIRE(h3.size() == 4);
  CHECK(count_weight(h3, 3, 0, 0) == 1);
  CHECK(count_weight(h3, 2, 1, 0) == 2);
  CHECK(count_weight(h3, 1, 1, 1) == 1);
}

TEST_CASE("rank-two reduction") {
  const SymbolicQ sym;
  const auto fund = qgl3::fundamental(sym);
  CHECK(qgl3::closed_form_blocks().tail[0] ==
        qgl3::CartanMonomial{make_ratio(2, 3), make_ratio(-1, 3), make_ratio(-1, 3)});
  expect_all(qgl3::check_rank_two(sym, fund, GradingSpec{1, 1, 1}, 4));
  expect_all(qgl3::check_rank_two(sym, tensor(sym, fund, fund), GradingSpec{1, 1, 1}, 3));
  const NumericQ num = numeric_point();
  const auto nf = qgl3::fundamental(num);
  expect_all(qgl3::check_rank_two(num, tensor(num, tensor(num, nf, nf), nf),
                                  GradingSpec{1, 1, 1}, 3));
}

TEST_CASE("corner sign flip is detected") {
  const SymbolicQ sym;
  const auto fund = qgl3::fundamental(sym);
  const GradingSpec s{1, 1, 1};

  const auto first_failing = [](const std::vector<IdentityResult>& rs) -> const IdentityResult* {
    for (const auto& r : rs)
      if (!r.ok) return &r;
    return nullptr;
  };

  const auto pos = qgl3::check_positional(sym, s, 3, true);
  const auto* p = first_failing(pos);
  REQUIRE(p != nullptr);
  CHECK(!p->detail.empty());

  const auto uvw = qgl3::check_uvw(sym, fund, s, 3, true);
  const auto* u = first_failing(uvw);
  REQUIRE(u != nullptr);
  CHECK(!u->detail.empty());

  const auto ktf = qgl3::check_kt_factors(sym, fund, s, 3, true);
  const auto* kf = first_failing(ktf);
  REQUIRE(kf != nullptr);
  CHECK(!kf->detail.empty());

  const auto rll = qgl3::check_exchange(sym, fund, s, 3, true);
  REQUIRE(rll.size() == 2);
  CHECK(!rll[0].ok);
  CHECK(!rll[0].detail.empty());
  CHECK(rll[1].ok);
}
