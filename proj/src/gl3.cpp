#include "qgl3/algebra/gl3.hpp"

#include <cassert>

namespace qgl3 {

namespace {

FieldScalar qpow(long units) { return FieldScalar::x_power(6 * units); }
FieldScalar kappa_scalar() { return qpow(1) - qpow(-1); }

AlgebraExpression qG(long a, long b, long c, long shift = 0) {
  return AlgebraExpression::cartan({Rational(a), Rational(b), Rational(c)},
                                   qpow(shift));
}

}  // namespace

std::pair<AlgebraExpression, AlgebraExpression> composite_generators() {
  AlgebraExpression e1 = gen(Gen::E1), e2 = gen(Gen::E2);
  AlgebraExpression f1 = gen(Gen::F1), f2 = gen(Gen::F2);
  AlgebraExpression e3 = e1 * e2 - qpow(-1) * (e2 * e1);
  AlgebraExpression f3 = f2 * f1 - qpow(1) * (f1 * f2);
  return {e3, f3};
}

AlgebraExpression casimir(int k) {
  assert(k >= 1 && k <= 3);
  const FieldScalar kap = kappa_scalar();
  const FieldScalar kap2 = kap * kap;
  const FieldScalar kap3 = kap2 * kap;
  const auto [e3, f3] = composite_generators();
  const AlgebraExpression e1 = gen(Gen::E1), e2 = gen(Gen::E2);
  const AlgebraExpression f1 = gen(Gen::F1), f2 = gen(Gen::F2);

  switch (k) {
    case 1:
      return qG(-2, 0, 0, -2) + qG(0, -2, 0) + qG(0, 0, -2, 2) +
             kap2 * (f1 * e1 * qG(-1, -1, 0, -1)) +
             kap2 * (f2 * e2 * qG(0, -1, -1, 1)) +
             kap2 * (f3 * e3 * qG(-1, 0, -1, 1)) -
             kap3 * (f3 * e1 * e2 * qG(-1, 0, -1));
    case 2:
      return -qG(-2, -2, 0, -2) - qG(-2, 0, -2) - qG(0, -2, -2, 2) -
             kap2 * (f1 * e1 * qG(-1, -1, -2, 1)) -
             kap2 * (f2 * e2 * qG(-2, -1, -1, -1)) -
             kap2 * (f3 * e3 * qG(-1, -2, -1, 1)) -
             kap3 * (f1 * f2 * e3 * qG(-1, -2, -1, 1));
    default:
      return qG(-2, -2, -2);
  }
}

AutomorphismSpec AutomorphismSpec::identity() {
  AutomorphismSpec s{FieldScalar(1), FieldScalar(1), {}};
  return s;
}

AutomorphismSpec AutomorphismSpec::symmetric_form() {
  AutomorphismSpec s{FieldScalar::x_power(-3), FieldScalar::x_power(-3), {}};
  s.nu[0][0] = make_ratio(-1, 2);
  s.nu[0][1] = make_ratio(1, 2);
  s.nu[0][2] = Rational(0);
  s.nu[1][0] = Rational(0);
  s.nu[1][1] = make_ratio(-1, 2);
  s.nu[1][2] = make_ratio(1, 2);
  return s;
}

AlgebraExpression apply_automorphism(const AutomorphismSpec& spec,
                                     const AlgebraExpression& e) {
  assert(spec.valid());
  std::array<AlgebraExpression, 4> images;
  for (int i = 0; i < 2; ++i) {
    CartanMonomial twist{spec.nu[i][0], spec.nu[i][1], spec.nu[i][2]};
    const FieldScalar& nu = i == 0 ? spec.nu1 : spec.nu2;
    Gen ge = i == 0 ? Gen::E1 : Gen::E2;
    Gen gf = i == 0 ? Gen::F1 : Gen::F2;
    images[static_cast<std::size_t>(ge)] =
        nu * (gen(ge) * AlgebraExpression::cartan(twist));
    images[static_cast<std::size_t>(gf)] =
        nu.inverse() * (AlgebraExpression::cartan(twist.inverse()) * gen(gf));
  }
  return substitute_generators(e, images);
}

}  // namespace qgl3
