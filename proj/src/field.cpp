#include "qgl3/scalar/field.hpp"

#include <cassert>
#include <numeric>
#include <sstream>

namespace qgl3 {

namespace {
// Past this combined term count an operation result gets a gcd pass; keeps
// intermediate fractions from snowballing during long series manipulations.
constexpr std::size_t kReduceThreshold = 192;
}  // namespace

FieldScalar FieldScalar::monomial(long exp, const Rational& c) {
  FieldScalar s;
  s.num_ = Laurent::monomial(exp, c);
  return s;
}

FieldScalar FieldScalar::fraction(Laurent num, Laurent den) {
  assert(!den.is_zero());
  FieldScalar s;
  s.num_ = std::move(num);
  s.den_ = std::move(den);
  s.normalize_light();
  return s;
}

void FieldScalar::normalize_light() {
  assert(!den_.is_zero());
  if (num_.is_zero()) {
    den_ = Laurent::one();
    return;
  }
  if (den_.is_monomial()) {
    const auto& [e, c] = den_.terms().front();
    num_.mul_monomial(-e, Rational(1) / c);
    den_ = Laurent::one();
    return;
  }
  const long e0 = den_.min_exp();
  const Rational c0 = den_.terms().front().second;
  if (e0 != 0) {
    den_ = den_.shifted(-e0);
    num_ = num_.shifted(-e0);
  }
  if (c0 != 1) {
    Rational inv = Rational(1) / c0;
    den_.scale(inv);
    num_.scale(inv);
  }
  if (num_.size() + den_.size() > kReduceThreshold) reduce_full();
}

void FieldScalar::reduce_full() {
  if (num_.is_zero() || den_.is_one()) return;
  Laurent g = laurent_gcd(num_, den_);
  if (!g.is_one() && !g.is_constant()) {
    Laurent qn, qd;
    bool ok_n = laurent_div_exact(num_.shifted(-num_.min_exp()), g, qn);
    bool ok_d = laurent_div_exact(den_, g, qd);
    assert(ok_n && ok_d);
    (void)ok_n;
    (void)ok_d;
    num_ = qn.shifted(num_.min_exp());
    den_ = std::move(qd);
  }
  // Re-establish the cheap invariants after the division.
  if (den_.is_monomial()) {
    const auto& [e, c] = den_.terms().front();
    num_.mul_monomial(-e, Rational(1) / c);
    den_ = Laurent::one();
    return;
  }
  const long e0 = den_.min_exp();
  const Rational c0 = den_.terms().front().second;
  if (e0 != 0) {
    den_ = den_.shifted(-e0);
    num_ = num_.shifted(-e0);
  }
  if (c0 != 1) {
    Rational inv = Rational(1) / c0;
    den_.scale(inv);
    num_.scale(inv);
  }
}

FieldScalar FieldScalar::operator-() const {
  FieldScalar s(*this);
  s.num_ = -s.num_;
  return s;
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& o) {
  if (o.num_.is_zero()) return *this;
  if (num_.is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize_light();
  return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& o) { return *this += -o; }

FieldScalar& FieldScalar::operator*=(const FieldScalar& o) {
  if (num_.is_zero()) return *this;
  if (o.num_.is_zero()) return *this = FieldScalar();
  num_ = num_ * o.num_;
  if (!o.den_.is_one()) den_ = den_ * o.den_;
  normalize_light();
  return *this;
}

FieldScalar& FieldScalar::operator/=(const FieldScalar& o) {
  assert(!o.num_.is_zero());
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize_light();
  return *this;
}

FieldScalar FieldScalar::inverse() const {
  assert(!num_.is_zero());
  return fraction(den_, num_);
}

FieldScalar FieldScalar::pow(long e) const {
  if (e == 0) return FieldScalar(1);
  FieldScalar base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : e;
  FieldScalar acc(1);
  while (n != 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

bool FieldScalar::operator==(const FieldScalar& o) const {
  if (den_ == o.den_) return num_ == o.num_;
  return num_ * o.den_ == o.num_ * den_;
}

FieldScalar FieldScalar::canonical() const {
  FieldScalar s(*this);
  s.reduce_full();
  return s;
}

Rational FieldScalar::eval_x(const Rational& x) const {
  Rational d = den_.eval(x);
  assert(d != 0);
  return num_.eval(x) / d;
}

std::string monomial_string_qunits(long exp_sixths, const Rational& coeff) {
  std::ostringstream os;
  if (exp_sixths == 0) {
    os << rat_string(coeff);
    return os.str();
  }
  if (coeff == -1) {
    os << '-';
  } else if (coeff != 1) {
    os << rat_string(coeff) << '*';
  }
  if (exp_sixths == 6) {
    os << 'q';
  } else {
    Rational e = make_ratio(exp_sixths, 6);
    os << "q^(" << rat_string(e) << ')';
  }
  return os.str();
}

std::string laurent_string_qunits(const Laurent& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (first) {
      os << monomial_string_qunits(e, c);
      first = false;
    } else if (c < 0) {
      os << " - " << monomial_string_qunits(e, -c);
    } else {
      os << " + " << monomial_string_qunits(e, c);
    }
  }
  return os.str();
}

std::string FieldScalar::to_string() const {
  FieldScalar s = canonical();
  if (s.den_.is_one()) return laurent_string_qunits(s.num_);
  return "(" + laurent_string_qunits(s.num_) + ")/(" +
         laurent_string_qunits(s.den_) + ")";
}

}  // namespace qgl3
