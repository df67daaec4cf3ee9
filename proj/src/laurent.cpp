#include "qgl3/scalar/laurent.hpp"

#include <algorithm>
#include <cassert>

namespace qgl3 {

Laurent Laurent::monomial(long exp, const Rational& coeff) {
  Laurent p;
  if (coeff != 0) p.terms_.emplace_back(exp, coeff);
  return p;
}

Laurent Laurent::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  Laurent p;
  for (auto& [e, c] : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == e) {
      p.terms_.back().second += c;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (c != 0) {
      p.terms_.emplace_back(e, c);
    }
  }
  return p;
}

bool Laurent::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

Rational Laurent::coeff(long exp) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exp,
      [](const Term& t, long e) { return t.first < e; });
  if (it != terms_.end() && it->first == exp) return it->second;
  return Rational(0);
}

Laurent Laurent::operator-() const {
  Laurent p(*this);
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    if (a->first < b->first) {
      merged.push_back(*a++);
    } else if (b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (c != 0) merged.emplace_back(a->first, c);
      ++a;
      ++b;
    }
  }
  merged.insert(merged.end(), a, terms_.end());
  merged.insert(merged.end(), b, o.terms_.end());
  terms_ = std::move(merged);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return Laurent();
  if (b.is_monomial()) {
    Laurent p(a);
    p.mul_monomial(b.min_exp(), b.terms().front().second);
    return p;
  }
  if (a.is_monomial()) {
    Laurent p(b);
    p.mul_monomial(a.min_exp(), a.terms().front().second);
    return p;
  }
  const long lo = a.min_exp() + b.min_exp();
  const long hi = a.max_exp() + b.max_exp();
  std::vector<Rational> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms())
      dense[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
  std::vector<Laurent::Term> out;
  for (long e = lo; e <= hi; ++e) {
    Rational& c = dense[static_cast<std::size_t>(e - lo)];
    if (c != 0) out.emplace_back(e, std::move(c));
  }
  return Laurent::from_terms(std::move(out));
}

Laurent& Laurent::mul_monomial(long exp, const Rational& coeff) {
  if (coeff == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) {
    e += exp;
    if (coeff != 1) c *= coeff;
  }
  return *this;
}

Laurent Laurent::shifted(long d) const {
  Laurent p(*this);
  for (auto& [e, c] : p.terms_) e += d;
  return p;
}

Rational Laurent::eval(const Rational& x) const {
  assert(x != 0);
  Rational acc(0);
  for (const auto& [e, c] : terms_) acc += c * rat_pow(x, e);
  return acc;
}

namespace {

// Dense integer polynomial with exponent 0 at index 0.
using ZPoly = std::vector<Integer>;

long zdeg(const ZPoly& p) {
  for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
    if (p[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

void ztrim(ZPoly& p) { p.resize(static_cast<std::size_t>(zdeg(p) + 1)); }

Integer zcontent(const ZPoly& p) {
  Integer g(0);
  for (const auto& c : p) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  return g;
}

void zprimitive(ZPoly& p) {
  Integer g = zcontent(p);
  if (g == 0) return;
  long d = zdeg(p);
  if (p[static_cast<std::size_t>(d)] < 0) g = -g;
  if (g == 1) return;
  for (auto& c : p) c /= g;
}

// Pseudo-remainder of a by b: lc(b)^(da-db+1) a mod b.
ZPoly zprem(ZPoly a, const ZPoly& b) {
  long da = zdeg(a);
  const long db = zdeg(b);
  assert(db >= 0);
  const Integer& lb = b[static_cast<std::size_t>(db)];
  while (da >= db) {
    Integer la = a[static_cast<std::size_t>(da)];
    for (auto& c : a) c *= lb;
    for (long i = 0; i <= db; ++i)
      a[static_cast<std::size_t>(da - db + i)] -= la * b[static_cast<std::size_t>(i)];
    a[static_cast<std::size_t>(da)] = 0;
    long nd = zdeg(a);
    assert(nd < da);
    da = nd;
  }
  ztrim(a);
  return a;
}

// Shift to min_exp 0 and clear coefficient denominators.
ZPoly to_zpoly(const Laurent& p) {
  assert(!p.is_zero());
  Integer lcm(1);
  for (const auto& [e, c] : p.terms()) {
    (void)e;
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  const long lo = p.min_exp();
  ZPoly z(static_cast<std::size_t>(p.max_exp() - lo + 1));
  for (const auto& [e, c] : p.terms()) {
    Rational s = c * lcm;
    assert(s.get_den() == 1);
    z[static_cast<std::size_t>(e - lo)] = s.get_num();
  }
  return z;
}

Laurent from_zpoly(const ZPoly& z) {
  std::vector<Laurent::Term> terms;
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z[i] != 0) terms.emplace_back(static_cast<long>(i), Rational(z[i]));
  return Laurent::from_terms(std::move(terms));
}

}  // namespace

Laurent laurent_gcd(const Laurent& a, const Laurent& b) {
  auto normalize = [](const Laurent& p) {
    ZPoly z = to_zpoly(p);
    zprimitive(z);
    Laurent r = from_zpoly(z);
    if (r.terms().front().second < 0) r.scale(Rational(-1));
    return r;
  };
  if (a.is_zero()) return b.is_zero() ? Laurent() : normalize(b);
  if (b.is_zero()) return normalize(a);
  ZPoly u = to_zpoly(a);
  ZPoly v = to_zpoly(b);
  zprimitive(u);
  zprimitive(v);
  if (zdeg(u) < zdeg(v)) std::swap(u, v);
  while (zdeg(v) >= 0) {
    ZPoly r = zprem(u, v);
    zprimitive(r);
    u = std::move(v);
    v = std::move(r);
  }
  Laurent g = from_zpoly(u);
  if (g.terms().front().second < 0) g.scale(Rational(-1));
  return g;
}

bool laurent_div_exact(const Laurent& a, const Laurent& b, Laurent& quot) {
  assert(!b.is_zero());
  if (a.is_zero()) {
    quot = Laurent();
    return true;
  }
  // Work with both shifted so min exponents sit at 0, then shift back.
  Laurent rem = a.shifted(-a.min_exp());
  const Laurent d = b.shifted(-b.min_exp());
  const long shift = a.min_exp() - b.min_exp();
  std::vector<Laurent::Term> qterms;
  const long ddeg = d.max_exp();
  const Rational& dl = d.terms().back().second;
  while (!rem.is_zero() && rem.max_exp() >= ddeg) {
    const long e = rem.max_exp() - ddeg;
    Rational c = rem.terms().back().second / dl;
    qterms.emplace_back(e + shift, c);
    Laurent sub = d.shifted(e);
    sub.scale(c);
    rem -= sub;
  }
  if (!rem.is_zero()) return false;
  quot = Laurent::from_terms(std::move(qterms));
  return true;
}

}  // namespace qgl3
