// Truncated power series with coefficients in an arbitrary (possibly
// noncommutative) ring: scalars for prefactors, matrices for the monodromy
// factors.  A series carries exactly order+1 coefficients; operations never
// grow the order, and binary operations require matching orders.
#pragma once

#include "qgl3/scalar/field.hpp"
#include "qgl3/scalar/rational.hpp"

#include <cassert>
#include <cstddef>
#include <vector>

namespace qgl3 {

// Shape-aware ring hooks.  The primary template covers field-like scalars;
// matrix coefficients specialize it (see rep/matrix.hpp).
template <class T>
struct SeriesTraits {
  static T zero_like(const T&) { return T(0); }
  static T one_like(const T&) { return T(1); }
  static bool is_zero(const T& a) { return a == T(0); }
  static T invert_unit(const T& a) { return T(1) / a; }
  static T mul_rat(const T& a, const Rational& c) { return a * T(c); }
};

template <class T>
class ZSeries {
 public:
  ZSeries() = default;
  explicit ZSeries(std::vector<T> coeffs) : c_(std::move(coeffs)) {
    assert(!c_.empty());
  }
  static ZSeries zeros(std::size_t order, const T& shape) {
    return ZSeries(std::vector<T>(order + 1, SeriesTraits<T>::zero_like(shape)));
  }

  std::size_t order() const { return c_.size() - 1; }
  T& operator[](std::size_t k) { return c_[k]; }
  const T& operator[](std::size_t k) const { return c_[k]; }

  bool operator==(const ZSeries& o) const = default;

 private:
  std::vector<T> c_;
};

template <class T>
ZSeries<T> operator+(const ZSeries<T>& a, const ZSeries<T>& b) {
  assert(a.order() == b.order());
  ZSeries<T> r = a;
  for (std::size_t k = 0; k <= r.order(); ++k) r[k] += b[k];
  return r;
}

template <class T>
ZSeries<T> operator-(const ZSeries<T>& a, const ZSeries<T>& b) {
  assert(a.order() == b.order());
  ZSeries<T> r = a;
  for (std::size_t k = 0; k <= r.order(); ++k) r[k] -= b[k];
  return r;
}

template <class T>
ZSeries<T> operator-(const ZSeries<T>& a) {
  ZSeries<T> r = a;
  for (std::size_t k = 0; k <= r.order(); ++k) r[k] = -r[k];
  return r;
}

template <class T>
ZSeries<T> operator*(const ZSeries<T>& a, const ZSeries<T>& b) {
  assert(a.order() == b.order());
  ZSeries<T> r = ZSeries<T>::zeros(a.order(), a[0]);
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (SeriesTraits<T>::is_zero(a[i])) continue;
    for (std::size_t j = 0; i + j <= b.order(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

template <class T>
bool series_is_zero(const ZSeries<T>& a) {
  for (std::size_t k = 0; k <= a.order(); ++k)
    if (!SeriesTraits<T>::is_zero(a[k])) return false;
  return true;
}

// Argument substitution z -> c z for a scalar c commuting with everything.
template <class T, class Sc>
ZSeries<T> series_scale_arg(const ZSeries<T>& a, const Sc& factor) {
  ZSeries<T> r = a;
  Sc p = factor;
  for (std::size_t k = 1; k <= r.order(); ++k) {
    r[k] = r[k] * p;
    if (k < r.order()) p = p * factor;
  }
  return r;
}

// Multiplication by z^m (top coefficients fall off the truncation).
template <class T>
ZSeries<T> series_shift_up(const ZSeries<T>& a, std::size_t m) {
  ZSeries<T> r = ZSeries<T>::zeros(a.order(), a[0]);
  for (std::size_t k = m; k <= r.order(); ++k) r[k] = a[k - m];
  return r;
}

// Two-sided inverse; the constant coefficient must be a unit.  Order of the
// factors matters for matrix coefficients: a = a0 (1 + n) gives
// a^-1 = (sum (-n)^j) a0^-1.
template <class T>
ZSeries<T> series_inverse(const ZSeries<T>& a) {
  const T u = SeriesTraits<T>::invert_unit(a[0]);
  ZSeries<T> n = ZSeries<T>::zeros(a.order(), a[0]);
  for (std::size_t k = 1; k <= a.order(); ++k) n[k] = -(u * a[k]);
  ZSeries<T> acc = ZSeries<T>::zeros(a.order(), a[0]);
  acc[0] = SeriesTraits<T>::one_like(a[0]);
  ZSeries<T> p = acc;
  for (std::size_t j = 1; j <= a.order(); ++j) {
    p = p * n;
    acc = acc + p;
  }
  ZSeries<T> r = acc;
  for (std::size_t k = 0; k <= r.order(); ++k) r[k] = r[k] * u;
  return r;
}

// log of a series with constant coefficient 1.
template <class T>
ZSeries<T> series_log(const ZSeries<T>& a) {
  ZSeries<T> y = a;
  y[0] -= SeriesTraits<T>::one_like(a[0]);
  assert(SeriesTraits<T>::is_zero(y[0]));
  ZSeries<T> acc = ZSeries<T>::zeros(a.order(), a[0]);
  ZSeries<T> p = y;
  Rational sign(1);
  for (std::size_t j = 1; j <= a.order(); ++j) {
    ZSeries<T> term = p;
    for (std::size_t k = 0; k <= term.order(); ++k)
      term[k] = SeriesTraits<T>::mul_rat(term[k], sign / Rational(static_cast<long>(j)));
    acc = acc + term;
    if (j < a.order()) p = p * y;
    sign = -sign;
  }
  return acc;
}

// exp of a series with zero constant coefficient.
template <class T>
ZSeries<T> series_exp(const ZSeries<T>& a) {
  assert(SeriesTraits<T>::is_zero(a[0]));
  ZSeries<T> acc = ZSeries<T>::zeros(a.order(), a[0]);
  acc[0] = SeriesTraits<T>::one_like(a[0]);
  ZSeries<T> p = acc;
  Rational fact(1);
  for (std::size_t j = 1; j <= a.order(); ++j) {
    p = p * a;
    fact *= Rational(static_cast<long>(j));
    ZSeries<T> term = p;
    for (std::size_t k = 0; k <= term.order(); ++k)
      term[k] = SeriesTraits<T>::mul_rat(term[k], Rational(1) / fact);
    acc = acc + term;
  }
  return acc;
}

}  // namespace qgl3
