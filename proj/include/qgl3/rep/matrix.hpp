// Dense matrices over an exact scalar field, sized for representations up to
// the 27-dimensional tensor cube.  Multiplication skips zero entries, which
// is where all the weight-space sparsity shows up.
#pragma once

#include "qgl3/scalar/field.hpp"
#include "qgl3/scalar/series.hpp"

#include <cassert>
#include <cstddef>
#include <vector>

namespace qgl3 {

inline bool scalar_is_zero(const FieldScalar& s) { return s.is_zero(); }
inline bool scalar_is_zero(const Rational& s) { return s == 0; }

template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : r_(rows), c_(cols), a_(rows * cols, S(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }
  // Matrix unit with a single 1 at (row, col), zero-based.
  static Matrix unit(std::size_t n, std::size_t row, std::size_t col) {
    Matrix m(n, n);
    m(row, col) = S(1);
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }

  S& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  bool is_zero() const {
    for (const S& s : a_)
      if (!scalar_is_zero(s)) return false;
    return true;
  }
  bool is_diagonal() const {
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j)
        if (i != j && !scalar_is_zero((*this)(i, j))) return false;
    return true;
  }

  Matrix operator-() const {
    Matrix m(*this);
    for (S& s : m.a_) s = -s;
    return m;
  }
  Matrix& operator+=(const Matrix& o) {
    assert(r_ == o.r_ && c_ == o.c_);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    assert(r_ == o.r_ && c_ == o.c_);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { a += b; return a; }
  friend Matrix operator-(Matrix a, const Matrix& b) { a -= b; return a; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.c_ == b.r_);
    Matrix r(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) {
        const S& aik = a(i, k);
        if (scalar_is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.c_; ++j) {
          const S& bkj = b(k, j);
          if (scalar_is_zero(bkj)) continue;
          r(i, j) += aik * bkj;
        }
      }
    return r;
  }

  Matrix operator*(const S& s) const {
    Matrix m(*this);
    for (S& e : m.a_) e *= s;
    return m;
  }
  Matrix& operator*=(const S& s) {
    for (S& e : a_) e *= s;
    return *this;
  }

  bool operator==(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) return false;
    for (std::size_t k = 0; k < a_.size(); ++k)
      if (!(a_[k] == o.a_[k])) return false;
    return true;
  }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<S> a_;
};

template <class S>
Matrix<S> operator*(const S& s, const Matrix<S>& m) {
  return m * s;
}

template <class S>
std::vector<S> mat_apply(const Matrix<S>& m, const std::vector<S>& v) {
  assert(m.cols() == v.size());
  std::vector<S> r(m.rows(), S(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (scalar_is_zero(m(i, j)) || scalar_is_zero(v[j])) continue;
      r[i] += m(i, j) * v[j];
    }
  return r;
}

// Kronecker product with left-factor-major index flattening:
// (a, b) -> a * cols(B) + b, so (A kron B)((a,b),(c,d)) = A(a,c) B(b,d).
template <class S>
Matrix<S> kron(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const S& aik = a(i, k);
      if (scalar_is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.rows(); ++j)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const S& bjl = b(j, l);
          if (scalar_is_zero(bjl)) continue;
          r(i * b.rows() + j, k * b.cols() + l) = aik * bjl;
        }
    }
  return r;
}

template <class S>
struct SeriesTraits<Matrix<S>> {
  static Matrix<S> zero_like(const Matrix<S>& m) { return Matrix<S>(m.rows(), m.cols()); }
  static Matrix<S> one_like(const Matrix<S>& m) {
    assert(m.rows() == m.cols());
    return Matrix<S>::identity(m.rows());
  }
  static bool is_zero(const Matrix<S>& m) { return m.is_zero(); }
  // Series leading coefficients that need inverting are diagonal Cartan
  // matrices; anything else is a logic error upstream.
  static Matrix<S> invert_unit(const Matrix<S>& m) {
    assert(m.rows() == m.cols());
    assert(m.is_diagonal());
    Matrix<S> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      assert(!scalar_is_zero(m(i, i)));
      r(i, i) = S(1) / m(i, i);
    }
    return r;
  }
  static Matrix<S> mul_rat(const Matrix<S>& m, const Rational& c) {
    return m * S(c);
  }
};

}  // namespace qgl3
