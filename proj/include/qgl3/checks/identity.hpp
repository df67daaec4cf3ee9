// Identity-check plumbing: one result per named identity, with the first
// failing coefficient rendered exactly when a residual is nonzero.
#pragma once

#include "qgl3/rep/matrix.hpp"
#include "qgl3/scalar/field.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace qgl3 {

struct IdentityResult {
  std::string label;
  bool ok = true;
  std::string detail;  // first failing coefficient when !ok
};

inline bool all_ok(const std::vector<IdentityResult>& rs) {
  for (const auto& r : rs)
    if (!r.ok) return false;
  return true;
}

inline std::string scalar_dump(const FieldScalar& s) { return s.to_string(); }
inline std::string scalar_dump(const Rational& s) { return rat_string(s); }

// A == B, reported as the residual A - B at the first differing entry.
template <class S>
IdentityResult matrices_equal(std::string label, const Matrix<S>& a,
                              const Matrix<S>& b) {
  IdentityResult r{std::move(label), true, {}};
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    r.ok = false;
    r.detail = "shape mismatch";
    return r;
  }
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) {
        r.ok = false;
        std::ostringstream os;
        os << "entry (" << i + 1 << "," << j + 1
           << "): " << scalar_dump(S(a(i, j) - b(i, j)));
        r.detail = os.str();
        return r;
      }
  return r;
}

template <class S>
IdentityResult matrix_vanishes(std::string label, const Matrix<S>& a) {
  return matrices_equal(std::move(label), a, Matrix<S>(a.rows(), a.cols()));
}

}  // namespace qgl3
