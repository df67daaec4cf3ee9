#include "qgl3/algebra/expression.hpp"

#include <algorithm>

namespace qgl3 {

std::string factor_tag(const Factor& f) {
  if (const Gen* g = std::get_if<Gen>(&f)) {
    switch (*g) {
      case Gen::E1: return "E1";
      case Gen::E2: return "E2";
      case Gen::F1: return "F1";
      case Gen::F2: return "F2";
    }
  }
  return cartan_tag(std::get<CartanMonomial>(f));
}

AlgebraExpression AlgebraExpression::scalar(FieldScalar c) {
  AlgebraExpression e;
  if (!c.is_zero()) e.words_.push_back({std::move(c), {}});
  return e;
}

AlgebraExpression AlgebraExpression::generator(Gen g) {
  AlgebraExpression e;
  e.words_.push_back({FieldScalar(1), {Factor(g)}});
  return e;
}

AlgebraExpression AlgebraExpression::cartan(CartanMonomial m, FieldScalar coeff) {
  AlgebraExpression e;
  if (coeff.is_zero()) return e;
  GeneratorWord w{std::move(coeff), {}};
  if (!m.is_identity()) w.factors.emplace_back(m);
  e.words_.push_back(std::move(w));
  return e;
}

AlgebraExpression AlgebraExpression::operator-() const {
  AlgebraExpression e(*this);
  for (auto& w : e.words_) w.coeff = -w.coeff;
  return e;
}

AlgebraExpression& AlgebraExpression::operator+=(const AlgebraExpression& o) {
  words_.insert(words_.end(), o.words_.begin(), o.words_.end());
  return merge();
}

AlgebraExpression& AlgebraExpression::operator-=(const AlgebraExpression& o) {
  return *this += -o;
}

namespace {

// Concatenate factor sequences, merging a Cartan boundary pair.
std::vector<Factor> concat_factors(const std::vector<Factor>& a,
                                   const std::vector<Factor>& b) {
  std::vector<Factor> out = a;
  std::size_t start = 0;
  if (!out.empty() && !b.empty()) {
    const CartanMonomial* x = std::get_if<CartanMonomial>(&out.back());
    const CartanMonomial* y = std::get_if<CartanMonomial>(&b.front());
    if (x != nullptr && y != nullptr) {
      CartanMonomial merged = (*x) * (*y);
      out.pop_back();
      if (!merged.is_identity()) out.emplace_back(merged);
      start = 1;
    }
  }
  out.insert(out.end(), b.begin() + static_cast<long>(start), b.end());
  return out;
}

}  // namespace

AlgebraExpression operator*(const AlgebraExpression& a, const AlgebraExpression& b) {
  AlgebraExpression e;
  for (const auto& wa : a.words()) {
    for (const auto& wb : b.words()) {
      GeneratorWord w;
      w.coeff = wa.coeff * wb.coeff;
      if (w.coeff.is_zero()) continue;
      w.factors = concat_factors(wa.factors, wb.factors);
      e.words_.push_back(std::move(w));
    }
  }
  return e.merge();
}

AlgebraExpression& AlgebraExpression::scale_by(const FieldScalar& c) {
  if (c.is_zero()) {
    words_.clear();
    return *this;
  }
  for (auto& w : words_) w.coeff = w.coeff * c;
  return *this;
}

AlgebraExpression& AlgebraExpression::merge() {
  std::vector<GeneratorWord> out;
  for (auto& w : words_) {
    if (w.coeff.is_zero()) continue;
    bool found = false;
    for (auto& o : out) {
      if (o.factors == w.factors) {
        o.coeff += w.coeff;
        found = true;
        break;
      }
    }
    if (!found) out.push_back(std::move(w));
  }
  std::erase_if(out, [](const GeneratorWord& w) { return w.coeff.is_zero(); });
  words_ = std::move(out);
  return *this;
}

AlgebraExpression substitute_generators(
    const AlgebraExpression& e, const std::array<AlgebraExpression, 4>& images) {
  AlgebraExpression out;
  for (const auto& w : e.words()) {
    AlgebraExpression prod = AlgebraExpression::scalar(w.coeff);
    for (const auto& f : w.factors) {
      if (const Gen* g = std::get_if<Gen>(&f)) {
        prod = prod * images[static_cast<std::size_t>(*g)];
      } else {
        prod = prod * AlgebraExpression::cartan(std::get<CartanMonomial>(f));
      }
    }
    out += prod;
  }
  return out;
}

}  // namespace qgl3
