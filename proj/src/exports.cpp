#include "qgl3/cli/exports.hpp"

#include "qgl3/algebra/gl3.hpp"
#include "qgl3/mono/center.hpp"
#include "qgl3/mono/closedform.hpp"
#include "qgl3/mono/rll.hpp"
#include "qgl3/mono/rmatrix.hpp"
#include "qgl3/rep/representation.hpp"
#include "qgl3/scalar/qcontext.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgl3 {
namespace {

using Json = nlohmann::ordered_json;
using Mat = Matrix<FieldScalar>;

std::string lowered(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

int parse_rep_power(const std::string& name) {
  if (name == "fund") return 1;
  if (name.rfind("tensor:", 0) == 0) {
    const std::string tail = name.substr(7);
    if (tail == "1") return 1;
    if (tail == "2") return 2;
    if (tail == "3") return 3;
  }
  throw std::invalid_argument("unknown representation '" + name +
                              "' (expected fund or tensor:n with n <= 3)");
}

Representation<SymbolicQ> build_rep(const SymbolicQ& ctx, int power) {
  Representation<SymbolicQ> acc = fundamental(ctx);
  const Representation<SymbolicQ> f = acc;
  for (int i = 1; i < power; ++i) acc = tensor(ctx, acc, f);
  return acc;
}

// ---- LaTeX rendering -------------------------------------------------------

std::string rat_latex(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  const Rational a = r < 0 ? Rational(-r) : r;
  const std::string f = "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
  return r < 0 ? "-" + f : f;
}

std::string monomial_latex(long exp_sixths, const Rational& coeff) {
  if (exp_sixths == 0) return rat_latex(coeff);
  std::string qq;
  if (exp_sixths == 6) {
    qq = "q";
  } else {
    qq = "q^{" + rat_string(make_ratio(exp_sixths, 6)) + "}";
  }
  if (coeff == 1) return qq;
  if (coeff == -1) return "-" + qq;
  return rat_latex(coeff) + " " + qq;
}

std::string laurent_latex(const Laurent& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (first) {
      os << monomial_latex(e, c);
      first = false;
    } else if (c < 0) {
      os << " - " << monomial_latex(e, -c);
    } else {
      os << " + " << monomial_latex(e, c);
    }
  }
  return os.str();
}

std::string field_latex(const FieldScalar& s) {
  const FieldScalar c = s.canonical();
  if (c.den().is_one()) return laurent_latex(c.num());
  return "\\frac{" + laurent_latex(c.num()) + "}{" + laurent_latex(c.den()) + "}";
}

// Scalar coefficient of a zeta power: "1" drops, "-1" keeps the sign, any
// other value is parenthesized.
std::string zeta_term_latex(const FieldScalar& s, long e) {
  std::string z;
  if (e == 1)
    z = "\\zeta";
  else if (e != 0)
    z = "\\zeta^{" + std::to_string(e) + "}";
  if (s.is_one()) return z.empty() ? "1" : z;
  const std::string body = field_latex(s);
  if (body == "-1" && !z.empty()) return "-" + z;
  return "\\left(" + body + "\\right)" + (z.empty() ? "" : " " + z);
}

std::string poly_latex(const std::map<long, FieldScalar>& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, v] : p) {
    if (v.is_zero()) continue;
    if (!first) os << " + ";
    os << zeta_term_latex(v, e);
    first = false;
  }
  return first ? "0" : os.str();
}

std::string matrix_latex(const Mat& m) {
  std::ostringstream os;
  os << "\\begin{pmatrix} ";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << " & ";
      os << field_latex(m(i, j));
    }
    if (i + 1 < m.rows()) os << " \\\\ ";
  }
  os << " \\end{pmatrix}";
  return os.str();
}

std::string cartan_latex(const CartanMonomial& m) {
  const std::pair<Rational, const char*> parts[] = {
      {m.a, "G_1"}, {m.b, "G_2"}, {m.c, "G_3"}};
  std::ostringstream os;
  bool first = true;
  for (const auto& [r, g] : parts) {
    if (r == 0) continue;
    if (first) {
      if (r == -1)
        os << '-';
      else if (r != 1)
        os << rat_string(r) << ' ';
    } else if (r < 0) {
      os << " - ";
      if (r != -1) os << rat_string(-r) << ' ';
    } else {
      os << " + ";
      if (r != 1) os << rat_string(r) << ' ';
    }
    os << g;
    first = false;
  }
  if (first) return "1";
  return "q^{" + os.str() + "}";
}

std::string factor_latex(const Factor& f) {
  if (const Gen* g = std::get_if<Gen>(&f)) {
    switch (*g) {
      case Gen::E1: return "E_1";
      case Gen::E2: return "E_2";
      case Gen::F1: return "F_1";
      case Gen::F2: return "F_2";
    }
  }
  return cartan_latex(std::get<CartanMonomial>(f));
}

std::string expression_latex(const AlgebraExpression& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& w : e.words()) {
    if (!first) os << " + ";
    first = false;
    if (!w.coeff.is_one() || w.factors.empty())
      os << "\\left(" << field_latex(w.coeff) << "\\right)";
    for (std::size_t i = 0; i < w.factors.size(); ++i) {
      if (i || !w.coeff.is_one()) os << " \\, ";
      os << factor_latex(w.factors[i]);
    }
  }
  return os.str();
}

std::string center_monomial_latex(const std::array<int, 3>& m, const Rational& c) {
  std::ostringstream os;
  const bool bare = m[0] == 0 && m[1] == 0 && m[2] == 0;
  if (c == -1 && !bare)
    os << '-';
  else if (c != 1 || bare)
    os << rat_latex(c) << (bare ? "" : " ");
  for (int i = 0; i < 3; ++i) {
    if (m[i] == 0) continue;
    os << "C_{" << i + 1 << "}";
    if (m[i] > 1) os << "^{" << m[i] << "}";
    os << ' ';
  }
  std::string r = os.str();
  if (!r.empty() && r.back() == ' ') r.pop_back();
  return r;
}

std::string center_poly_latex(const CenterPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms) {
    if (!first && c > 0) os << " + ";
    if (!first && c < 0) {
      os << " - " << center_monomial_latex(m, -c);
      continue;
    }
    os << center_monomial_latex(m, c);
    first = false;
  }
  return os.str();
}

// ---- JSON building blocks --------------------------------------------------

Json poly_json(const std::map<long, FieldScalar>& p) {
  Json terms = Json::array();
  for (const auto& [e, v] : p) {
    if (v.is_zero()) continue;
    terms.push_back(Json{{"zeta-exponent", e}, {"scalar", v.to_string()}});
  }
  return terms;
}

// Dense row-major dump.
Json matrix_json(const Mat& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a.push_back(m(i, j).to_string());
  return a;
}

Json grading_json(const GradingSpec& s) { return Json{s.s0, s.s1, s.s2}; }

// ---- Targets ----------------------------------------------------------------

std::string export_r(const GradingSpec& s, ExportFormat fmt) {
  const SymbolicQ ctx;
  const RMatrixData<SymbolicQ> r = r_matrix(ctx, s);
  if (fmt == ExportFormat::json) {
    Json j;
    j["target"] = "R";
    j["grading"] = grading_json(s);
    j["s-delta"] = s.s_delta();
    Json entries = Json::array();
    for (int i = 0; i < 9; ++i)
      for (int k = 0; k < 9; ++k)
        entries.push_back(
            Json{{"row", i + 1}, {"column", k + 1}, {"terms", poly_json(r.b[i][k])}});
    j["b-block"] = entries;
    Json diag = Json::array();
    for (int i = 0; i < 9; ++i) diag.push_back(r.k_diag[i].to_string());
    j["k-diagonal"] = diag;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "R(\\zeta) = \\begin{pmatrix}\n";
  for (int i = 0; i < 9; ++i) {
    for (int k = 0; k < 9; ++k) {
      if (k) os << " & ";
      os << poly_latex(r.component(i, k));
    }
    os << (i + 1 < 9 ? " \\\\\n" : "\n");
  }
  os << "\\end{pmatrix}\n";
  return os.str();
}

std::string export_monodromy(bool flipped, const std::string& rep_name, const GradingSpec& s,
                             std::size_t order, ExportFormat fmt) {
  const SymbolicQ ctx;
  const Representation<SymbolicQ> rep = build_rep(ctx, parse_rep_power(rep_name));
  const GradedMatrix<Mat> g = graded_from_blocks(
      ctx, rep, flipped ? twisted_display_blocks() : closed_form_blocks(), s, order, true);
  const ZSeries<Mat> fser = central_series(ctx, rep, order);
  ZSeries<Mat> pref;
  if (flipped) {
    const FieldScalar mq = -q_pow(ctx, 1);
    const FieldScalar mqi = -q_pow(ctx, -1);
    pref = series_exp(series_scale_arg(fser, mqi) + series_scale_arg(fser, mq));
  } else {
    pref = series_exp(fser);
  }
  const MonoEntryPolys<SymbolicQ> polys =
      entry_polynomials<SymbolicQ>(apply_central_series(g, pref));
  const char* name = flipped ? "Mbar" : "M";
  if (fmt == ExportFormat::json) {
    Json j;
    j["target"] = name;
    j["representation"] = rep_name;
    j["grading"] = grading_json(s);
    j["s-delta"] = s.s_delta();
    j["order"] = order;
    j["dimension"] = rep.dim();
    Json entries = Json::array();
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        Json blocks = Json::array();
        for (const auto& [e, m] : polys.entry[a][b])
          blocks.push_back(Json{{"zeta-exponent", e}, {"matrix", matrix_json(m)}});
        entries.push_back(Json{{"row", a + 1}, {"column", b + 1}, {"blocks", blocks}});
      }
    j["entries"] = entries;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  const std::string head = flipped ? "\\bar{M}" : "M";
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      os << head << "_{" << a + 1 << b + 1 << "}(\\zeta) = ";
      if (polys.entry[a][b].empty()) {
        os << "0\n";
        continue;
      }
      bool first = true;
      for (const auto& [e, m] : polys.entry[a][b]) {
        if (!first) os << " + ";
        first = false;
        if (e == 1)
          os << "\\zeta \\, ";
        else if (e != 0)
          os << "\\zeta^{" << e << "} \\, ";
        os << matrix_latex(m);
      }
      os << "\n";
    }
  return os.str();
}

std::string export_casimir(int k, ExportFormat fmt) {
  const AlgebraExpression c = casimir(k);
  if (fmt == ExportFormat::json) {
    Json j;
    j["target"] = "casimir:" + std::to_string(k);
    Json words = Json::array();
    for (const auto& w : c.words()) {
      Json factors = Json::array();
      for (const auto& f : w.factors) factors.push_back(factor_tag(f));
      words.push_back(Json{{"coefficient", w.coeff.to_string()}, {"factors", factors}});
    }
    j["words"] = words;
    return j.dump(2) + "\n";
  }
  return "C^{(" + std::to_string(k) + ")} = " + expression_latex(c) + "\n";
}

std::string export_f_series(std::size_t order, ExportFormat fmt) {
  const SymbolicQ ctx;
  const std::vector<CenterPoly> words = center_log_words(order);
  if (fmt == ExportFormat::json) {
    Json j;
    j["target"] = "F-series";
    j["order"] = order;
    Json coeffs = Json::array();
    for (std::size_t k = 1; k <= order; ++k) {
      Json ws = Json::array();
      for (const auto& [m, c] : words[k].terms)
        ws.push_back(Json{{"monomial", Json{m[0], m[1], m[2]}}, {"coefficient", rat_string(c)}});
      coeffs.push_back(
          Json{{"order", k},
               {"scale", prefactor_coefficient(ctx, static_cast<long>(k)).to_string()},
               {"words", ws}});
    }
    j["coefficients"] = coeffs;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "F(z) = \\sum_{k \\ge 1} \\frac{F_k}{k \\left(q^{2k} + 1 + q^{-2k}\\right)} z^k\n";
  for (std::size_t k = 1; k <= order; ++k)
    os << "F_{" << k << "} = " << center_poly_latex(words[k]) << "\n";
  return os.str();
}

}  // namespace

std::string export_target(const std::string& what, const std::string& rep_name,
                          const GradingSpec& s, std::size_t order, ExportFormat format) {
  const std::string w = lowered(what);
  if (w == "r") return export_r(s, format);
  if (w == "m") return export_monodromy(false, rep_name, s, order, format);
  if (w == "mbar") return export_monodromy(true, rep_name, s, order, format);
  if (w.rfind("casimir:", 0) == 0) {
    const std::string tail = w.substr(8);
    if (tail == "1" || tail == "2" || tail == "3") return export_casimir(tail[0] - '0', format);
    throw std::invalid_argument("unknown central word '" + what + "' (expected casimir:1..3)");
  }
  if (w == "f-series") return export_f_series(order, format);
  throw std::invalid_argument("unknown export target '" + what +
                              "' (expected R, M, Mbar, casimir:k, F-series)");
}

}  // namespace qgl3
