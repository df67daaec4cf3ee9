// End-to-end certification of the monodromy family.  Each test case covers
// one acceptance criterion and prints a single PASS/FAIL line, so the binary
// doubles as a human-readable gate:
//
//   ACCEPTANCE  1 <name>: PASS
//
// The last criterion shells out to the command-line driver to confirm the
// suite actually fails when a sign is corrupted and rejects degenerate
// rational samples.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgl3/algebra/relations.hpp"
#include "qgl3/mono/checks.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <sys/wait.h>

using qgl3::FieldScalar;
using qgl3::GradingSpec;
using qgl3::IdentityResult;
using qgl3::LoopVariant;
using qgl3::Matrix;
using qgl3::NumericQ;
using qgl3::Rational;
using qgl3::SymbolicQ;
using qgl3::make_ratio;

namespace {

NumericQ numeric_point() { return NumericQ{make_ratio(3, 2)}; }

bool all_pass(const std::vector<IdentityResult>& rs) {
  bool ok = !rs.empty();
  for (const auto& r : rs)
    if (!r.ok) {
      ok = false;
      MESSAGE(r.label << (r.detail.empty() ? std::string() : " [" + r.detail + "]"));
    }
  return ok;
}

void certify(int n, const std::string& name, bool ok) {
  std::printf("ACCEPTANCE %2d %s: %s\n", n, name.c_str(), ok ? "PASS" : "FAIL");
  std::fflush(stdout);
  INFO("criterion " << n << ": " << name);
  CHECK(ok);
}

bool poly_is(const std::map<long, FieldScalar>& got,
             const std::vector<std::pair<long, FieldScalar>>& want) {
  if (got.size() != want.size()) return false;
  for (const auto& [e, v] : want) {
    const auto it = got.find(e);
    if (it == got.end() || !(it->second == v)) return false;
  }
  return true;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(QGL3_CLI_PATH) + " " + args;
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST_CASE("criterion 1") {
  const SymbolicQ sym;
  const auto fund = qgl3::fundamental(sym);
  const auto t2 = tensor(sym, fund, fund);
  const auto t3 = tensor(sym, t2, fund);
  bool ok = fund.dim() == 3 && t2.dim() == 9 && t3.dim() == 27;
  ok = all_pass(qgl3::check_gl3_relations(sym, fund)) && ok;
  ok = all_pass(qgl3::check_gl3_relations(sym, t2)) && ok;
  ok = all_pass(qgl3::check_gl3_relations(sym, t3)) && ok;
  certify(1, "quantized relations in dimensions 3, 9, 27", ok);
}

TEST_CASE("criterion 2") {
  const SymbolicQ sym;
  const auto fund = qgl3::fundamental(sym);
  const auto t2 = tensor(sym, fund, fund);
  const auto t3 = tensor(sym, t2, fund);
  bool ok = true;
  for (const auto* rep : {&fund, &t2, &t3}) {
    ok = all_pass(qgl3::check_loop_relations(sym, *rep, qgl3::loop_images())) && ok;
    ok = all_pass(qgl3::check_loop_relations(sym, *rep,
                                             qgl3::loop_images(LoopVariant::traceless))) &&
         ok;
  }
  certify(2, "loop-algebra relations, standard and traceless images", ok);
}

TEST_CASE("criterion 3") {
  const SymbolicQ sym;
  const auto q = [&](long u) { return qgl3::q_pow(sym, u); };
  const FieldScalar one = q(0);
  const FieldScalar kap = qgl3::kappa(sym);

  bool ok = true;
  {
    const GradingSpec s{1, 1, 1};
    const auto r = qgl3::r_matrix(sym, s);
    int nonzero = 0;
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j)
        if (!r.b[i][j].empty()) ++nonzero;
    ok = nonzero == 15 && ok;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        const int i = 3 * a + b;
        ok = poly_is(r.b[i][i], {{0, one}, {3, a == b ? -q(-2) : -one}}) && ok;
        ok = r.k_diag[i] == qgl3::q_pow_sixths(sym, a == b ? 4 : -2) && ok;
      }
    ok = poly_is(r.b[1][3], {{1, kap}}) && ok;
    ok = poly_is(r.b[3][1], {{2, kap}}) && ok;
    ok = poly_is(r.b[2][6], {{2, kap}}) && ok;
    ok = poly_is(r.b[6][2], {{1, kap}}) && ok;
    ok = poly_is(r.b[5][7], {{1, kap}}) && ok;
    ok = poly_is(r.b[7][5], {{2, kap}}) && ok;
    ok = poly_is(r.component(0, 0), {{0, qgl3::q_pow_sixths(sym, 4)},
                                     {3, -q(-2) * qgl3::q_pow_sixths(sym, 4)}}) &&
         ok;
  }
  {
    const GradingSpec s{2, 1, 3};
    const auto r = qgl3::r_matrix(sym, s);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        const int i = 3 * a + b;
        ok = poly_is(r.b[i][i], {{0, one}, {6, a == b ? -q(-2) : -one}}) && ok;
      }
    ok = poly_is(r.b[1][3], {{1, kap}}) && ok;
    ok = poly_is(r.b[3][1], {{5, kap}}) && ok;
    ok = poly_is(r.b[2][6], {{4, kap}}) && ok;
    ok = poly_is(r.b[6][2], {{2, kap}}) && ok;
    ok = poly_is(r.b[5][7], {{3, kap}}) && ok;
    ok = poly_is(r.b[7][5], {{3, kap}}) && ok;
  }
  ok = all_pass({qgl3::check_triple_exchange(sym, GradingSpec{1, 1, 1})}) && ok;
  ok = all_pass({qgl3::check_triple_exchange(sym, GradingSpec{2, 1, 3})}) && ok;
  ok = all_pass({qgl3::check_triple_exchange(numeric_point(), GradingSpec{1, 1, 1})}) && ok;
  certify(3, "exchange matrix entries and the two-variable braid identity", ok);
}

TEST_CASE("criterion 4") {
  const SymbolicQ sym;
  const bool ok = all_pass(qgl3::check_positional(sym, GradingSpec{1, 1, 1}, 6));
  certify(4, "positional reading with its scalar prefactor", ok);
}

TEST_CASE("criterion 5") {
  const SymbolicQ sym;
  const GradingSpec s{1, 1, 1};
  const auto fund = qgl3::fundamental(sym);
  const auto t2 = tensor(sym, fund, fund);
  const auto t3 = tensor(sym, t2, fund);
  bool ok = true;
  for (const auto* rep : {&fund, &t2, &t3}) {
    const auto data = qgl3::build_factor_data(sym, *rep, s, 6);
    ok = all_pass(qgl3::check_kt_factors(sym, *rep, data, s, 6)) && ok;
    ok = all_pass(qgl3::check_uvw(sym, *rep, data, s, 6)) && ok;
  }
  certify(5, "triangular factorization and the assembled product", ok);
}

TEST_CASE("criterion 6") {
  const SymbolicQ sym;
  const auto fund = qgl3::fundamental(sym);
  const auto t2 = tensor(sym, fund, fund);
  const auto t3 = tensor(sym, t2, fund);
  bool ok = true;
  for (const auto* rep : {&fund, &t2, &t3})
    ok = all_pass(qgl3::check_centrality(sym, *rep)) && ok;
  certify(6, "central words commute with every generator", ok);
}

TEST_CASE("criterion 7") {
  const SymbolicQ sym;
  const auto fund = qgl3::fundamental(sym);
  const auto t2 = tensor(sym, fund, fund);
  const auto t3 = tensor(sym, t2, fund);
  bool ok = true;
  for (const auto* rep : {&fund, &t2, &t3})
    ok = all_pass(qgl3::check_eigenvalues(sym, *rep)) && ok;

  const auto count_weight = [&](const auto& hw, long a, long b, long c) {
    int n = 0;
    for (const auto& [w, v] : hw)
      if (w.w1 == Rational(a) && w.w2 == Rational(b) && w.w3 == Rational(c)) ++n;
    return n;
  };
  const auto h1 = qgl3::highest_weight_vectors(sym, fund);
  ok = h1.size() == 1 && count_weight(h1, 1, 0, 0) == 1 && ok;
  const auto h2 = qgl3::highest_weight_vectors(sym, t2);
  ok = h2.size() == 2 && count_weight(h2, 2, 0, 0) == 1 && count_weight(h2, 1, 1, 0) == 1 && ok;
  const auto h3 = qgl3::highest_weight_vectors(sym, t3);
  ok = h3.size() == 4 && count_weight(h3, 3, 0, 0) == 1 && count_weight(h3, 2, 1, 0) == 2 &&
       count_weight(h3, 1, 1, 1) == 1 && ok;
  certify(7, "eigenvalue factorization over the highest-weight spectrum", ok);
}

TEST_CASE("criterion 8") {
  const SymbolicQ sym;
  const auto fund = qgl3::fundamental(sym);
  const auto t2 = tensor(sym, fund, fund);
  bool ok = true;
  for (const auto* rep : {&fund, &t2})
    for (const GradingSpec& s : {GradingSpec{1, 1, 1}, GradingSpec{1, 2, 1}}) {
      ok = all_pass(qgl3::check_exchange_source(sym, *rep, s, 6)) && ok;
      ok = all_pass(qgl3::check_exchange_flipped(sym, *rep, s, 6)) && ok;
      ok = all_pass(qgl3::check_rotations(sym, *rep, s, 6)) && ok;
    }
  certify(8, "exchange relations for the source, flipped, and rotated forms", ok);
}

TEST_CASE("criterion 9") {
  const SymbolicQ sym;
  const auto fund = qgl3::fundamental(sym);
  const auto t2 = tensor(sym, fund, fund);
  const auto t3 = tensor(sym, t2, fund);
  const auto spec = qgl3::AutomorphismSpec::symmetric_form();
  const auto disp = qgl3::display_form_blocks();
  const auto bal = qgl3::symmetric_display_blocks();
  bool ok = true;
  for (const auto* rep : {&fund, &t2, &t3})
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (disp.entry[a][b].size() != bal.entry[a][b].size()) {
          ok = false;
          continue;
        }
        for (std::size_t k = 0; k < disp.entry[a][b].size(); ++k)
          ok = evaluate(sym, *rep, apply_automorphism(spec, disp.entry[a][b][k])) ==
                   evaluate(sym, *rep, bal.entry[a][b][k]) &&
               ok;
      }
  certify(9, "balanced presentation as the automorphism image of the display", ok);
}

TEST_CASE("criterion 10") {
  const SymbolicQ sym;
  const auto fund = qgl3::fundamental(sym);
  const auto t2 = tensor(sym, fund, fund);
  const auto t3 = tensor(sym, t2, fund);
  bool ok = true;
  for (const auto* rep : {&fund, &t2, &t3})
    ok = all_pass(qgl3::check_rank_two(sym, *rep, GradingSpec{1, 1, 1}, 6)) && ok;
  certify(10, "rank-two reduction of the renormalized forms", ok);
}

TEST_CASE("criterion 11") {
  const std::string report = "/tmp/qgl3_acceptance_report.json";
  std::remove(report.c_str());
  bool ok = true;

  const int flip_exit = run_cli("--flip-sign-debug --checks mer,uvw,rll --reps fund --order 3"
                                " --out " +
                                report + " 2>/dev/null");
  ok = flip_exit == 1 && ok;

  std::ifstream in(report);
  ok = in.good() && ok;
  if (in.good()) {
    const auto doc = nlohmann::json::parse(in);
    ok = doc.at("status") == "fail" && ok;
    const auto& records = doc.at("records");
    ok = records.size() == 3 && ok;
    for (const auto& rec : records) {
      ok = rec.at("status") == "fail" && ok;
      const auto& coeff = rec.at("first-failing-coefficient");
      ok = coeff.is_string() && !coeff.get<std::string>().empty() && ok;
    }
  }

  const int degenerate_exit = run_cli("--q 1 --checks ybe --reps fund >/dev/null 2>&1");
  ok = degenerate_exit == 2 && ok;

  certify(11, "sign corruption fails loudly and degenerate samples are rejected", ok);
}
