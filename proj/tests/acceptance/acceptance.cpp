// One line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "../unit/test_oracles.hpp"
#include "../unit/test_support.hpp"
#include "folint/cli/app.hpp"
#include "folint/cli/report.hpp"

using namespace folint;
using folint::testing::brute_force_diophantine;
using folint::testing::Q;
using folint::testing::span_rank;
using folint::testing::wedge_components;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void check(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

std::pair<int, Json> cli_json(std::vector<std::string> args) {
  for (auto& a : args)
    if (a.size() > 4 && a.substr(a.size() - 4) == ".fol") a = std::string(FOLINT_FIXTURES_DIR) + "/" + a;
  args.push_back("--format");
  args.push_back("json");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, Json::parse(out.str())};
}

bool wedge_vanishes(const QMultiPoly& F, const QMultiPoly& G, const std::string& fixture) {
  const QOneForm w = folint::testing::load_foliation(fixture).rational_form();
  for (const auto& c : wedge_components(F, G, w))
    if (!c.is_zero()) return false;
  return true;
}

std::string str(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

Outcome degree_three() {
  Outcome o;
  const auto [code, j] = cli_json({"integrate", "degree3.fol", "--max-degree", "4"});
  o.check(code == 0, "exit code " + std::to_string(code));
  o.check(j.value("verdict", "") == "first_integral", "verdict " + str(j["verdict"]));
  if (!o.pass) return o;
  const QMultiPoly F = Q(j["numerator"]), G = Q(j["denominator"]);
  o.check(span_rank({F, G}) == 2 && span_rank({F, G, Q("X^3 - 2*Y^3 + Y*Z^2"), Q("X*Z^2")}) == 2,
          "basis does not span the expected pencil");
  o.check(j["solutions"].size() == 1 && j["solutions"][0]["d"] == 3, "Diophantine solutions " + j["solutions"].dump());
  for (const auto& k : j["solutions"][0]["k"]) o.check(k == 1, "k not identically 1");
  o.check(j["wedge_certificate"] == "zero", "certificate " + str(j["wedge_certificate"]));
  o.check(wedge_vanishes(F, G, "degree3.fol"), "wedge recomputation nonzero");
  o.detail = o.pass ? "F/G = (" + render(F) + ")/(" + render(G) + ")" : o.detail;
  return o;
}

Outcome f40() {
  Outcome o;
  const auto [acode, a] = cli_json({"analyze", "f40.fol"});
  o.check(acode == 0, "analyze exit code " + std::to_string(acode));
  const Json& locus = a["locus"];
  o.check(locus["non_reduced"] == 12 && locus["reduced"] == 9, "counts " + locus["non_reduced"].dump() + "/" +
                                                                    locus["reduced"].dump());
  o.check(locus["weighted_milnor"] == 21 && locus["expected_milnor"] == 4 * 4 + 4 + 1, "Milnor sum");
  bool zeta3 = false;
  for (const auto& c : locus["classes"]) zeta3 = zeta3 || c["field"] == "Q[t]/(t^2 + t + 1)";
  o.check(zeta3, "no class over Q(zeta_3)");

  const auto [code, j] = cli_json({"integrate", "f40.fol", "--max-degree", "7"});
  o.check(code == 0 && j.value("verdict", "") == "first_integral", "integrate verdict " + str(j["verdict"]));
  if (!o.pass) return o;
  o.check(j["solution"]["d"] == 6, "d = " + j["solution"]["d"].dump());
  o.check(j["solution"]["multiset"] == Json::parse("[3,3,3,1,1,1,1,1,1,1,1,1]"),
          "multiset " + j["solution"]["multiset"].dump());
  o.check(j["candidates"].back()["dimension"] == 2, "system dimension");
  const QMultiPoly F = Q(j["numerator"]), G = Q(j["denominator"]);
  o.check(span_rank({F, G, Q("3*X^3*Y^3 - X^3*Z^3 - 2*Y^3*Z^3"), Q("2*X^3*Y^3 - X^3*Z^3 - Y^3*Z^3")}) == 2,
          "basis does not span the expected pencil");
  o.check(j["wedge_certificate"] == "zero" && wedge_vanishes(F, G, "f40.fol"), "wedge not zero");
  int triple = 0;
  for (const auto& p : j["conditions"]["d"]["points"]) {
    if (p["k"] != 3) continue;
    ++triple;
    o.check(p["milnor"] == 25 && p["tjurina"] == 25, "mu/tau at " + str(p["point"]));
    o.check(p["type"] == "S(1,1,6)" && p["type_match"] == true, "type at " + str(p["point"]));
  }
  o.check(triple == 3, std::to_string(triple) + " classes with k = 3");
  if (o.pass) o.detail = "d = 6, {3,3,3,1^9}, mu = tau = 25, S(1,1,6) at 3 classes";
  return o;
}

Outcome fa_family() {
  Outcome o;
  for (const std::string name : {"fa2.fol", "fa1_2.fol"}) {
    const auto [code, j] = cli_json({"integrate", name, "--max-degree", "10"});
    o.check(code == 0 && j.value("verdict", "") == "proven_no", name + ": verdict " + str(j["verdict"]));
    o.check(j.contains("obstruction") && j["obstruction"]["type"] == "cardinality", name + ": obstruction");
    if (!o.pass) return o;
    const int n = j["obstruction"]["n"];
    o.check(j["obstruction"]["r"] == 2 && (n == 1 || n == 2), name + ": n = " + std::to_string(n));
    o.detail += (o.detail.empty() ? "" : ", ") + name + " n = " + std::to_string(n);
  }
  return o;
}

Outcome degree_one() {
  Outcome o;
  const auto [code, c] = cli_json({"certify", "degree1.fol", "--numerator", "X*Y", "--denominator", "Z^2"});
  o.check(code == 0 && c.value("result", "") == "certified_zero", "certify " + str(c["result"]));
  const auto [acode, a] = cli_json({"analyze", "degree1.fol"});
  o.check(acode == 0, "analyze exit code");
  std::map<std::string, std::string> kinds;
  for (const auto& p : a["locus"]["classes"]) kinds[p["point"]] = p["kind"];
  o.check(kinds == std::map<std::string, std::string>{{"(0 : 0 : 1)", "reduced"},
                                                      {"(0 : 1 : 0)", "non_reduced"},
                                                      {"(1 : 0 : 0)", "non_reduced"}},
          "singularities " + a["locus"]["classes"].dump());
  if (o.pass) o.detail = "XY/Z^2 certified; (1:0:0), (0:1:0) non-reduced, (0:0:1) reduced";
  return o;
}

Outcome germs() {
  Outcome o;
  const auto [code, g] = cli_json({"germ", "u^3*v^0 + 2*v^3 - 3*u^3*v^3", "--times", "u^3+v^3-2*u^3*v^3"});
  o.check(code == 0 && g["milnor"] == 25 && g["tjurina"] == 25, "h1 h2: " + g.dump());
  int cases = 0;
  for (long a = 1; a <= 11; ++a)
    for (long b = 1; b <= 11; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (long k = 1; k * a + k * b <= 12; ++k) {
        const KMultiPoly f = KMultiPoly::var(0).pow(static_cast<int>(k * a)) + KMultiPoly::var(1).pow(static_cast<int>(k * b));
        // the Jacobian ideal is (u^(ka-1), v^(kb-1)); count standard monomials
        const long oracle = (k * a - 1) * (k * b - 1);
        const int mu = germ_milnor(f), tau = germ_tjurina(f);
        o.check(mu == oracle && tau == mu, "S(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                               std::to_string(k) + "): mu " + std::to_string(mu));
        ++cases;
      }
    }
  if (o.pass) o.detail = "mu = tau = 25 for h1 h2; " + std::to_string(cases) + " Brieskorn germs";
  return o;
}

Outcome clusters() {
  Outcome o;
  int sums = 0, blowups = 0;
  for (long rho = 1; rho <= 30; ++rho)
    for (long delta = 1; delta <= 30; ++delta) {
      if (std::gcd(rho, delta) != 1) continue;
      const auto m = euclid_multiplicities(rho, delta);
      const long s1 = std::accumulate(m.begin(), m.end(), 0L);
      long s2 = 0;
      for (int x : m) s2 += static_cast<long>(x) * x;
      o.check(s1 == rho + delta - 1 && s2 == rho * delta,
              "(" + std::to_string(rho) + "," + std::to_string(delta) + ")");
      ++sums;
      if (rho > 8 || delta > 8) continue;
      std::vector<int> oracle;
      folint::testing::monomial_blowups({{static_cast<int>(rho), 0}, {0, static_cast<int>(delta)}}, oracle);
      std::sort(oracle.rbegin(), oracle.rend());
      o.check(oracle == m, "blowup oracle at (" + std::to_string(rho) + "," + std::to_string(delta) + ")");
      ++blowups;
    }
  if (o.pass) o.detail = std::to_string(sums) + " pairs, " + std::to_string(blowups) + " against the blowup oracle";
  return o;
}

Outcome round_trip() {
  Outcome o;
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<int> coeff(-5, 5);
  int recovered = 0, skipped = 0, attempted = 0;
  while (attempted < 50 && skipped < 200) {
    const int d = 1 + (attempted + skipped) % 3;
    QMultiPoly F, G;
    for (const auto& e : monomials_of_degree(d)) {
      F.add_term(e, Rational(coeff(rng)));
      G.add_term(e, Rational(coeff(rng)));
    }
    if (F.degree() != d || G.degree() != d || homogeneous_gcd(F, G).degree() > 0) continue;
    Foliation f = Foliation::make(pencil_differential(F, G));
    try {
      check_nondegenerate(singular_locus(f), f.degree());
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegenerateFoliation) throw;
      ++skipped;
      continue;
    }
    ++attempted;
    IntegrateOptions opt;
    opt.max_degree = d + 1;
    opt.diagnostics = false;
    const IntegrabilityReport rep = find_first_integral(f, opt);
    const bool ok = rep.verdict == Verdict::FirstIntegral &&
                    span_rank({*rep.numerator, *rep.denominator}) == 2 &&
                    span_rank({*rep.numerator, *rep.denominator, F, G}) == 2;
    o.check(ok, "not recovered: F = " + render(F) + ", G = " + render(G) + " (" + verdict_name(rep.verdict) + ")");
    if (ok) ++recovered;
  }
  o.check(attempted >= 50, "only " + std::to_string(attempted) + " non-degenerate pencils");
  o.check(recovered >= 20, "only " + std::to_string(recovered) + " recoveries");
  if (o.pass)
    o.detail = std::to_string(recovered) + "/" + std::to_string(attempted) + " recovered, " + std::to_string(skipped) +
               " degenerate skipped";
  return o;
}

Outcome diophantine() {
  Outcome o;
  const auto classes = [](std::vector<std::pair<EigenPair, int>> groups) {
    std::vector<EigenClass> out;
    for (const auto& [p, n] : groups)
      for (int i = 0; i < n; ++i) out.push_back({p.delta, p.rho, 1});
    return out;
  };
  const std::vector<std::pair<int, std::vector<EigenClass>>> patterns{
      {2, classes({{{1, 2}, 2}, {{2, 3}, 3}})},
      {3, classes({{{1, 1}, 3}, {{1, 2}, 5}})},
      {4, classes({{{1, 1}, 12}})},
  };
  size_t total = 0;
  for (const auto& [r, data] : patterns) {
    const auto got = solve_diophantine(data, r, 9);
    o.check(got == brute_force_diophantine(data, r, 9), "r = " + std::to_string(r));
    total += got.size();
  }
  bool spurious = false;
  for (const auto& s : solve_diophantine(patterns[2].second, 4, 9)) {
    std::multiset<int> m(s.k.begin(), s.k.end());
    spurious = spurious || (s.d == 6 && m == std::multiset<int>{4, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1});
  }
  o.check(spurious, "{4,2,2,2,1^8} missing at d = 6");
  if (o.pass) o.detail = std::to_string(total) + " solutions, identical to brute force";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::tuple<int, double, std::function<Outcome()>>> criteria{
      {1, 10, degree_three}, {2, 60, f40},      {3, 10, fa_family},  {4, 5, degree_one},
      {5, 30, germs},        {6, 30, clusters}, {7, 300, round_trip}, {8, 30, diophantine},
  };
  bool all = true;
  for (const auto& [id, limit, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.check(secs < limit, "took " + std::to_string(secs) + " s");
    all = all && o.pass;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " (" << timing << ") " << o.detail
              << std::endl;
  }
  return all ? 0 : 1;
}
