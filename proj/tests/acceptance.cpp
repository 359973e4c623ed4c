// Acceptance suite: exercises the full contract end to end, one criterion
// per line. All arithmetic is exact, so every comparison is equality with
// zero residual; runtime bounds are wall-clock.

#include <chrono>
#include <iostream>

#include "cli_helpers.hpp"
#include "helpers.hpp"
#include "superomni/lie2.hpp"

using namespace superomni;
using superomni::io::json;
using testutil::fixturesDir;
using testutil::runCli;

namespace {

const Field Q = Field::rationals();

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

int failures = 0;

template <class F>
void criterion(int number, const std::string& title, double budgetSeconds, F&& body) {
  Outcome outcome;
  auto start = std::chrono::steady_clock::now();
  try {
    body(outcome);
  } catch (const std::exception& e) {
    outcome.require(false, std::string("exception: ") + e.what());
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budgetSeconds > 0)
    outcome.require(seconds < budgetSeconds,
                    "runtime " + std::to_string(seconds) + "s exceeds " +
                        std::to_string(budgetSeconds) + "s");
  if (!outcome.pass) ++failures;
  std::printf("%s  criterion %d: %s (%.2fs)%s%s\n", outcome.pass ? "PASS" : "FAIL", number,
              title.c_str(), seconds, outcome.detail.empty() ? "" : " -- ",
              outcome.detail.c_str());
  std::fflush(stdout);
}

bool verdictPassed(const json& report, const std::string& name) {
  for (const json& check : report["checks"])
    if (check["check"] == name) return check["pass"].get<bool>();
  return false;
}

// positional comparison of structure constants between two algebra docs
bool sameConstants(const json& a, const json& b) {
  io::ParsedAlgebra pa = io::parseAlgebra(a);
  io::ParsedAlgebra pb = io::parseAlgebra(b);
  const SuperSpace& sa = pa.table.space();
  const SuperSpace& sb = pb.table.space();
  if (sa.dim() != sb.dim() || sa.evenDim() != sb.evenDim()) return false;
  for (std::size_t i = 0; i < sa.dim(); ++i)
    for (std::size_t j = 0; j < sa.dim(); ++j)
      for (std::size_t k = 0; k < sa.dim(); ++k)
        if (pa.table.value(i, j)[k].str() != pb.table.value(i, j)[k].str()) return false;
  return true;
}

}  // namespace

int main() {
  // 1. super Leibniz rule for circ on all 20^3 basis triples of gl(V)+V, V = Q^{2|2}
  json omni22;
  criterion(1, "omni check --dims 2 2 verifies the Leibniz rule on 8000 triples", 10.0,
            [&](Outcome& out) {
              testutil::CliResult r = runCli("omni check --dims 2 2 --json");
              out.require(r.exitCode == 0, "exit code " + std::to_string(r.exitCode));
              omni22 = json::parse(r.output);
              out.require(verdictPassed(omni22, "omniLeibniz"), "omniLeibniz failed");
            });

  // 2. J1 = embed(T) on the same 8000 triples, and the gl component of J1
  //    vanishes on every triple
  criterion(2, "J1 = T exactly on 8000 triples with vanishing gl component", 0, [&](Outcome& out) {
    out.require(!omni22.is_null() && verdictPassed(omni22, "J1=T"), "J1=T failed");
    SuperSpace v = SuperSpace::standard(Q, 2, 2);
    const std::size_t n = v.dim() * v.dim() + v.dim();
    auto glVanishes = [&](std::size_t flat) {
      std::size_t k = flat % n, j = (flat / n) % n, i = flat / (n * n);
      return jacobiatorJ1(OmniElement::basis(v, i), OmniElement::basis(v, j),
                          OmniElement::basis(v, k))
          .map()
          .isZero();
    };
    out.require(!firstFailure(n * n * n, defaultExec(), glVanishes).has_value(),
                "gl component of J1 is nonzero somewhere");
  });

  // 3. over F_5^{1|1}: omega is a Lie superalgebra iff graph(omega) is Dirac,
  //    for every graded bracket omega
  criterion(3, "Lie <=> Dirac graph for all 625 graded brackets over F_5^{1|1}", 120.0,
            [&](Outcome& out) {
              SuperSpace v = SuperSpace::standard(Field::primeField(5), 1, 1);
              std::size_t count = 0, lieCount = 0;
              bool allEquivalent = true;
              forEachGradedBracket(v, [&](const BracketTable& omega) {
                ++count;
                GraphEquivalence eq = graphIsDiracIffLie(omega);
                if (eq.lie.pass()) ++lieCount;
                if (!eq.equivalent()) allEquivalent = false;
              });
              out.require(count == 625, "expected 625 brackets, saw " + std::to_string(count));
              out.require(allEquivalent, "equivalence failed for some bracket");
              out.require(lieCount >= 2, "implausibly few Lie structures");
            });

  // 4. dual census at desk scale: Dirac structures vs (W, Lie structure)
  //    pairs over F_5^{1|1}, with mutually inverse correspondences
  criterion(4, "dirac enumerate --field 5 --dims 1 1 census and bijection", 300.0,
            [&](Outcome& out) {
              testutil::CliResult r = runCli("dirac enumerate --field 5 --dims 1 1 --json");
              out.require(r.exitCode == 0, "exit code " + std::to_string(r.exitCode));
              json census = json::parse(r.output);
              out.require(census["bijection"].get<bool>(), "bijection not verified");
              out.require(census["diracCount"] == census["lieStructureCount"], "count mismatch");
            });

  // 5. named fixtures survive from-lie -> to-lie with identical constants
  criterion(5, "Heisenberg and gl(1|1) round trip through dirac from-lie/to-lie", 0,
            [&](Outcome& out) {
              // Heisenberg on Q^{1|1}: byte-identical document round trip
              json heis = io::loadFile(fixturesDir() + "/heisenberg_1_1.alg.json");
              testutil::CliResult d1 =
                  runCli("dirac from-lie " + fixturesDir() + "/heisenberg_1_1.alg.json --ambient 1 1");
              out.require(d1.exitCode == 0, "from-lie(heisenberg) failed");
              std::string d1Path = testutil::writeTemp("acc_heis", d1.output);
              testutil::CliResult b1 = runCli("dirac to-lie " + d1Path);
              out.require(b1.exitCode == 0, "to-lie(heisenberg) failed");
              out.require(json::parse(b1.output) == heis, "heisenberg constants changed");

              // gl(1|1) as a Lie superalgebra on a 2|2 space
              json gl = io::loadFile(fixturesDir() + "/gl_1_1.alg.json");
              testutil::CliResult d2 =
                  runCli("dirac from-lie " + fixturesDir() + "/gl_1_1.alg.json --ambient 2 2");
              out.require(d2.exitCode == 0, "from-lie(gl(1|1)) failed");
              std::string d2Path = testutil::writeTemp("acc_gl", d2.output);
              testutil::CliResult b2 = runCli("dirac to-lie " + d2Path);
              out.require(b2.exitCode == 0, "to-lie(gl(1|1)) failed");
              out.require(sameConstants(gl, json::parse(b2.output)), "gl(1|1) constants changed");
            });

  // 6. the nine axioms hold exhaustively for the two-term structure on
  //    gl(V)+V <- V, for V = Q^{1|1} and Q^{2|1}
  criterion(6, "lie2 from-omni --check passes (a)-(i) for dims 1|1 and 2|1", 120.0,
            [&](Outcome& out) {
              for (const char* dims : {"1 1", "2 1"}) {
                testutil::CliResult r =
                    runCli(std::string("lie2 from-omni --dims ") + dims + " --check --json");
                out.require(r.exitCode == 0, std::string("exit code for dims ") + dims);
                json report = json::parse(r.output);
                for (const char* axiom : {"a", "b", "c", "d", "e", "f", "g", "h", "i"})
                  out.require(verdictPassed(report, axiom),
                              std::string("axiom ") + axiom + " failed for dims " + dims);
              }
            });

  // 7. strict <-> crossed-module round trips on three fixtures
  criterion(7, "strict/crossed round trips are table-identical on three fixtures", 0,
            [&](Outcome& out) {
              SuperSpace v = SuperSpace::standard(Q, 1, 1);
              BracketTable gl = glBracketTable(v);

              std::vector<CrossedModule> fixtures;
              {  // abelian
                SuperSpace gs = SuperSpace::withNames(Q, {"x1"}, {});
                SuperSpace hs = SuperSpace::withNames(Q, {"h1"}, {"h2"});
                fixtures.push_back(CrossedModule{
                    BracketTable::zero(gs), BracketTable::zero(hs),
                    std::vector<SuperVector>(gs.dim() * hs.dim(), SuperVector::zero(hs)),
                    SuperMap::zero(hs, gs)});
              }
              {  // adjoint, phi = identity
                std::vector<SuperVector> action;
                for (std::size_t a = 0; a < gl.space().dim(); ++a)
                  for (std::size_t j = 0; j < gl.space().dim(); ++j)
                    action.push_back(gl.value(a, j));
                fixtures.push_back(CrossedModule{gl, gl, action, SuperMap::identity(gl.space())});
              }
              {  // tautological representation on an abelian module, phi = 0
                std::vector<SuperVector> action;
                for (std::size_t a = 0; a < gl.space().dim(); ++a) {
                  SuperMap m = SuperMap::elementary(v, a / v.dim(), a % v.dim());
                  for (std::size_t j = 0; j < v.dim(); ++j)
                    action.push_back(m.apply(v.basisVector(j)));
                }
                fixtures.push_back(
                    CrossedModule{gl, BracketTable::zero(v), action, SuperMap::zero(v, gl.space())});
              }

              for (std::size_t i = 0; i < fixtures.size(); ++i) {
                const CrossedModule& c = fixtures[i];
                std::string tag = "fixture " + std::to_string(i + 1);
                out.require(checkCrossedModule(c).pass(), tag + ": crossed checker failed");
                Lie2Superalgebra t = strictFromCrossedModule(c);
                out.require(checkLie2Axioms(t).pass(), tag + ": axiom checker failed");
                CrossedModule back = crossedModuleFromStrict(t);
                out.require(back == c, tag + ": crossed -> strict -> crossed changed tables");
                out.require(strictFromCrossedModule(back) == t,
                            tag + ": strict -> crossed -> strict changed tables");
              }
            });

  // 8. skeletal structures from gl(1|1) and gl(2|1) with the supertrace
  //    form pass every axiom; the spot value l3 = 1 is reproduced
  criterion(8, "skeletal gl(1|1) and gl(2|1) pass all axioms with spot value 1", 0,
            [&](Outcome& out) {
              for (const char* name : {"gl_1_1", "gl_2_1"}) {
                testutil::CliResult skel = runCli("lie2 skeletal " + fixturesDir() + "/" + name +
                                                  ".alg.json --supertrace");
                out.require(skel.exitCode == 0, std::string(name) + ": skeletal failed");
                std::string path = testutil::writeTemp(std::string("acc_") + name, skel.output);
                testutil::CliResult check = runCli("lie2 check " + path + " --json");
                out.require(check.exitCode == 0, std::string(name) + ": axioms failed");
                json report = json::parse(check.output);
                out.require(verdictPassed(report, "d") && verdictPassed(report, "i"),
                            std::string(name) + ": total skewness or the cocycle condition failed");
              }
              SuperSpace v = SuperSpace::standard(Q, 1, 1);
              Lie2Superalgebra t = skeletalFromQuadratic(glBracketTable(v), supertraceForm(v));
              SuperSpace gl = glSpace(v);
              SuperVector spot = t.l3Value(*gl.indexOf("E[e1,e1]"), *gl.indexOf("E[e1,f1]"),
                                           *gl.indexOf("E[f1,e1]"));
              out.require(spot == SuperVector::basis(t.v1(), 0),
                          "l3(E[e1,e1],E[e1,f1],E[f1,e1]) != 1");
            });

  // 9. corrupting one structure constant makes each checker exit 1 and name
  //    a tuple whose residual is nonzero under direct re-expansion
  criterion(9, "every checker rejects a corrupted constant with a verified tuple", 0,
            [&](Outcome& out) {
              // check lie
              {
                testutil::CliResult r =
                    runCli("check lie " + fixturesDir() + "/gl_1_1_corrupt.alg.json --json");
                out.require(r.exitCode == 1, "check lie: expected exit 1");
                json report = json::parse(r.output);
                io::ParsedAlgebra bad =
                    io::parseAlgebra(io::loadFile(fixturesDir() + "/gl_1_1_corrupt.alg.json"));
                const SuperSpace& s = bad.table.space();
                bool verified = false;
                for (const json& check : report["checks"]) {
                  if (check["pass"].get<bool>() || check["check"] != "superJacobi") continue;
                  std::size_t i = *s.indexOf(check["tuple"][0].get<std::string>());
                  std::size_t j = *s.indexOf(check["tuple"][1].get<std::string>());
                  std::size_t k = *s.indexOf(check["tuple"][2].get<std::string>());
                  // direct J1 expansion at the named triple
                  auto bracket = [&](const SuperVector& x, const SuperVector& y) {
                    return bad.table.evaluate(x, y);
                  };
                  SuperVector residual =
                      bracket(bracket(s.basisVector(i), s.basisVector(j)), s.basisVector(k))
                          .scaled(s.field().fromLong(koszulSign(s.parity(k), s.parity(i))));
                  residual.addScaled(
                      bracket(bracket(s.basisVector(j), s.basisVector(k)), s.basisVector(i)),
                      s.field().fromLong(koszulSign(s.parity(i), s.parity(j))));
                  residual.addScaled(
                      bracket(bracket(s.basisVector(k), s.basisVector(i)), s.basisVector(j)),
                      s.field().fromLong(koszulSign(s.parity(j), s.parity(k))));
                  verified = !residual.isZero();
                }
                out.require(verified, "check lie: residual did not re-expand to nonzero");
              }
              // check leibniz
              {
                json doc{{"field", "Q"},
                         {"space", {{"even", {"e1", "e2"}}, {"odd", json::array()}}},
                         {"bracket", json::array({json{{"left", "e1"},
                                                       {"right", "e1"},
                                                       {"value", {{"e1", "1"}}}}})}};
                std::string path = testutil::writeTemp("acc_leibniz", doc);
                testutil::CliResult r = runCli("check leibniz " + path + " --json");
                out.require(r.exitCode == 1, "check leibniz: expected exit 1");
                json report = json::parse(r.output);
                io::ParsedAlgebra bad = io::parseAlgebra(doc);
                const SuperSpace& s = bad.table.space();
                bool verified = false;
                for (const json& check : report["checks"]) {
                  if (check["pass"].get<bool>() || !check.contains("tuple")) continue;
                  std::size_t i = *s.indexOf(check["tuple"][0].get<std::string>());
                  std::size_t j = *s.indexOf(check["tuple"][1].get<std::string>());
                  std::size_t k = *s.indexOf(check["tuple"][2].get<std::string>());
                  SuperVector lhs = bad.table.evaluate(s.basisVector(i),
                                                       bad.table.evaluate(s.basisVector(j),
                                                                          s.basisVector(k)));
                  SuperVector rhs = bad.table.evaluate(
                      bad.table.evaluate(s.basisVector(i), s.basisVector(j)), s.basisVector(k));
                  rhs.addScaled(bad.table.evaluate(s.basisVector(j),
                                                   bad.table.evaluate(s.basisVector(i),
                                                                      s.basisVector(k))),
                                s.field().fromLong(koszulSign(s.parity(i), s.parity(j))));
                  verified = !(lhs - rhs).isZero();
                }
                out.require(verified, "check leibniz: residual did not re-expand to nonzero");
              }
              // check action: zero out the image of E[e1,f1]
              {
                json rho = io::loadFile(fixturesDir() + "/identity_rho_1_1.rho.json");
                for (json& image : rho["images"])
                  if (image["arg"] == "E[e1,f1]") image["value"] = json::object();
                std::string path = testutil::writeTemp("acc_rho", rho);
                testutil::CliResult r = runCli("check action " + fixturesDir() +
                                               "/gl_1_1.alg.json " + path + " --json");
                out.require(r.exitCode == 1, "check action: expected exit 1");
                json report = json::parse(r.output);
                bool named = false;
                for (const json& check : report["checks"])
                  if (!check["pass"].get<bool>() && check.contains("tuple")) named = true;
                out.require(named, "check action: no tuple named");
              }
              // dirac check: perturb one generator coefficient of a Dirac structure
              {
                testutil::CliResult good = runCli("dirac from-lie " + fixturesDir() +
                                                  "/heisenberg_1_1.alg.json --ambient 1 1");
                json doc = json::parse(good.output);
                doc["generators"][0]["E[f1,e1]"] = "1";
                std::string path = testutil::writeTemp("acc_dirac", doc);
                testutil::CliResult r = runCli("dirac check " + path + " --json");
                out.require(r.exitCode == 1, "dirac check: expected exit 1");
                // brute force: some basis pair of the perturbed span now pairs
                // to a nonzero vector
                io::ParsedSubspace bad = io::parseSubspace(doc);
                bool nonzero = false;
                for (std::size_t a = 0; a < bad.subspace.dim(); ++a)
                  for (std::size_t b = 0; b < bad.subspace.dim(); ++b)
                    if (!omniPairing(OmniElement::fromCoords(bad.v, bad.subspace.basisVector(a)),
                                     OmniElement::fromCoords(bad.v, bad.subspace.basisVector(b)))
                             .isZero())
                      nonzero = true;
                out.require(nonzero, "dirac check: pairing residual vanished");
              }
              // lie2 check: break the total skewness of l3
              {
                testutil::CliResult skel =
                    runCli("lie2 skeletal " + fixturesDir() + "/gl_1_1.alg.json --supertrace");
                json doc = json::parse(skel.output);
                for (json& entry : doc["l3"]) {
                  if (entry["args"] == json::array({"E[e1,e1]", "E[e1,f1]", "E[f1,e1]"})) {
                    entry["value"]["k1"] = "7";
                    break;
                  }
                }
                std::string path = testutil::writeTemp("acc_lie2", doc);
                testutil::CliResult r = runCli("lie2 check " + path + " --json");
                out.require(r.exitCode == 1, "lie2 check: expected exit 1");
                json report = json::parse(r.output);
                bool verified = false;
                Lie2Superalgebra bad = io::parseLie2(doc);
                const SuperSpace& v0 = bad.v0();
                for (const json& check : report["checks"]) {
                  if (check["pass"].get<bool>() || check["check"] != "d") continue;
                  std::size_t a = *v0.indexOf(check["tuple"][0].get<std::string>());
                  std::size_t b = *v0.indexOf(check["tuple"][1].get<std::string>());
                  std::size_t c = *v0.indexOf(check["tuple"][2].get<std::string>());
                  // direct re-expansion of the first transposition identity
                  SuperVector first = bad.l3Value(b, a, c);
                  first.addScaled(bad.l3Value(a, b, c),
                                  v0.field().fromLong(koszulSign(v0.parity(a), v0.parity(b))));
                  SuperVector second = bad.l3Value(a, c, b);
                  second.addScaled(bad.l3Value(a, b, c),
                                   v0.field().fromLong(koszulSign(v0.parity(b), v0.parity(c))));
                  verified = !first.isZero() || !second.isZero();
                }
                out.require(verified, "lie2 check: residual did not re-expand to nonzero");
              }
            });

  std::printf("%s: %d of 9 criteria passed\n", failures == 0 ? "PASS" : "FAIL", 9 - failures);
  return failures == 0 ? 0 : 1;
}
