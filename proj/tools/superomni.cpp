// Command-line surface: exact checkers and constructions for the algebra
// gl(V)+V, its Dirac structures, and the associated 2-term structures.
// Exit codes: 0 all checks pass, 1 a check failed, 2 bad input.

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iostream>

#include "superomni/io.hpp"

using namespace superomni;
using superomni::io::json;

namespace {

struct Options {
  bool jsonOutput = false;
};

void printReport(const Options& opt, const std::string& command, const Report& report) {
  if (opt.jsonOutput) {
    json out = io::reportToJson(report);
    out["command"] = command;
    std::cout << out.dump(2) << "\n";
    return;
  }
  for (const Verdict& v : report.verdicts) {
    std::cout << "  " << v.check << std::string(v.check.size() < 20 ? 20 - v.check.size() : 1, ' ')
              << (v.pass ? "PASS" : "FAIL") << "\n";
    if (!v.pass) {
      if (!v.tuple.empty()) {
        std::cout << "    at (";
        for (std::size_t i = 0; i < v.tuple.size(); ++i)
          std::cout << (i ? ", " : "") << v.tuple[i];
        std::cout << ")\n";
      }
      std::cout << "    residual: " << v.residual << "\n";
    }
    if (!v.note.empty()) std::cout << "    note: " << v.note << "\n";
  }
  std::cout << "result: " << (report.pass() ? "PASS" : "FAIL") << "\n";
}

void emitDocument(const json& doc) { std::cout << doc.dump(2) << "\n"; }

Field fieldFromOption(long p) { return p == 0 ? Field::rationals() : Field::primeField(p); }

void requireOmniField(const Field& field) {
  if (field.prime() == 2 || field.prime() == 3)
    throw Error("this command needs a field with invertible 2 and 3 (p not in {2,3})");
}

Report diracReport(const DiracVerdict& dv) {
  Report report;
  report.add(dv.maximalIsotropic);
  report.add(dv.closedUnderBracket);
  return report;
}

// --- check/build commands ----------------------------------------------

int cmdCheckLie(const Options& opt, const std::string& path) {
  io::ParsedAlgebra algebra = io::parseAlgebra(io::loadFile(path));
  Report report = checkLieSuperalgebra(algebra.table);
  printReport(opt, "check lie", report);
  return report.pass() ? 0 : 1;
}

int cmdCheckLeibniz(const Options& opt, const std::string& path) {
  io::ParsedAlgebra algebra = io::parseAlgebra(io::loadFile(path));
  Report report;
  report.add(checkGraded(algebra.table));
  report.add(checkLeibnizRule(algebra.table));
  printReport(opt, "check leibniz", report);
  return report.pass() ? 0 : 1;
}

int cmdCheckAction(const Options& opt, const std::string& algebraPath,
                   const std::string& rhoPath) {
  io::ParsedAlgebra algebra = io::parseAlgebra(io::loadFile(algebraPath));
  io::ParsedRho rho = io::parseRho(io::loadFile(rhoPath), algebra.table.space());
  Report report;
  report.add(checkAction(algebra.table, rho.images));
  printReport(opt, "check action", report);
  return report.pass() ? 0 : 1;
}

int cmdBuildSemidirect(const Options& opt, const std::string& algebraPath,
                       const std::string& rhoPath) {
  io::ParsedAlgebra algebra = io::parseAlgebra(io::loadFile(algebraPath));
  io::ParsedRho rho = io::parseRho(io::loadFile(rhoPath), algebra.table.space());
  Verdict action = checkAction(algebra.table, rho.images);
  if (!action.pass) {
    Report report;
    report.add(action);
    printReport(opt, "build semidirect", report);
    return 1;
  }
  emitDocument(io::algebraToJson(semidirectProduct(algebra.table, rho.images)));
  return 0;
}

// --- omni commands ------------------------------------------------------

int cmdOmniCheck(const Options& opt, long p, std::size_t m, std::size_t n) {
  Field field = fieldFromOption(p);
  requireOmniField(field);
  SuperSpace v = SuperSpace::standard(field, m, n);
  Report report;
  report.add(checkOmniLeibniz(v));
  report.add(checkPropHomotopy(v));
  printReport(opt, "omni check", report);
  return report.pass() ? 0 : 1;
}

int cmdOmniTable(const Options& opt, long p, std::size_t m, std::size_t n) {
  Field field = fieldFromOption(p);
  requireOmniField(field);
  SuperSpace v = SuperSpace::standard(field, m, n);
  SuperSpace e = omniSpace(v);
  if (e.dim() > maxCheckDim())
    throw Error("dim gl(V)+V exceeds the table cap (override with SUPEROMNI_MAX_DIM)");

  json products = json::array();
  for (std::size_t i = 0; i < e.dim(); ++i)
    for (std::size_t j = 0; j < e.dim(); ++j) {
      OmniElement a = OmniElement::basis(v, i);
      OmniElement b = OmniElement::basis(v, j);
      OmniElement circProd = circ(a, b);
      OmniElement bracketProd = omniBracket(a, b);
      SuperVector pairingProd = omniPairing(a, b);
      if (opt.jsonOutput) {
        json entry{{"left", e.name(i)}, {"right", e.name(j)}};
        json circCoords = json::object(), bracketCoords = json::object(),
             pairingCoords = json::object();
        SuperVector cc = circProd.toCoords(), bc = bracketProd.toCoords();
        for (std::size_t k = 0; k < e.dim(); ++k) {
          if (!cc[k].isZero()) circCoords[e.name(k)] = cc[k].str();
          if (!bc[k].isZero()) bracketCoords[e.name(k)] = bc[k].str();
        }
        for (std::size_t k = 0; k < v.dim(); ++k)
          if (!pairingProd[k].isZero()) pairingCoords[v.name(k)] = pairingProd[k].str();
        entry["circ"] = circCoords;
        entry["bracket"] = bracketCoords;
        entry["pairing"] = pairingCoords;
        products.push_back(entry);
      } else {
        std::cout << "circ[" << e.name(i) << ", " << e.name(j) << "] = " << circProd.str() << "\n";
        std::cout << "bracket[" << e.name(i) << ", " << e.name(j) << "] = " << bracketProd.str()
                  << "\n";
        std::cout << "pairing[" << e.name(i) << ", " << e.name(j) << "] = " << pairingProd.str()
                  << "\n";
      }
    }
  if (opt.jsonOutput) {
    json out{{"command", "omni table"},
             {"field", io::fieldToJson(field)},
             {"dims", json::array({m, n})},
             {"products", products}};
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

// --- dirac commands -----------------------------------------------------

io::ParsedSubspace loadOmniSubspace(const std::string& path) {
  io::ParsedSubspace parsed = io::parseSubspace(io::loadFile(path));
  if (!parsed.omniAmbient)
    throw io::DocumentError("this command needs a subspace of gl(V)+V (ambient kind \"omni\")");
  return parsed;
}

int cmdDiracCheck(const Options& opt, const std::string& path) {
  io::ParsedSubspace parsed = loadOmniSubspace(path);
  Report report = diracReport(isDirac(parsed.v, parsed.subspace));
  printReport(opt, "dirac check", report);
  return report.pass() ? 0 : 1;
}

int cmdDiracFromLie(const Options& opt, const std::string& path, std::size_t m, std::size_t n,
                    const std::vector<std::string>& embedNames) {
  io::ParsedAlgebra algebra = io::parseAlgebra(io::loadFile(path));
  const SuperSpace& ls = algebra.table.space();
  SuperSpace v = SuperSpace::standard(ls.field(), m, n);

  Report lie = checkLieSuperalgebra(algebra.table);
  if (!lie.pass()) {
    printReport(opt, "dirac from-lie", lie);
    return 1;
  }

  // map the algebra basis onto coordinates of V, in order
  std::vector<std::size_t> coords;
  if (embedNames.empty()) {
    if (ls.evenDim() != m || ls.oddDim() != n)
      throw io::DocumentError("algebra dimensions do not match --ambient; use --embed");
    for (std::size_t i = 0; i < ls.dim(); ++i) {
      // algebra order is even-first, matching the standard space
      coords.push_back(i < ls.evenDim() ? i : m + (i - ls.evenDim()));
    }
  } else {
    if (embedNames.size() != ls.dim())
      throw io::DocumentError("--embed needs one coordinate per algebra basis element");
    for (std::size_t i = 0; i < embedNames.size(); ++i) {
      auto idx = v.indexOf(embedNames[i]);
      if (!idx) throw io::DocumentError("unknown ambient coordinate '" + embedNames[i] + "'");
      if (v.parity(*idx) != ls.parity(i))
        throw io::DocumentError("parity of '" + embedNames[i] + "' does not match basis '" +
                                ls.name(i) + "'");
      coords.push_back(*idx);
    }
  }

  std::vector<SuperVector> gens;
  for (std::size_t c : coords) gens.push_back(v.basisVector(c));
  GradedSubspace w = GradedSubspace::fromGenerators(v, gens);
  if (w.dim() != ls.dim()) throw io::DocumentError("--embed coordinates must be distinct");

  // transplant the table onto the canonical (pivot-ordered) basis of W
  SuperSpace ws = canonicalBasisSpace(v, w);
  std::vector<std::size_t> rowOf(ls.dim());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    std::size_t row = 0;
    while (w.pivots()[row] != coords[i]) ++row;
    rowOf[i] = row;
  }
  BracketTable onW = BracketTable::build(ws, [&](std::size_t a, std::size_t b) {
    // a, b index the canonical basis; find the algebra basis sitting there
    std::size_t ia = 0, ib = 0;
    while (rowOf[ia] != a) ++ia;
    while (rowOf[ib] != b) ++ib;
    SuperVector value = SuperVector::zero(ws);
    const SuperVector& src = algebra.table.value(ia, ib);
    for (std::size_t k = 0; k < ls.dim(); ++k)
      if (!src[k].isZero()) value.addScaled(SuperVector::basis(ws, rowOf[k]), src[k]);
    return value;
  });

  emitDocument(io::subspaceToJson(v, diracFromLie(v, w, onW), true));
  return 0;
}

int cmdDiracToLie(const Options& opt, const std::string& path) {
  io::ParsedSubspace parsed = loadOmniSubspace(path);
  DiracVerdict dv = isDirac(parsed.v, parsed.subspace);
  if (!dv.pass()) {
    printReport(opt, "dirac to-lie", diracReport(dv));
    return 1;
  }
  SubspaceLie lie = lieFromDirac(parsed.v, parsed.subspace);
  emitDocument(io::algebraToJson(lie.table));
  return 0;
}

int cmdDiracPairCheck(const Options& opt, const std::string& path) {
  io::ParsedSubspace parsed = loadOmniSubspace(path);
  Verdict maximal = isMaximalIsotropic(parsed.v, parsed.subspace);
  Report report;
  report.add(maximal);
  if (maximal.pass) {
    CharacteristicPair pair = extractCharacteristicPair(parsed.v, parsed.subspace);
    PairVerdicts pv = checkCharacteristicPair(pair);
    report.add(pv.subalgebra);
    report.add(pv.curvature);
    report.add(pv.closure);
  }
  printReport(opt, "dirac pair-check", report);
  return report.pass() ? 0 : 1;
}

int cmdDiracEnumerate(const Options& opt, long p, std::size_t m, std::size_t n) {
  if (p == 0) throw io::DocumentError("dirac enumerate needs --field p");
  SuperSpace v = SuperSpace::standard(fieldFromOption(p), m, n);
  DiracCensus census = enumerateDirac(v);
  if (opt.jsonOutput) {
    json out{{"command", "dirac enumerate"},
             {"field", p},
             {"dims", json::array({m, n})},
             {"diracCount", census.diracs.size()},
             {"lieStructureCount", census.lieStructureCount},
             {"bijection", census.bijectionHolds}};
    if (!census.bijectionHolds) out["failure"] = census.failure;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "Dirac structures of gl(V)+V over " << v.str() << ": " << census.diracs.size()
              << "\n";
    std::cout << "(W, Lie structure) pairs: " << census.lieStructureCount << "\n";
    std::cout << "one-to-one correspondence verified: " << (census.bijectionHolds ? "yes" : "NO")
              << "\n";
    if (!census.bijectionHolds) std::cout << "  " << census.failure << "\n";
  }
  return census.bijectionHolds ? 0 : 1;
}

// --- lie2 commands ------------------------------------------------------

int cmdLie2FromOmni(const Options& opt, long p, std::size_t m, std::size_t n, bool check) {
  Field field = fieldFromOption(p);
  requireOmniField(field);
  SuperSpace v = SuperSpace::standard(field, m, n);
  Lie2Superalgebra t = lie2FromOmni(v);
  if (check) {
    Report report = checkLie2Axioms(t);
    printReport(opt, "lie2 from-omni --check", report);
    return report.pass() ? 0 : 1;
  }
  emitDocument(io::lie2ToJson(t));
  return 0;
}

int cmdLie2Check(const Options& opt, const std::string& path) {
  Lie2Superalgebra t = io::parseLie2(io::loadFile(path));
  Report report = checkLie2Axioms(t);
  printReport(opt, "lie2 check", report);
  return report.pass() ? 0 : 1;
}

int cmdLie2ToCrossed(const std::string& path) {
  Lie2Superalgebra t = io::parseLie2(io::loadFile(path));
  if (!t.l3IsZero()) throw io::DocumentError("lie2 to-crossed needs a strict structure (l3 = 0)");
  emitDocument(io::crossedToJson(crossedModuleFromStrict(t)));
  return 0;
}

int cmdLie2FromCrossed(const Options& opt, const std::string& path) {
  CrossedModule c = io::parseCrossed(io::loadFile(path));
  Report report = checkCrossedModule(c);
  if (!report.pass()) {
    printReport(opt, "lie2 from-crossed", report);
    return 1;
  }
  emitDocument(io::lie2ToJson(strictFromCrossedModule(c)));
  return 0;
}

// Supertrace form of the matrix realization encoded by E[a,b] basis names
// over standard e<i>/f<j> coordinate names.
EvenBilinearForm supertraceFromNames(const SuperSpace& s) {
  std::vector<std::string> even, odd;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const std::string& name = s.name(i);
    if (name.size() < 5 || name.substr(0, 2) != "E[" || name.back() != ']')
      throw io::DocumentError("--supertrace needs basis names of the form E[a,b], got '" + name +
                              "'");
    std::string inner = name.substr(2, name.size() - 3);
    std::size_t comma = inner.find(',');
    if (comma == std::string::npos)
      throw io::DocumentError("--supertrace: malformed name '" + name + "'");
    pairs.emplace_back(inner.substr(0, comma), inner.substr(comma + 1));
  }
  auto parityOfInner = [&](const std::string& inner) {
    if (inner.size() >= 2 && inner[0] == 'e') return Parity::even;
    if (inner.size() >= 2 && inner[0] == 'f') return Parity::odd;
    throw io::DocumentError("--supertrace: coordinate '" + inner +
                            "' is not a standard e<i>/f<j> name");
  };
  std::vector<std::string> inner;
  for (const auto& [a, b] : pairs) {
    for (const std::string& x : {a, b})
      if (std::find(inner.begin(), inner.end(), x) == inner.end()) inner.push_back(x);
  }
  std::size_t m = 0, n = 0;
  for (const std::string& x : inner) (parityOfInner(x) == Parity::even ? m : n) += 1;
  SuperSpace v = SuperSpace::standard(s.field(), m, n);
  for (const std::string& x : inner)
    if (!v.indexOf(x))
      throw io::DocumentError("--supertrace: names must form a complete gl(m|n) basis; '" + x +
                              "' is not standard");
  if (s.dim() != v.dim() * v.dim())
    throw io::DocumentError("--supertrace: expected all " + std::to_string(v.dim() * v.dim()) +
                            " elementary maps of gl(" + std::to_string(m) + "|" +
                            std::to_string(n) + ")");
  std::vector<SuperMap> realization;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [a, b] = pairs[i];
    if (s.parity(i) != parityOfInner(a) + parityOfInner(b))
      throw io::DocumentError("--supertrace: declared parity of '" + s.name(i) +
                              "' contradicts its coordinates");
    realization.push_back(SuperMap::elementary(v, *v.indexOf(a), *v.indexOf(b)));
  }
  std::vector<Scalar> gram;
  gram.reserve(s.dim() * s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      gram.push_back(supertrace(realization[i].compose(realization[j])));
  return EvenBilinearForm(s, std::move(gram));
}

int cmdLie2Skeletal(const Options& opt, const std::string& path, bool useSupertrace) {
  io::ParsedAlgebra algebra = io::parseAlgebra(io::loadFile(path));
  std::optional<EvenBilinearForm> form;
  if (useSupertrace)
    form = supertraceFromNames(algebra.table.space());
  else if (algebra.form)
    form = algebra.form;
  else
    throw io::DocumentError("lie2 skeletal needs a \"form\" in the document or --supertrace");

  Report report = checkLieSuperalgebra(algebra.table);
  report.add(form->isNondegenerate()
                 ? Verdict::ok("nondegenerate")
                 : Verdict::fail("nondegenerate", {}, "form has a nontrivial radical"));
  report.add(isQuadraticCompatible(algebra.table, *form));
  if (!report.pass()) {
    printReport(opt, "lie2 skeletal", report);
    return 1;
  }
  emitDocument(io::lie2ToJson(skeletalFromQuadratic(algebra.table, *form)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the algebra gl(V)+V over a super vector space"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.jsonOutput, "machine-readable output");

  std::string algebraPath, rhoPath, subspacePath, lie2Path, crossedPath;
  long fieldP = 0;
  std::size_t dimM = 1, dimN = 1;
  std::vector<std::string> embedNames;
  bool runCheck = false, useSupertrace = false;
  std::function<int()> action;

  // check
  CLI::App* check = app.add_subcommand("check", "verify algebraic laws on a document");
  check->require_subcommand(1);
  check->fallthrough();
  CLI::App* checkLie = check->add_subcommand("lie", "graded + super skew + super Jacobi");
  checkLie->add_option("algebra", algebraPath, "AlgebraDocument path")->required();
  checkLie->callback([&] { action = [&] { return cmdCheckLie(opt, algebraPath); }; });
  CLI::App* checkLeibniz = check->add_subcommand("leibniz", "super Leibniz rule for a table");
  checkLeibniz->add_option("algebra", algebraPath, "AlgebraDocument path")->required();
  checkLeibniz->callback([&] { action = [&] { return cmdCheckLeibniz(opt, algebraPath); }; });
  CLI::App* checkAction = check->add_subcommand("action", "module axiom for rho: L -> gl(M)");
  checkAction->add_option("algebra", algebraPath, "AlgebraDocument path")->required();
  checkAction->add_option("rho", rhoPath, "RhoDocument path")->required();
  checkAction->callback([&] { action = [&] { return cmdCheckAction(opt, algebraPath, rhoPath); }; });

  // build
  CLI::App* build = app.add_subcommand("build", "construct derived algebras");
  build->require_subcommand(1);
  build->fallthrough();
  CLI::App* semidirect = build->add_subcommand("semidirect", "semidirect product L x M");
  semidirect->add_option("algebra", algebraPath, "AlgebraDocument path")->required();
  semidirect->add_option("rho", rhoPath, "RhoDocument path")->required();
  semidirect->callback(
      [&] { action = [&] { return cmdBuildSemidirect(opt, algebraPath, rhoPath); }; });

  // omni
  CLI::App* omni = app.add_subcommand("omni", "the algebra gl(V)+V");
  omni->require_subcommand(1);
  omni->fallthrough();
  CLI::App* omniCheck = omni->add_subcommand("check", "Leibniz rule and J1 = T, exhaustively");
  omniCheck->add_option("--dims", [&](const std::vector<std::string>& vals) {
    dimM = std::stoul(vals.at(0));
    dimN = std::stoul(vals.at(1));
    return true;
  }, "even and odd dimension of V")->expected(2)->required();
  omniCheck->add_option("--field", fieldP, "odd prime p (default: rationals)");
  omniCheck->callback([&] { action = [&] { return cmdOmniCheck(opt, fieldP, dimM, dimN); }; });
  CLI::App* omniTable = omni->add_subcommand("table", "print circ, bracket, pairing on basis pairs");
  omniTable->add_option("--dims", [&](const std::vector<std::string>& vals) {
    dimM = std::stoul(vals.at(0));
    dimN = std::stoul(vals.at(1));
    return true;
  }, "even and odd dimension of V")->expected(2)->required();
  omniTable->add_option("--field", fieldP, "odd prime p (default: rationals)");
  omniTable->callback([&] { action = [&] { return cmdOmniTable(opt, fieldP, dimM, dimN); }; });

  // dirac
  CLI::App* dirac = app.add_subcommand("dirac", "Dirac structures of gl(V)+V");
  dirac->require_subcommand(1);
  dirac->fallthrough();
  CLI::App* diracCheck = dirac->add_subcommand("check", "maximal isotropy and bracket closure");
  diracCheck->add_option("subspace", subspacePath, "SubspaceDocument path")->required();
  diracCheck->callback([&] { action = [&] { return cmdDiracCheck(opt, subspacePath); }; });
  CLI::App* fromLie = dirac->add_subcommand("from-lie", "Dirac structure of a Lie structure on W");
  fromLie->add_option("algebra", algebraPath, "AlgebraDocument path")->required();
  fromLie->add_option("--ambient", [&](const std::vector<std::string>& vals) {
    dimM = std::stoul(vals.at(0));
    dimN = std::stoul(vals.at(1));
    return true;
  }, "dimensions of the ambient V")->expected(2)->required();
  fromLie->add_option("--embed", embedNames, "ambient coordinates carrying the algebra basis");
  fromLie->callback(
      [&] { action = [&] { return cmdDiracFromLie(opt, algebraPath, dimM, dimN, embedNames); }; });
  CLI::App* toLie = dirac->add_subcommand("to-lie", "Lie structure on D^0 of a Dirac structure");
  toLie->add_option("subspace", subspacePath, "SubspaceDocument path")->required();
  toLie->callback([&] { action = [&] { return cmdDiracToLie(opt, subspacePath); }; });
  CLI::App* pairCheck = dirac->add_subcommand("pair-check", "characteristic pair conditions");
  pairCheck->add_option("subspace", subspacePath, "SubspaceDocument path")->required();
  pairCheck->callback([&] { action = [&] { return cmdDiracPairCheck(opt, subspacePath); }; });
  CLI::App* enumerate = dirac->add_subcommand("enumerate", "census and bijection over F_p");
  enumerate->add_option("--field", fieldP, "odd prime p, p not in {2,3}")->required();
  enumerate->add_option("--dims", [&](const std::vector<std::string>& vals) {
    dimM = std::stoul(vals.at(0));
    dimN = std::stoul(vals.at(1));
    return true;
  }, "even and odd dimension of V")->expected(2)->required();
  enumerate->callback(
      [&] { action = [&] { return cmdDiracEnumerate(opt, fieldP, dimM, dimN); }; });

  // lie2
  CLI::App* lie2 = app.add_subcommand("lie2", "two-term structures");
  lie2->require_subcommand(1);
  lie2->fallthrough();
  CLI::App* fromOmni = lie2->add_subcommand("from-omni", "the structure on gl(V)+V <- V");
  fromOmni->add_option("--dims", [&](const std::vector<std::string>& vals) {
    dimM = std::stoul(vals.at(0));
    dimN = std::stoul(vals.at(1));
    return true;
  }, "even and odd dimension of V")->expected(2)->required();
  fromOmni->add_option("--field", fieldP, "odd prime p (default: rationals)");
  fromOmni->add_flag("--check", runCheck, "run the axiom checker instead of emitting");
  fromOmni->callback(
      [&] { action = [&] { return cmdLie2FromOmni(opt, fieldP, dimM, dimN, runCheck); }; });
  CLI::App* lie2Check = lie2->add_subcommand("check", "the nine axioms on a document");
  lie2Check->add_option("lie2", lie2Path, "Lie2Document path")->required();
  lie2Check->callback([&] { action = [&] { return cmdLie2Check(opt, lie2Path); }; });
  CLI::App* toCrossed = lie2->add_subcommand("to-crossed", "crossed module of a strict structure");
  toCrossed->add_option("lie2", lie2Path, "Lie2Document path")->required();
  toCrossed->callback([&] { action = [&] { return cmdLie2ToCrossed(lie2Path); }; });
  CLI::App* fromCrossed = lie2->add_subcommand("from-crossed", "strict structure of a crossed module");
  fromCrossed->add_option("crossed", crossedPath, "CrossedModuleDocument path")->required();
  fromCrossed->callback([&] { action = [&] { return cmdLie2FromCrossed(opt, crossedPath); }; });
  CLI::App* skeletal = lie2->add_subcommand("skeletal", "skeletal structure of a quadratic algebra");
  skeletal->add_option("algebra", algebraPath, "AlgebraDocument path")->required();
  skeletal->add_flag("--supertrace", useSupertrace,
                     "compute B = str(xy) from the E[a,b] matrix realization");
  skeletal->callback(
      [&] { action = [&] { return cmdLie2Skeletal(opt, algebraPath, useSupertrace); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    return action ? action() : 2;
  } catch (const io::DocumentError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
