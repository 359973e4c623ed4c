#include <doctest.h>

#include "helpers.hpp"
#include "superomni/lie2.hpp"

using namespace superomni;

namespace {

const Field Q = Field::rationals();

bool sameVerdict(const Verdict& a, const Verdict& b) {
  return a.pass == b.pass && a.tuple == b.tuple && a.residual == b.residual;
}

}  // namespace

// The parallel kernels must return exactly what the serial reference
// returns, including the lexicographically-first counterexample.
TEST_SUITE("parallel") {
  TEST_CASE("firstFailure agrees with the serial scan") {
    for (std::size_t n : {0ul, 1ul, 63ul, 64ul, 1000ul, 4096ul}) {
      for (long k : {-1l, 0l, 1l, static_cast<long>(n) / 2, static_cast<long>(n) - 1}) {
        auto pred = [&](std::size_t i) { return k < 0 || i != static_cast<std::size_t>(k); };
        CHECK(firstFailure(n, Exec::serial, pred) == firstFailure(n, Exec::parallel, pred));
      }
      // multiple failures: the smallest index wins regardless of schedule
      auto several = [&](std::size_t i) { return i % 97 != 13; };
      CHECK(firstFailure(n, Exec::serial, several) == firstFailure(n, Exec::parallel, several));
    }
  }

  TEST_CASE("checkSuperJacobi finds the same first counterexample") {
    SuperSpace v = SuperSpace::standard(Q, 1, 1);
    BracketTable gl = glBracketTable(v);
    BracketTable bad = BracketTable::build(gl.space(), [&](std::size_t i, std::size_t j) {
      if (i == 1 && j == 2) return SuperVector::zero(gl.space());
      return gl.value(i, j);
    });
    CHECK(sameVerdict(checkSuperJacobi(bad, Exec::serial), checkSuperJacobi(bad, Exec::parallel)));
    CHECK(sameVerdict(checkLeibnizRule(bad, Exec::serial), checkLeibnizRule(bad, Exec::parallel)));
  }

  TEST_CASE("omni checkers agree across policies") {
    SuperSpace v = SuperSpace::standard(Q, 1, 1);
    CHECK(sameVerdict(checkOmniLeibniz(v, Exec::serial), checkOmniLeibniz(v, Exec::parallel)));
    CHECK(sameVerdict(checkPropHomotopy(v, Exec::serial), checkPropHomotopy(v, Exec::parallel)));
  }

  TEST_CASE("lie2 axiom reports agree across policies") {
    Lie2Superalgebra t = lie2FromOmni(SuperSpace::standard(Q, 1, 1));
    Report serial = checkLie2Axioms(t, Exec::serial);
    Report parallel = checkLie2Axioms(t, Exec::parallel);
    REQUIRE(serial.verdicts.size() == parallel.verdicts.size());
    for (std::size_t i = 0; i < serial.verdicts.size(); ++i)
      CHECK(sameVerdict(serial.verdicts[i], parallel.verdicts[i]));
  }

  TEST_CASE("census agrees across policies") {
    SuperSpace v = SuperSpace::standard(Field::primeField(5), 1, 1);
    DiracCensus serial = enumerateDirac(v, Exec::serial);
    DiracCensus parallel = enumerateDirac(v, Exec::parallel);
    CHECK(serial.bijectionHolds);
    CHECK(parallel.bijectionHolds);
    CHECK(serial.lieStructureCount == parallel.lieStructureCount);
    REQUIRE(serial.diracs.size() == parallel.diracs.size());
    for (std::size_t i = 0; i < serial.diracs.size(); ++i)
      CHECK(serial.diracs[i] == parallel.diracs[i]);
  }
}
