#include <doctest.h>

#include "helpers.hpp"
#include "superomni/subspace.hpp"

using namespace superomni;
using testutil::Rng;

namespace {

const Field Q = Field::rationals();

std::vector<std::pair<std::size_t, std::size_t>> smallSuperDims(std::size_t maxTotal) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t total = 1; total <= maxTotal; ++total)
    for (std::size_t m = 0; m <= total; ++m) out.emplace_back(m, total - m);
  return out;
}

}  // namespace

TEST_SUITE("superlinalg") {
  TEST_CASE("parity decomposition is exact") {
    SuperSpace v = SuperSpace::standard(Q, 2, 2);
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      SuperVector x = testutil::randomVector(rng, v);
      auto [even, odd] = x.parityDecompose();
      CHECK(even + odd == x);
      CHECK(even.isHomogeneous(Parity::even));
      CHECK(odd.isHomogeneous(Parity::odd));
    }
    // zero vector is homogeneous of both parities
    SuperVector zero = SuperVector::zero(v);
    CHECK(zero.isHomogeneous(Parity::even));
    CHECK(zero.isHomogeneous(Parity::odd));
  }

  TEST_CASE("map parity parts split blocks exactly") {
    SuperSpace v = SuperSpace::standard(Q, 1, 1);
    SuperMap a = SuperMap::elementary(v, 0, 0) + SuperMap::elementary(v, 0, 1);
    SuperMap even = a.parityPart(Parity::even);
    SuperMap odd = a.parityPart(Parity::odd);
    CHECK(even + odd == a);
    CHECK(even == SuperMap::elementary(v, 0, 0));
    CHECK(odd == SuperMap::elementary(v, 0, 1));
    CHECK(even.isHomogeneous(Parity::even));
    CHECK(odd.isHomogeneous(Parity::odd));
  }

  TEST_CASE("elementary map action") {
    SuperSpace v = SuperSpace::standard(Q, 1, 1);
    CHECK(SuperMap::elementary(v, 0, 0).apply(v.basisVector(0)) == v.basisVector(0));
    CHECK(SuperMap::elementary(v, 0, 1).apply(v.basisVector(1)) == v.basisVector(0));
    CHECK(SuperMap::elementary(v, 0, 1).apply(v.basisVector(0)).isZero());
  }

  TEST_CASE("super commutator on frozen examples") {
    SuperSpace v = SuperSpace::standard(Q, 1, 1);
    SuperMap e11 = SuperMap::elementary(v, 0, 0);
    SuperMap e1f = SuperMap::elementary(v, 0, 1);
    SuperMap ef1 = SuperMap::elementary(v, 1, 0);

    CHECK(superCommutator(e11, e11).isZero());

    // odd A = E[e1,f1] + E[f1,e1]: [A,A] = AA + AA = 2*Id
    SuperMap a = e1f + ef1;
    CHECK(superCommutator(a, a) == SuperMap::identity(v).scaled(Q.fromLong(2)));
    // same value through the naive multiplication oracle
    auto aa = testutil::naiveMatMul(testutil::entriesOf(a), testutil::entriesOf(a), Q);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        CHECK(superCommutator(a, a).entry(i, j) == aa[i][j] + aa[i][j]);

    CHECK(superCommutator(e11, e1f) == e1f);
  }

  TEST_CASE("super commutator is super skew on gl(m|n), m+n <= 4") {
    for (auto [m, n] : smallSuperDims(4)) {
      SuperSpace v = SuperSpace::standard(Q, m, n);
      SuperSpace gl = glSpace(v);
      const std::size_t d = v.dim();
      for (std::size_t a = 0; a < d * d; ++a)
        for (std::size_t b = 0; b < d * d; ++b) {
          SuperMap ma = SuperMap::elementary(v, a / d, a % d);
          SuperMap mb = SuperMap::elementary(v, b / d, b % d);
          SuperMap lhs = superCommutator(ma, mb);
          SuperMap rhs = superCommutator(mb, ma);
          if (koszulSign(gl.parity(a), gl.parity(b)) < 0)
            CHECK((lhs - rhs).isZero());
          else
            CHECK((lhs + rhs).isZero());
        }
    }
  }

  TEST_CASE("super commutator satisfies J2 on gl(m|n), m+n <= 3") {
    for (auto [m, n] : smallSuperDims(3)) {
      SuperSpace v = SuperSpace::standard(Q, m, n);
      SuperSpace gl = glSpace(v);
      const std::size_t d = v.dim();
      for (std::size_t a = 0; a < d * d; ++a)
        for (std::size_t b = 0; b < d * d; ++b)
          for (std::size_t c = 0; c < d * d; ++c) {
            SuperMap ma = SuperMap::elementary(v, a / d, a % d);
            SuperMap mb = SuperMap::elementary(v, b / d, b % d);
            SuperMap mc = SuperMap::elementary(v, c / d, c % d);
            // [a,[b,c]] - [[a,b],c] - (-1)^{|a||b|}[b,[a,c]] = 0
            SuperMap lhs = superCommutator(ma, superCommutator(mb, mc));
            SuperMap t1 = superCommutator(superCommutator(ma, mb), mc);
            SuperMap t2 = superCommutator(mb, superCommutator(ma, mc));
            SuperMap rhs =
                koszulSign(gl.parity(a), gl.parity(b)) < 0 ? t1 - t2 : t1 + t2;
            CHECK((lhs - rhs).isZero());
          }
    }
  }

  TEST_CASE("supertrace block formula") {
    SuperSpace v = SuperSpace::standard(Q, 1, 1);
    CHECK(supertrace(SuperMap::identity(v)) == Q.zero());
    CHECK(supertrace(SuperMap::elementary(v, 0, 0)) == Q.one());
    CHECK(supertrace(SuperMap::elementary(v, 1, 1)) == Q.fromLong(-1));
  }

  TEST_CASE("supertrace kills commutators on gl(m|n), m+n <= 4") {
    for (auto [m, n] : smallSuperDims(4)) {
      SuperSpace v = SuperSpace::standard(Q, m, n);
      const std::size_t d = v.dim();
      for (std::size_t a = 0; a < d * d; ++a)
        for (std::size_t b = 0; b < d * d; ++b) {
          SuperMap ma = SuperMap::elementary(v, a / d, a % d);
          SuperMap mb = SuperMap::elementary(v, b / d, b % d);
          CHECK(supertrace(superCommutator(ma, mb)).isZero());
        }
    }
  }

  TEST_CASE("subspaceFromVectors frozen examples") {
    SuperSpace v = SuperSpace::standard(Q, 1, 1);
    CHECK(GradedSubspace::fromGenerators(v, {SuperVector::zero(v)}).dim() == 0);
    CHECK(GradedSubspace::fromGenerators(v, {}).dim() == 0);

    SuperVector e1 = v.basisVector(0);
    CHECK(GradedSubspace::fromGenerators(v, {e1, e1.scaled(Q.fromLong(2))}).dim() == 1);

    // non-homogeneous generator grades the span
    GradedSubspace graded = GradedSubspace::fromGenerators(v, {e1 + v.basisVector(1)});
    CHECK(graded.dim() == 2);
    CHECK(graded == GradedSubspace::full(v));
  }

  TEST_CASE("canonical form is idempotent and order independent") {
    for (const Field& field : {Field::rationals(), Field::primeField(5)}) {
      SuperSpace v = SuperSpace::standard(field, 2, 2);
      Rng rng(42);
      for (int trial = 0; trial < 25; ++trial) {
        std::vector<SuperVector> gens;
        for (int g = 0; g < 3; ++g) gens.push_back(testutil::randomVector(rng, v));
        GradedSubspace s = GradedSubspace::fromGenerators(v, gens);

        // idempotent: rebuilding from the canonical basis gives the same value
        std::vector<SuperVector> basis;
        for (std::size_t k = 0; k < s.dim(); ++k) basis.push_back(s.basisVector(k));
        CHECK(GradedSubspace::fromGenerators(v, basis) == s);

        // order independent
        std::reverse(gens.begin(), gens.end());
        CHECK(GradedSubspace::fromGenerators(v, gens) == s);

        // graded: S = (S n even) + (S n odd)
        std::vector<SuperVector> evenParts, oddParts;
        for (const SuperVector& b : basis) {
          evenParts.push_back(b.parityPart(Parity::even));
          oddParts.push_back(b.parityPart(Parity::odd));
        }
        GradedSubspace evenPart = GradedSubspace::fromGenerators(v, evenParts);
        GradedSubspace oddPart = GradedSubspace::fromGenerators(v, oddParts);
        CHECK(evenPart.sum(oddPart) == s);
      }
    }
  }

  TEST_CASE("membership and coordinates") {
    SuperSpace v = SuperSpace::standard(Q, 2, 1);
    SuperVector gen = v.basisVector(0) + v.basisVector(1).scaled(Q.fromLong(3));
    GradedSubspace s = GradedSubspace::fromGenerators(v, {gen});
    CHECK(s.dim() == 1);
    CHECK(s.contains(gen));
    CHECK(s.contains(gen.scaled(Q.parse("-2/3"))));
    CHECK_FALSE(s.contains(v.basisVector(0)));
    auto coords = s.coordinatesOf(gen.scaled(Q.fromLong(5)));
    REQUIRE(coords.has_value());
    CHECK((*coords)[0] == Q.fromLong(5));
  }

  TEST_CASE("kernelOfMaps") {
    SuperSpace v = SuperSpace::standard(Q, 1, 1);
    CHECK(kernelOfMaps(v, {}) == GradedSubspace::full(v));
    GradedSubspace k = kernelOfMaps(v, {SuperMap::elementary(v, 0, 1)});
    CHECK(k == GradedSubspace::fromGenerators(v, {v.basisVector(0)}));
  }

  TEST_CASE("intersection and sum") {
    SuperSpace v = SuperSpace::standard(Q, 1, 1);
    GradedSubspace se = GradedSubspace::fromGenerators(v, {v.basisVector(0)});
    GradedSubspace sf = GradedSubspace::fromGenerators(v, {v.basisVector(1)});
    CHECK(se.intersect(sf).dim() == 0);
    CHECK(se.sum(sf) == GradedSubspace::full(v));

    SuperSpace w = SuperSpace::standard(Q, 3, 0);
    GradedSubspace a =
        GradedSubspace::fromGenerators(w, {w.basisVector(0) + w.basisVector(1),
                                           w.basisVector(1) + w.basisVector(2)});
    GradedSubspace b =
        GradedSubspace::fromGenerators(w, {w.basisVector(0) - w.basisVector(2),
                                           w.basisVector(0) + w.basisVector(2)});
    GradedSubspace common = a.intersect(b);
    CHECK(common.dim() == 1);
    CHECK(common.contains(w.basisVector(0) + w.basisVector(1).scaled(Q.fromLong(2)) +
                          w.basisVector(2)) == false);
    CHECK(common.contains(w.basisVector(0) - w.basisVector(2)));
  }
}
