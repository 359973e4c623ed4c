#include <doctest.h>

#include "superomni/scalar.hpp"

using namespace superomni;

TEST_SUITE("scalar") {
  TEST_CASE("rationals stay reduced with positive denominator") {
    Scalar a = Scalar::rational(2, -4);
    CHECK(a.str() == "-1/2");
    CHECK(a == Scalar::rational(-1, 2));
    CHECK((a + a).str() == "-1");
    CHECK((a * Scalar::rational(-6)).str() == "3");
    CHECK(Scalar::rational(0, 7) == Scalar::rational(0));
  }

  TEST_CASE("rational arithmetic is exact") {
    Field q = Field::rationals();
    Scalar x = q.parse("1/3");
    Scalar y = q.parse("1/6");
    CHECK((x + y) == q.parse("1/2"));
    CHECK((x - y) == q.parse("1/6"));
    CHECK((x * y) == q.parse("1/18"));
    CHECK((x / y) == q.parse("2"));
    CHECK((-x).str() == "-1/3");
    CHECK(x.inverse().str() == "3");
  }

  TEST_CASE("prime fields require an odd prime") {
    CHECK_THROWS_AS(Field::primeField(2), Error);
    CHECK_THROWS_AS(Field::primeField(4), Error);
    CHECK_THROWS_AS(Field::primeField(9), Error);
    CHECK_THROWS_AS(Field::primeField(1), Error);
    CHECK_NOTHROW(Field::primeField(3));
    CHECK_NOTHROW(Field::primeField(5));
    CHECK_NOTHROW(Field::primeField(7));
  }

  TEST_CASE("residue arithmetic") {
    Field f5 = Field::primeField(5);
    Scalar a = f5.fromLong(3);
    Scalar b = f5.fromLong(4);
    CHECK((a + b) == f5.fromLong(2));
    CHECK((a * b) == f5.fromLong(2));
    CHECK((a - b) == f5.fromLong(4));
    CHECK(a.inverse() == f5.fromLong(2));  // 3*2 = 6 = 1
    CHECK((a / b) == f5.fromLong(2));      // 3 * 4^{-1} = 3*4 = 12 = 2
    CHECK(f5.fromLong(-1) == f5.fromLong(4));
  }

  TEST_CASE("parse handles fractions in prime fields") {
    Field f5 = Field::primeField(5);
    CHECK(f5.parse("7/3") == f5.fromLong(4));  // 2 * 3^{-1} = 2*2
    CHECK(f5.parse("1/2") == f5.fromLong(3));
    CHECK_THROWS_AS(f5.parse("1/5"), Error);
    CHECK_THROWS_AS(f5.parse("x"), Error);
    CHECK_THROWS_AS(Field::rationals().parse("1/0"), Error);
  }

  TEST_CASE("division by zero is an error") {
    CHECK_THROWS_AS(Scalar::rational(1).operator/(Scalar::rational(0)), Error);
    Field f5 = Field::primeField(5);
    CHECK_THROWS_AS(f5.one().operator/(f5.zero()), Error);
  }

  TEST_CASE("fields do not mix") {
    Scalar q = Scalar::rational(1);
    Scalar r = Scalar::residue(1, 5);
    CHECK_THROWS_AS(q.operator+(r), Error);
    CHECK_THROWS_AS(q.operator==(r), Error);
    CHECK_THROWS_AS(Scalar::residue(1, 5).operator*(Scalar::residue(1, 7)), Error);
  }

  TEST_CASE("total order within a field") {
    CHECK(Scalar::rational(1, 3).compare(Scalar::rational(1, 2)) < 0);
    CHECK(Scalar::rational(1, 2).compare(Scalar::rational(1, 2)) == 0);
    Field f5 = Field::primeField(5);
    CHECK(f5.fromLong(2).compare(f5.fromLong(4)) < 0);
  }
}
