#include <doctest.h>

#include <random>

#include "camfan/errors.hpp"
#include "camfan/scalar.hpp"

using namespace camfan;

TEST_CASE("rational arithmetic is exact and canonical") {
  Scalar a = Scalar::rational(1, 3);
  Scalar b = Scalar::rational(1, 6);
  CHECK(a + b == Scalar::rational(1, 2));
  CHECK(a - b == b);
  CHECK(a * b == Scalar::rational(1, 18));
  CHECK(a / b == Scalar(2));
  CHECK((a - a).is_zero());
  CHECK(Scalar::rational(2, 4) == Scalar::rational(1, 2));
  CHECK(Scalar(-3).sign() == -1);
  CHECK(Scalar(0).sign() == 0);
}

TEST_CASE("golden ratio identities in Q(sqrt 5)") {
  // phi = (1+sqrt5)/2 satisfies phi^2 = phi + 1 and 1/phi = phi - 1.
  Scalar phi = Scalar::quadratic(mpq_class(1, 2), mpq_class(1, 2), 5);
  CHECK(phi * phi == phi + Scalar(1));
  CHECK(phi.inverse() == phi - Scalar(1));
  CHECK(phi.sign() == 1);
  CHECK((-phi).sign() == -1);
  // 2 cos(pi/5) = phi, the Cartan entry for a bond of label 5.
  Scalar root5 = Scalar::sqrt_of(5);
  CHECK(root5 * root5 == Scalar(5));
}

TEST_CASE("sign handles mixed-sign quadratic values") {
  // 9/4 - sqrt5 > 0 since 81/16 > 5; 2 - sqrt5 < 0 since 4 < 5.
  CHECK(Scalar::quadratic(mpq_class(9, 4), -1, 5).sign() == 1);
  CHECK(Scalar::quadratic(2, -1, 5).sign() == -1);
  CHECK(Scalar::quadratic(-2, 1, 5).sign() == 1);
  CHECK(Scalar::quadratic(mpq_class(-9, 4), 1, 5).sign() == -1);
  CHECK(Scalar::quadratic(0, -3, 5) < Scalar(0));
}

TEST_CASE("string round trip") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 23);
  for (int trial = 0; trial < 300; ++trial) {
    Scalar s;
    bool quad = trial % 2;
    if (quad)
      s = Scalar::quadratic(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)), 5);
    else
      s = Scalar::rational(num(rng), den(rng));
    Scalar back = Scalar::parse(s.str(), s.radicand() == 0 && quad ? 5 : s.radicand());
    CHECK(back == s);
  }
  CHECK(Scalar::parse("3", 0) == Scalar(3));
  CHECK(Scalar::parse("-7/2", 0) == Scalar::rational(-7, 2));
  CHECK(Scalar::parse("1/2+1/2\xe2\x88\x9a"
                      "5",
                      5) == Scalar::quadratic(mpq_class(1, 2), mpq_class(1, 2), 5));
  CHECK(Scalar::parse("0-2sqrt5", 5) == Scalar::quadratic(0, -2, 5));
  CHECK_THROWS_AS(Scalar::parse("1/0", 0), Error);
  CHECK_THROWS_AS(Scalar::parse("2+3sqrt7", 5), Error);
  CHECK_THROWS_AS(Scalar::parse("flan", 0), Error);
}

TEST_CASE("comparisons are the real-number order") {
  Scalar phi = Scalar::quadratic(mpq_class(1, 2), mpq_class(1, 2), 5);
  CHECK(Scalar(1) < phi);
  CHECK(phi < Scalar(2));
  CHECK(Scalar::rational(1618, 1000) < phi);
  CHECK(phi < Scalar::rational(1619, 1000));
}
