#include <doctest.h>

#include <random>

#include "homly/error.hpp"
#include "homly/rational.hpp"

using homly::MalformedScalar;
using homly::Rational;

TEST_CASE("canonical form") {
  CHECK(Rational::from_fraction(2, 4).str() == "1/2");
  CHECK(Rational::from_fraction(3, -3).str() == "-1");
  CHECK(Rational::from_fraction(3, -3).denominator() == 1);
  CHECK(Rational::from_fraction(0, 7).str() == "0");
  CHECK(Rational::from_fraction(0, 7).denominator() == 1);
  CHECK(Rational::from_fraction(-6, -4) == Rational::from_fraction(3, 2));
  CHECK_THROWS_AS(Rational::from_fraction(1, 0), MalformedScalar);
}

TEST_CASE("text grammar") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-3/6").str() == "-1/2");
  CHECK(Rational::parse("−2").str() == "-2");
  CHECK(Rational::parse("-0").str() == "0");
  CHECK(Rational::parse("12345678901234567890123/1").str() == "12345678901234567890123");
  for (const char* bad : {"", "1/0", "1/-2", "1/−2", "-", "/2", "1/", "+1", " 1", "1 ", "1.5", "--1", "1/2/3", "a"})
    CHECK_THROWS_AS(Rational::parse(bad), MalformedScalar);
}

TEST_CASE("arithmetic is exact") {
  const auto third = Rational::from_fraction(1, 3);
  CHECK(third + third + third == Rational(1));
  CHECK((Rational(1) - third).str() == "2/3");
  CHECK((third / Rational(2)).str() == "1/6");
  CHECK(-third < Rational(0));
  CHECK_THROWS_AS(third / Rational(0), MalformedScalar);

  Rational acc = Rational::from_fraction(1, 2);
  acc.add_product(Rational(3), Rational(4));
  CHECK(acc.str() == "25/2");
  Rational integral(5);
  integral.add_product(Rational(-2), Rational(3));
  CHECK(integral == Rational(-1));

  // no overflow: 3^200
  Rational big(1);
  for (int i = 0; i < 200; ++i) big *= Rational(3);
  CHECK(big.str().size() == 96);
}

TEST_CASE("field axioms on random rationals") {
  std::mt19937_64 rng(42);
  auto draw = [&] {
    return Rational::from_fraction(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 9) + 1);
  };
  for (int trial = 0; trial < 300; ++trial) {
    const Rational a = draw(), b = draw(), c = draw();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(Rational::parse(a.str()) == a);
    CHECK(a.denominator() > 0);
    CHECK(gcd(a.numerator(), a.denominator()) == 1);
  }
}
