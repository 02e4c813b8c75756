#include <random>
#include <stdexcept>

#include "doctest.h"
#include "pcralloc/rational.hpp"

using pcralloc::Rational;

TEST_CASE("construction reduces and normalizes sign") {
  CHECK(Rational(6, 10) == Rational(3, 5));
  CHECK(Rational(-6, 10) == Rational(3, -5));
  CHECK(Rational(-6, -10) == Rational(3, 5));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(4, 2).num() == 2);
  CHECK(Rational(4, 2).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse accepts integers, decimals and fractions") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("15.4") == Rational(154, 10));
  CHECK(Rational::parse("0.6") == Rational(3, 5));
  CHECK(Rational::parse("1.0") == Rational(1));
  CHECK(Rational::parse("-0.25") == Rational(-1, 4));
  CHECK(Rational::parse("3/5") == Rational(3, 5));
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1."), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
  CHECK(Rational(3, 5) * Rational(10) == Rational(6));
  CHECK(Rational(3, 10) * Rational(3'000'000) == Rational(900'000));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  // values whose naive 64-bit products would overflow
  std::int64_t big = 3'000'000'000'000'000'000;
  CHECK(Rational(big, 2) * Rational(2, big) == Rational(1));
  CHECK(Rational(big) + Rational(0) == Rational(big));
}

TEST_CASE("comparison is exact under cross multiplication") {
  CHECK(Rational(1, 3) < Rational(34, 100));
  CHECK(Rational(2, 3) > Rational(66, 100));
  CHECK(Rational(1'000'000'007, 1'000'000'009) <
        Rational(1'000'000'009, 1'000'000'011));
  CHECK(Rational(-1, 2) < Rational(1, 3));
}

TEST_CASE("overflow in a reduced result throws") {
  std::int64_t big = 6'000'000'000'000'000'000;
  CHECK_THROWS_AS(Rational(big) + Rational(big), std::overflow_error);
  CHECK_THROWS_AS(Rational(big) * Rational(3), std::overflow_error);
  CHECK(Rational(big) + Rational(1) == Rational(big + 1));  // still in range
}

TEST_CASE("to_string is an exact decimal for 2^a 5^b denominators") {
  CHECK(Rational(15'400'000).to_string() == "15400000");
  CHECK(Rational(154, 10).to_string() == "15.4");
  CHECK(Rational(3, 8).to_string() == "0.375");
  CHECK(Rational(1, 10).to_string() == "0.1");
  CHECK(Rational(-154, 10).to_string() == "-15.4");
  CHECK(Rational(0).to_string() == "0");
  CHECK(Rational(1, 3).to_string() == "1/3");
  CHECK(Rational(1, 2).to_string() == "0.5");
  // round-trips through parse
  CHECK(Rational::parse(Rational(154, 10).to_string()) == Rational(154, 10));
  CHECK(Rational::parse(Rational(1, 3).to_string()) == Rational(1, 3));
}

TEST_CASE("algebra holds on random small rationals") {
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
  std::uniform_int_distribution<std::int64_t> den(1, 1000);
  for (int i = 0; i < 2000; ++i) {
    Rational a(num(rng), den(rng));
    Rational b(num(rng), den(rng));
    CHECK(a + b - b == a);
    CHECK(a * b == b * a);
    CHECK((a - b) + b == a);
    CHECK(((a < b) ? (b - a) : (a - b)) >= Rational(0));
  }
}
