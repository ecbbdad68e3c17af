#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "dcliff/scalar_field.hpp"

using dcliff::Coefficient;
using dcliff::DomainError;
using dcliff::Rational;

namespace {

Coefficient random_coefficient(std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  for (;;) {
    Coefficient c(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                  Rational(num(rng), den(rng)));
    if (!nonzero || !c.is_zero()) return c;
  }
}

}  // namespace

TEST_CASE("rational arithmetic is reduced with a positive denominator") {
  const Rational a(6, -4);
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(Rational(-7, 3).to_string() == "-7/3");
  CHECK(Rational::parse("10/-4") == Rational(-5, 2));
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK_THROWS_AS(Rational(0).inverse(), DomainError);
}

TEST_CASE("rational overflow is detected instead of wrapping") {
  const Rational big(INT64_MAX);
  CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
  CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
}

TEST_CASE("defining relations of i and sqrt 2") {
  const Coefficient i = Coefficient::i();
  const Coefficient r2 = Coefficient::sqrt2();
  CHECK(i * i == Coefficient(-1));
  CHECK(r2 * r2 == Coefficient(2));
  CHECK((i * r2) * (i * r2) == Coefficient(-2));
}

TEST_CASE("inverse of 1 + sqrt 2") {
  const Coefficient x = Coefficient(1) + Coefficient::sqrt2();
  const Coefficient expected = Coefficient(-1) + Coefficient::sqrt2();
  CHECK(x.inverse() == expected);
  CHECK(x * expected == Coefficient(1));
}

TEST_CASE("1/sqrt 2 squared is 1/2") {
  const Coefficient s = Coefficient::sqrt2().inverse();
  CHECK(s == Coefficient(0, 0, Rational(1, 2), 0));
  CHECK(s * s == Coefficient(Rational(1, 2)));
}

TEST_CASE("division by zero raises DomainError") {
  CHECK_THROWS_AS(Coefficient(0).inverse(), DomainError);
  CHECK_THROWS_AS(Coefficient(3) / Coefficient(0), DomainError);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const Coefficient x = random_coefficient(rng, false);
    const Coefficient y = random_coefficient(rng, false);
    const Coefficient z = random_coefficient(rng, false);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
  }
}

TEST_CASE("every nonzero element has an exact inverse") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    const Coefficient x = random_coefficient(rng, true);
    CHECK(x * x.inverse() == Coefficient(1));
    CHECK(!x.norm().is_zero());
  }
}

TEST_CASE("textual form round-trips") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const Coefficient x = random_coefficient(rng, false);
    CHECK(Coefficient::parse(x.to_string()) == x);
  }
  CHECK(Coefficient(0).to_string() == "0");
  CHECK(Coefficient::parse("1/2 - 3*i + r2 - 1/4*i*r2") ==
        Coefficient(Rational(1, 2), -3, 1, Rational(-1, 4)));
  CHECK(Coefficient::parse("i") == Coefficient::i());
  CHECK(Coefficient::parse("-r2") == -Coefficient::sqrt2());
}
