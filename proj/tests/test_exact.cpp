#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "trigsum/errors.hpp"
#include "trigsum/exact.hpp"

using namespace trigsum;

namespace {
Rational R(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }
}  // namespace

TEST_CASE("rationals stay canonical") {
  const Rational x = R(6, -4);
  CHECK(x.numerator() == -3);
  CHECK(x.denominator() == 2);
  CHECK(R(0, 7).to_string() == "0");
  CHECK(R(0, 7).denominator() == 1);
  CHECK(R(10, 5).to_string() == "2");
  CHECK(R(-1, 18).to_string() == "-1/18");
  CHECK_THROWS_AS(R(1, 0), DomainError);
}

TEST_CASE("parse accepts integers and fractions") {
  CHECK(Rational::parse("17/18") == R(17, 18));
  CHECK(Rational::parse("-4") == R(-4));
  CHECK(Rational::parse("4/-6") == R(-2, 3));
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rational::parse("abc"), DomainError);
}

TEST_CASE("arithmetic and ordering") {
  CHECK(R(1, 2) + R(1, 3) == R(5, 6));
  CHECK(R(1, 2) - R(1, 3) == R(1, 6));
  CHECK(R(2, 3) * R(9, 4) == R(3, 2));
  CHECK(R(2, 3) / R(4, 3) == R(1, 2));
  CHECK_THROWS_AS(R(1) / R(0), DomainError);
  CHECK(R(-1, 3) < R(-1, 4));
  CHECK(R(7, 2).floor() == 3);
  CHECK(R(-7, 2).floor() == -4);
  CHECK(abs(R(-5, 9)) == R(5, 9));
}

TEST_CASE("large magnitudes do not overflow") {
  Integer p = 10000, q = 9999;
  Rational prod(Integer(p * p * p * q * q * q));
  CHECK(prod.numerator() == Integer("999700029999000000000000"));
  CHECK(binomial(60, 30) == Integer("118264581564861424"));
}

TEST_CASE("gcd") {
  CHECK(gcd(4, 6) == 2);
  CHECK(gcd(1, 97) == 1);
  CHECK(gcd(35, 12) == 1);
  CHECK(gcd(0, 0) == 0);
  CHECK(gcd(-8, 12) == 4);
}

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(9, 0) == 1);
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK_THROWS_AS(binomial(-1, 0), DomainError);
  for (long n = 2; n <= 40; ++n) {
    for (long k = 1; k < n; ++k) {
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST_CASE("sawtooth and fractional part") {
  CHECK(sawtooth(R(1, 2)) == R(0));
  CHECK(sawtooth(R(1, 3)) == R(-1, 6));
  CHECK(sawtooth(R(7)) == R(0));
  CHECK(sawtooth(R(-1, 3)) == R(1, 6));
  CHECK(frac(R(9, 4)) == R(1, 4));
  CHECK(frac(R(-1, 3)) == R(2, 3));
  CHECK(frac(R(5)) == R(0));

  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<long> num(-5000, 5000), den(1, 997);
  for (int i = 0; i < 2000; ++i) {
    const Rational x = R(num(rng), den(rng));
    CHECK(sawtooth(x) + sawtooth(-x) == R(0));
    if (!x.is_integer()) {
      CHECK(frac(x) + frac(-x) == R(1));
    }
  }
}

TEST_CASE("mod_floor is always nonnegative") {
  CHECK(mod_floor(-1, 6) == 5);
  CHECK(mod_floor(13, 10) == 3);
  CHECK(mod_floor(-12, 6) == 0);
}
