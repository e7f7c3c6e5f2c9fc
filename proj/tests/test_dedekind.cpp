#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "trigsum/dedekind.hpp"
#include "trigsum/errors.hpp"

using namespace trigsum;

namespace {
Rational R(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }
}  // namespace

TEST_CASE("definition sum: small values") {
  CHECK(dedekind_def(1, 2) == R(0));
  CHECK(dedekind_def(1, 3) == R(1, 18));
  CHECK(dedekind_def(2, 3) == R(-1, 18));
  CHECK(dedekind_def(3, 5) == R(0));
  CHECK(dedekind_def(0, 1) == R(0));
  for (long p = 3; p <= 99; p += 2) CHECK(dedekind_def(p, 2) == R(0));
}

TEST_CASE("definition sum rejects non-coprime input") {
  CHECK_THROWS_AS(dedekind_def(2, 4), DomainError);
  CHECK_THROWS_AS(dedekind_def(1, 0), DomainError);
  CHECK_THROWS_AS(dedekind_fast(6, 9), DomainError);
}

TEST_CASE("fast recursion matches the definition") {
  CHECK(dedekind_fast(1, 3) == R(1, 18));
  CHECK(dedekind_fast(3, 5) == R(0));
  CHECK(dedekind_fast(2, 5) == R(0));
  for (long p = 1; p <= 120; ++p) {
    for (long q = -p; q <= 2 * p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      CHECK(dedekind_fast(q, p) == dedekind_def(q, p));
    }
  }
}

TEST_CASE("fast recursion handles huge arguments") {
  const Integer p("1000000000000000000000007");
  const Integer q("123456789012345678901");
  const Rational s = dedekind_fast(q, p);
  const Rational t = dedekind_fast(p, q);
  CHECK(s + t == reciprocity_rhs(p, q));
}

TEST_CASE("reciprocity, negation and integrality") {
  for (long p = 1; p <= 100; ++p) {
    for (long q = 1; q <= 100; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const Rational s = dedekind_def(q, p);
      CHECK(s + dedekind_def(p, q) == reciprocity_rhs(p, q));
      CHECK((R(6 * p) * s).is_integer());
      if (q < p) CHECK(dedekind_def(p - q, p) == -s);
    }
  }
}

TEST_CASE("closed form for q = 1 mod p") {
  CHECK(dedekind_closed_q1(3, 1) == R(1, 18));
  CHECK(dedekind_closed_q1(2, 1) == R(0));
  CHECK(dedekind_closed_q1(5, 1) == R(1, 5));
  CHECK(dedekind_closed_q1(5, 11) == dedekind_def(11, 5));
  CHECK(dedekind_closed_q1(1, 0) == R(0));
  CHECK_THROWS_AS(dedekind_closed_q1(5, 2), DomainError);
}

TEST_CASE("closed form for the swapped pair") {
  CHECK(dedekind_closed_pq(3, 4) == R(-1, 8));
  CHECK(dedekind_closed_pq(3, 4) == dedekind_def(3, 4));
  CHECK(dedekind_closed_pq(2, 3) == R(-1, 18));
  CHECK(dedekind_closed_pq(1, 1) == R(0));
  CHECK_THROWS_AS(dedekind_closed_pq(3, 5), DomainError);
  for (long p = 1; p <= 40; ++p) {
    for (long j = 1; j <= 4; ++j) {
      const long q = j * p + 1;
      CHECK(dedekind_closed_pq(p, q) == dedekind_def(p, q));
      CHECK(dedekind_closed_q1(p, q) == dedekind_def(q, p));
    }
  }
}
