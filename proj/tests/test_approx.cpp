#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "trigsum/approx.hpp"
#include "trigsum/errors.hpp"

using namespace trigsum;

TEST_CASE("integers and dyadic rationals are exact") {
  ApproxReal a(3L);
  CHECK(a.is_exact());
  CHECK(a.bound() == 0.0);
  ApproxReal half(Rational(Integer(1), Integer(2)));
  CHECK(half.is_exact());
  a += half;
  CHECK(a.is_exact());
  CHECK(a.contains(Rational(Integer(7), Integer(2))));
}

TEST_CASE("a third carries a tiny radius that encloses it") {
  const Rational third(Integer(1), Integer(3));
  ApproxReal x(third);
  CHECK_FALSE(x.is_exact());
  CHECK(x.bound() > 0.0);
  CHECK(x.bound() < 1e-37);
  CHECK(x.contains(third));
  CHECK_FALSE(x.contains(Rational(Integer(1), Integer(3) + Integer(1))));
}

TEST_CASE("ball arithmetic keeps the true value inside") {
  const Rational third(Integer(1), Integer(3));
  const Rational seventh(Integer(1), Integer(7));
  ApproxReal t(third), s(seventh);

  ApproxReal sum = t;
  sum += s;
  CHECK(sum.contains(third + seventh));

  ApproxReal diff = t;
  diff -= s;
  CHECK(diff.contains(third - seventh));

  ApproxReal prod = t;
  prod *= s;
  CHECK(prod.contains(third * seventh));

  ApproxReal quot = t;
  quot /= s;
  CHECK(quot.contains(third / seventh));

  const ApproxReal cube = pow(t, 3);
  CHECK(cube.contains(third * third * third));
  CHECK(pow(t, 0).contains(Rational(1)));
}

TEST_CASE("division by a ball around zero is a pole") {
  ApproxReal one(1L);
  ApproxReal zero(0L);
  CHECK(zero.contains_zero());
  CHECK_THROWS_AS(one /= zero, PoleError);
}

TEST_CASE("negation and absolute value") {
  ApproxReal x(Rational(Integer(-5), Integer(3)));
  const ApproxReal y = abs(x);
  CHECK(y.contains(Rational(Integer(5), Integer(3))));
  CHECK((-y).contains(Rational(Integer(-5), Integer(3))));
  CHECK(y.mag_lower() <= 5.0 / 3.0);
  CHECK(y.mag_upper() >= 5.0 / 3.0);
}

TEST_CASE("copy and move preserve value") {
  ApproxReal a(Rational(Integer(2), Integer(3)));
  ApproxReal b(a);
  ApproxReal c(std::move(a));
  CHECK(b.contains(Rational(Integer(2), Integer(3))));
  CHECK(c.contains(Rational(Integer(2), Integer(3))));
  a = b;
  CHECK(a.contains(Rational(Integer(2), Integer(3))));
  ApproxReal d(Precision{200});
  d = std::move(c);
  CHECK(d.precision().bits == 128);
}

TEST_CASE("rendering uses 30 significant digits and an upward bound") {
  ApproxReal third(Rational(Integer(1), Integer(3)));
  const std::string s = third.to_string();
  CHECK(s.rfind("3.33333333333333333333333333333e-01±", 0) == 0);
  ApproxReal two(2L);
  CHECK(two.to_string() == "2.00000000000000000000000000000e+00±0.00e+00");
  std::ostringstream os;
  os << two;
  CHECK(os.str() == two.to_string());
}

TEST_CASE("precision bounds") {
  CHECK(checked_precision(53).bits == 53);
  CHECK(checked_precision(4096).bits == 4096);
  CHECK_THROWS_AS(checked_precision(52), DomainError);
  CHECK_THROWS_AS(checked_precision(1L << 21), DomainError);
}
