#include "tarep/rational.hpp"

#include <doctest.h>

using namespace tarep;

TEST_CASE("rational text round trip") {
  CHECK(to_string(Rational(3, 2)) == "3/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(to_string(Rational(-1, 3)) == "-1/3");
  CHECK(*parse_rational("6/4") == Rational(3, 2));
  CHECK(*parse_rational("-7") == Rational(-7));
  CHECK_FALSE(parse_rational("1/0"));
  CHECK_FALSE(parse_rational("abc"));
  CHECK_FALSE(parse_rational(""));
}

TEST_CASE("rounding and lcm") {
  CHECK(floor(Rational(-1, 2)) == -1);
  CHECK(ceil(Rational(-1, 2)) == 0);
  CHECK(ceil(Rational(7, 2)) == 4);
  CHECK(abs(Rational(-5, 3)) == Rational(5, 3));
  CHECK(is_integer(Rational(8, 4)));
  CHECK(lcm(Rational(4), Rational(6)) == 12);
}
