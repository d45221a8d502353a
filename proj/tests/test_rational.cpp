#include <doctest.h>

#include "linkage/rational.hpp"

using namespace linkage;

TEST_CASE("parse and print rationals") {
  CHECK(to_string(parse_rational("3")) == "3");
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational(" +2/6 ")) == "1/3");
  CHECK(to_string(parse_rational("0/5")) == "0");
  CHECK(parse_rational("10/5") == 2);
}

TEST_CASE("malformed rationals are rejected") {
  for (const char* bad : {"", "/", "1/", "/2", "1/0", "1/-2", "1/+2", "a", "1.5", "1/2/3", "--1"}) {
    CHECK_THROWS_AS(parse_rational(bad), ConfigurationError);
  }
}

TEST_CASE("ratio is canonical") {
  CHECK(ratio(2, -4) == Rational(-1) / 2);
  CHECK(ratio(2, -4).get_den() == 2);
  CHECK(to_string(ratio(-9, -3)) == "3");
  CHECK_THROWS_AS(ratio(1, 0), ConfigurationError);
}

TEST_CASE("integrality helpers") {
  CHECK(is_integer(ratio(4, 2)));
  CHECK_FALSE(is_integer(ratio(1, 2)));
  CHECK(to_int64(ratio(-14, 7)) == -2);
  CHECK_THROWS_AS(to_int64(ratio(1, 3)), ConfigurationError);
  CHECK_THROWS_AS(to_int64(parse_rational("100000000000000000000000")), ConfigurationError);
  CHECK(compare(ratio(1, 3), ratio(1, 2)) == std::strong_ordering::less);
  CHECK(gcd64(12, -18) == 6);
}
