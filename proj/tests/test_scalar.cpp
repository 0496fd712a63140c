#include <doctest.h>

#include "osalg/errors.hpp"
#include "osalg/scalar.hpp"

using namespace osalg;

TEST_CASE("make_scalar reduces and fixes the denominator sign") {
  CHECK(scalar_to_string(make_scalar(6, 4)) == "3/2");
  CHECK(scalar_to_string(make_scalar(1, -2)) == "-1/2");
  CHECK(scalar_to_string(make_scalar(-3, -6)) == "1/2");
  CHECK(scalar_to_string(make_scalar(0, 7)) == "0");
  CHECK(scalar_to_string(make_scalar(5)) == "5");
  CHECK_THROWS_AS(make_scalar(1, 0), input_error);
}

TEST_CASE("parse_scalar accepts integers and fractions") {
  CHECK(parse_scalar("3/4") == make_scalar(3, 4));
  CHECK(parse_scalar("-3/4") == make_scalar(-3, 4));
  CHECK(parse_scalar("0") == Scalar(0));
  CHECK(parse_scalar("-0/5") == Scalar(0));
  CHECK(parse_scalar("7") == Scalar(7));
  CHECK(parse_scalar("6/4") == make_scalar(3, 2));
  CHECK(parse_scalar("1/3") * 3 == Scalar(1));
}

TEST_CASE("parse_scalar rejects malformed text") {
  CHECK_THROWS_AS(parse_scalar(""), input_error);
  CHECK_THROWS_AS(parse_scalar("1/0"), input_error);
  CHECK_THROWS_AS(parse_scalar("a"), input_error);
  CHECK_THROWS_AS(parse_scalar("1/2/3"), input_error);
  CHECK_THROWS_AS(parse_scalar("1/ 2"), input_error);
  CHECK_THROWS_AS(parse_scalar("2.5"), input_error);
  CHECK_THROWS_AS(parse_scalar("1 "), input_error);
  CHECK_THROWS_AS(parse_scalar("0x3"), input_error);
}

TEST_CASE("arithmetic on parsed values stays canonical") {
  Scalar a = parse_scalar("1/3");
  Scalar b = parse_scalar("1/6");
  CHECK(scalar_to_string(a + b) == "1/2");
  CHECK(scalar_to_string(a - a) == "0");
  CHECK(scalar_to_string(a / b) == "2");
}

TEST_CASE("scalar_sign") {
  CHECK(scalar_sign(parse_scalar("-7/3")) == -1);
  CHECK(scalar_sign(Scalar(0)) == 0);
  CHECK(scalar_sign(parse_scalar("2/9")) == 1);
}
