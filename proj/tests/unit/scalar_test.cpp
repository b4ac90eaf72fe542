#include <doctest.h>

#include <stdexcept>

#include "schrodinger/scalar.hpp"

using schrodinger::Scalar;

TEST_CASE("parse accepts integers and fractions in lowest terms") {
  CHECK(Scalar::parse("7") == Scalar(7));
  CHECK(Scalar::parse("-3/6") == Scalar(-1, 2));
  CHECK(Scalar::parse("+4/8") == Scalar(1, 2));
  CHECK(Scalar::parse("0/5").is_zero());
}

TEST_CASE("parse rejects floats, blanks and zero denominators") {
  for (const char* bad : {"1.5", "", " 1", "1/0", "1e3", "abc", "1/", "/2", "0.5", "4/-8"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Scalar::parse(bad), std::invalid_argument);
  }
}

TEST_CASE("text forms") {
  CHECK(Scalar(3).str() == "3");
  CHECK(Scalar(-2, 4).str() == "-1/2");
  CHECK(Scalar(3).fraction_str() == "3/1");
  CHECK(Scalar(0).fraction_str() == "0/1");
  CHECK(Scalar(-5, 10).fraction_str() == "-1/2");
}

TEST_CASE("floor, abs, integrality") {
  CHECK(Scalar(-1, 2).floor() == Scalar(-1));
  CHECK(Scalar(7, 3).floor() == Scalar(2));
  CHECK(Scalar(-4).floor() == Scalar(-4));
  CHECK(Scalar(-5, 3).abs() == Scalar(5, 3));
  CHECK(Scalar(6, 3).is_integer());
  CHECK_FALSE(Scalar(1, 3).is_integer());
  CHECK(Scalar(-9).to_long() == -9);
  CHECK_FALSE(Scalar(1, 2).to_long().has_value());
}

TEST_CASE("field arithmetic is exact") {
  const Scalar a(1, 3);
  const Scalar b(-5, 7);
  CHECK(a + b == Scalar(-8, 21));
  CHECK(a * b == Scalar(-5, 21));
  CHECK((a / b) * b == a);
  CHECK(a - a == Scalar(0));
  CHECK(a > b);
  CHECK_THROWS_AS(a / Scalar(0), std::domain_error);
}

TEST_CASE("binomial coefficients") {
  CHECK(schrodinger::binomial(5, 2) == Scalar(10));
  CHECK(schrodinger::binomial(4, 0) == Scalar(1));
  CHECK(schrodinger::binomial(40, 20) == Scalar::parse("137846528820"));
}
