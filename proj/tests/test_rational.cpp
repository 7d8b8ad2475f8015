#include "doctest.h"
#include "limshape/errors.hpp"
#include "limshape/rational.hpp"

using limshape::Rational;

TEST_CASE("parse and print") {
    CHECK(Rational::parse("22/7").str() == "22/7");
    CHECK(Rational::parse("6/4").str() == "3/2");
    CHECK(Rational::parse("-6/4").str() == "-3/2");
    CHECK(Rational::parse("8/4").str() == "2");
    CHECK(Rational::parse("+5").str() == "5");
    CHECK(Rational::parse("0/9").str() == "0");
    for (const char* bad : {"", "/", "1/", "/2", "1/0", "a", "1.5", "1/-2", "--1", "1//2"})
        CHECK_THROWS_AS(Rational::parse(bad), limshape::ValidationError);
}

TEST_CASE("arithmetic stays canonical") {
    Rational a(1, 3), b(1, 6);
    CHECK((a + b).str() == "1/2");
    CHECK((a - b).str() == "1/6");
    CHECK((a * b).str() == "1/18");
    CHECK((a / b).str() == "2");
    CHECK(-a == Rational(-1, 3));
    CHECK(a > b);
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK_THROWS_AS(a / Rational(0), limshape::ComputationError);
    CHECK_THROWS_AS(Rational(1, 0), limshape::ValidationError);
}

TEST_CASE("floor, ceil, decimal") {
    CHECK(Rational(7, 2).floor_int() == 3);
    CHECK(Rational(7, 2).ceil_int() == 4);
    CHECK(Rational(-7, 2).floor_int() == -4);
    CHECK(Rational(-7, 2).ceil_int() == -3);
    CHECK(Rational(6).floor_int() == 6);
    CHECK(Rational(6).ceil_int() == 6);
    CHECK(Rational(1, 3).decimal() == "0.333333333333");
    CHECK(Rational(2, 3).decimal() == "0.666666666667");
    CHECK(Rational(-189, 40).decimal() == "-4.725");
    CHECK(Rational(5).decimal() == "5");
    CHECK(Rational(0).decimal() == "0");
    CHECK(limshape::floor_div(-7, 2) == -4);
    CHECK(limshape::ceil_div(7, 2) == 4);
    CHECK(limshape::ceil_div(-7, 2) == -3);
}

TEST_CASE("large values do not overflow") {
    Rational big = Rational::parse("123456789012345678901234567890/7");
    CHECK((big * Rational(7)).str() == "123456789012345678901234567890");
    CHECK_THROWS_AS(big.floor_int(), limshape::ComputationError);
}
