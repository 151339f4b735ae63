#include "csl_lab/numeric.hpp"

#include "doctest.h"

#include <stdexcept>

using namespace csl_lab;

TEST_SUITE("rational") {

TEST_CASE("integer helpers") {
    CHECK(isqrt(Int(0)) == 0);
    CHECK(isqrt(Int(24)) == 4);
    CHECK(isqrt(Int(25)) == 5);
    CHECK(isqrt(Int(26)) == 5);
    Int big = Int("123456789012345678901234567890");
    CHECK(isqrt(big * big) == big);
    CHECK(isqrt(big * big + 1) == big);
    CHECK(isqrt(big * big - 1) == big - 1);
    CHECK_THROWS_AS(isqrt(Int(-1)), std::domain_error);

    Int r;
    CHECK(cube_root(Int(27), r));
    CHECK(r == 3);
    CHECK(cube_root(Int(1), r));
    CHECK(r == 1);
    CHECK_FALSE(cube_root(Int(26), r));
    CHECK(cube_root(big * big * big, r));
    CHECK(r == big);
}

TEST_CASE("parse_int") {
    CHECK(parse_int("0") == 0);
    CHECK(parse_int("-17") == -17);
    CHECK(parse_int("123456789012345678901234567890") ==
          Int("123456789012345678901234567890"));
    CHECK_THROWS_AS(parse_int(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_int("12x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int("-"), std::invalid_argument);
}

TEST_CASE("arithmetic is exact and normalized") {
    Rational a(1, 3);
    Rational b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(-6, -3).str() == "2");
    CHECK(Rational(0, 7) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(a / Rational(0), std::invalid_argument);
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 3) > Rational(2));
    CHECK(Rational(2, 6) <= Rational(1, 3));
}

TEST_CASE("string round trip") {
    for (const char* s : {"0", "1", "-1", "1/2", "-22/7", "123456789/2"}) {
        Rational v = Rational::parse(s);
        CHECK(v.str() == s);
        CHECK(Rational::parse(v.str()) == v);
    }
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
}

TEST_CASE("to_int64 bounds") {
    CHECK(to_int64(Int(42)) == 42);
    CHECK(to_int64(Int(-9007199254740993LL)) == -9007199254740993LL);
    Int big("123456789012345678901234567890");
    CHECK_THROWS_AS(to_int64(big), std::overflow_error);
}

}
