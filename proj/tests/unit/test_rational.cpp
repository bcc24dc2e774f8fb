#include "shiftkit/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace shiftkit;

TEST_CASE("rationals stay in canonical reduced form") {
    BigRational q = make_rational(BigInt(6), BigInt(-8));
    CHECK(num(q) == -3);
    CHECK(den(q) == 4);
    CHECK(BigRational(2, 4) == BigRational(1, 2));
    CHECK(sign(q) == -1);
    CHECK(rat_abs(q) == BigRational(3, 4));
    CHECK_THROWS_AS(make_rational(BigInt(1), BigInt(0)), error);
}

TEST_CASE("parse_rational") {
    CHECK(parse_rational("24/35") == BigRational(24, 35));
    CHECK(parse_rational("-3") == BigRational(-3));
    CHECK(parse_rational("+7/2") == BigRational(7, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), error);
    CHECK_THROWS_AS(parse_rational("a/b"), error);
    CHECK_THROWS_AS(parse_rational(""), error);
    CHECK_THROWS_AS(parse_rational("1.5"), error);
}

TEST_CASE("parse_number handles decimals and scientific notation exactly") {
    CHECK(parse_number("1e-9") == BigRational(1, 1000000000));
    CHECK(parse_number("0.645") == BigRational(129, 200));
    CHECK(parse_number("-2.5e3") == BigRational(-2500));
    CHECK(parse_number("24/35") == BigRational(24, 35));
    CHECK(parse_number("2") == BigRational(2));
    CHECK(parse_number(".5") == BigRational(1, 2));
    CHECK_THROWS_AS(parse_number("1e"), error);
    CHECK_THROWS_AS(parse_number("1.2.3"), error);
}

TEST_CASE("pow_int including negative exponents") {
    CHECK(pow_int(BigRational(2, 3), 3) == BigRational(8, 27));
    CHECK(pow_int(BigRational(2, 3), -2) == BigRational(9, 4));
    CHECK(pow_int(BigRational(5), 0) == 1);
    CHECK_THROWS_AS(pow_int(BigRational(0), -1), error);
}

TEST_CASE("floor and ceiling with negative values") {
    CHECK(rat_floor(BigRational(7, 2)) == 3);
    CHECK(rat_floor(BigRational(-7, 2)) == -4);
    CHECK(rat_ceil(BigRational(7, 2)) == 4);
    CHECK(rat_ceil(BigRational(-7, 2)) == -3);
    CHECK(rat_floor(BigRational(-6, 2)) == -3);
}

TEST_CASE("rat_to_string omits unit denominators") {
    CHECK(rat_to_string(BigRational(24, 35)) == "24/35");
    CHECK(rat_to_string(BigRational(-5)) == "-5");
    CHECK(rat_to_string(BigRational(0)) == "0");
}

TEST_CASE("dec_exponent brackets powers of ten") {
    CHECK(dec_exponent(BigRational(1)) == 0);
    CHECK(dec_exponent(BigRational(1, 10)) == -1);
    CHECK(dec_exponent(BigRational(10)) == 1);
    CHECK(dec_exponent(BigRational(99)) == 1);
    CHECK(dec_exponent(BigRational(1, 2160)) == -4);
}

TEST_CASE("decimal_string: 12 significant digits, fixed and scientific") {
    CHECK(decimal_string(BigRational(24, 35)) == "0.685714285714");
    CHECK(decimal_string(BigRational(1, 2160)) == "0.000462962962963");
    CHECK(decimal_string(BigRational(2, 3), 3) == "0.667");
    CHECK(decimal_string(BigRational(1, 2)) == "0.5");
    CHECK(decimal_string(BigRational(123456), 4) == "123500");
    CHECK(decimal_string(BigRational(0)) == "0");
    CHECK(decimal_string(pow10_signed(20), 4) == "1e20");
    CHECK(decimal_string(BigRational(-17, 4), 6) == "-4.25");
}

TEST_CASE("decimal_string outward rounding modes for enclosure endpoints") {
    CHECK(decimal_string(BigRational(2, 3), 3, Round::down) == "0.666");
    CHECK(decimal_string(BigRational(2, 3), 3, Round::up) == "0.667");
    CHECK(decimal_string(BigRational(-2, 3), 3, Round::down) == "-0.667");
    CHECK(decimal_string(BigRational(-2, 3), 3, Round::up) == "-0.666");
    CHECK(decimal_string(BigRational(1, 4), 2, Round::down) == "0.25");
    CHECK(decimal_string(BigRational(1, 4), 2, Round::up) == "0.25");
}
