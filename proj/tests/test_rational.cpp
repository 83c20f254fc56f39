#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crown/rational.hpp"

using namespace crown;

TEST_CASE("parse accepts integers, fractions and decimals") {
    CHECK(parseRat("3/4") == Rat(3, 4));
    CHECK(parseRat("7") == Rat(7));
    CHECK(parseRat("-7") == Rat(-7));
    CHECK(parseRat("1.25") == Rat(5, 4));
    CHECK(parseRat("-0.5") == Rat(-1, 2));
    CHECK(parseRat("0") == Rat(0));
    CHECK(parseRat("-3/6") == Rat(-1, 2));
}

TEST_CASE("parse rejects garbage") {
    CHECK_THROWS(parseRat(""));
    CHECK_THROWS(parseRat("a"));
    CHECK_THROWS(parseRat("1/0"));
    CHECK_THROWS(parseRat("1/2/3"));
    CHECK_THROWS(parseRat("1..5"));
}

TEST_CASE("format is canonical p/q") {
    CHECK(formatRat(Rat(3, 4)) == "3/4");
    CHECK(formatRat(Rat(8, 4)) == "2");
    CHECK(formatRat(Rat(-1, 2)) == "-1/2");
    CHECK(formatRat(Rat(0)) == "0");
}

TEST_CASE("format/parse round trip") {
    for (int p = -12; p <= 12; ++p)
        for (int q = 1; q <= 9; ++q) {
            Rat r(p, q);
            CHECK(parseRat(formatRat(r)) == r);
        }
}

TEST_CASE("decimal rendering is exact or refused") {
    CHECK(formatRatDecimal(Rat(5, 4)) == "1.25");
    CHECK(formatRatDecimal(Rat(3)) == "3");
    CHECK(formatRatDecimal(Rat(-1, 2)) == "-0.5");
    CHECK(formatRatDecimal(Rat(1, 10)) == "0.1");
    CHECK_THROWS(formatRatDecimal(Rat(1, 3)));
}
