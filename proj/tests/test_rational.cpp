#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "cik/rational.hpp"
#include "cik/verify.hpp"

using cik::Integer;
using cik::Rational;

TEST_CASE("rationals are canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(2, 4).num() == 1);
    CHECK(Rational(2, 4).den() == 2);
    CHECK(Rational(1, -2).den() == 2);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rendering suppresses unit denominators") {
    CHECK(Rational(12).str() == "12");
    CHECK(Rational(13, 72).str() == "13/72");
    CHECK(Rational(-1, 30).str() == "-1/30");
    CHECK(Rational(0).str() == "0");
}

TEST_CASE("from_string round trips") {
    for (const char* s : {"0", "12", "-7", "13/72", "-1/30", "362880"})
        CHECK(Rational::from_string(s).str() == s);
    CHECK(Rational::from_string("2/4") == Rational(1, 2));
    CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("x/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
}

TEST_CASE("arithmetic and comparison") {
    Rational a(1, 6), b(1, 3);
    CHECK(a + b == Rational(1, 2));
    CHECK(b - a == a);
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(1, 2));
    CHECK(-a == Rational(-1, 6));
    CHECK(a < b);
    CHECK(a.abs() == a);
    CHECK((-a).abs() == a);
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK(cik::pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(cik::pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(cik::pow(Rational(5), 0) == Rational(1));
    CHECK_THROWS_AS(cik::pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("to_double is the nearest double") {
    CHECK(Rational(1, 2).to_double() == 0.5);
    CHECK(Rational(1, 3).to_double() == 1.0 / 3.0);
    CHECK(Rational(2, 3).to_double() == 2.0 / 3.0);
    CHECK(Rational(1, 10).to_double() == 0.1);
    CHECK(Rational(-1, 30).to_double() == -1.0 / 30.0);

    // property: no neighbouring double is closer
    cik::RationalGen gen(0xd0b1eull);
    for (int t = 0; t < 200; ++t) {
        Rational num(gen.next_index(2000001) - 1000000);
        Rational den(gen.next_index(999983) + 1);
        Rational r = num / den;
        double d = r.to_double();
        Rational err = (r - Rational::from_double_exact(d)).abs();
        for (double n : {std::nextafter(d, -1e308), std::nextafter(d, 1e308)}) {
            Rational nerr = (r - Rational::from_double_exact(n)).abs();
            CHECK(err <= nerr);
        }
    }
}
