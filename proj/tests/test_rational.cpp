#include <doctest.h>

#include <random>
#include <stdexcept>

#include "bprimes/rational.hpp"

using bprimes::Rational;

TEST_CASE("rationals normalize on construction") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(6, -4).denominator() == 2);
    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK(Rational(10, 5).to_string() == "2");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse") {
    CHECK(Rational::parse("4/47") == Rational(4, 47));
    CHECK(Rational::parse("-3/11") == Rational(-3, 11));
    CHECK(Rational::parse("12/8").to_string() == "3/2");
    CHECK(Rational::parse("5") == Rational(5));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("frac_part examples") {
    CHECK(bprimes::frac_part(Rational(-4, 3)) == Rational(2, 3));
    CHECK(bprimes::frac_part(Rational(5)) == Rational(0));
    CHECK(bprimes::frac_part(Rational(7, 11)) == Rational(7, 11));
}

TEST_CASE("frac_part plus floor recovers the value") {
    std::mt19937_64 rng(20180101);
    std::uniform_int_distribution<std::int64_t> num(-100000, 100000), den(1, 5000);
    for (int i = 0; i < 2000; ++i) {
        const Rational q(num(rng), den(rng));
        const Rational f = bprimes::frac_part(q);
        CHECK(f >= Rational(0));
        CHECK(f < Rational(1));
        CHECK(f + Rational(q.floor(), mpz_class(1)) == q);
    }
}

TEST_CASE("decimal rendering rounds half away from zero") {
    CHECK(Rational(8, 13).to_decimal(4) == "0.6154");
    CHECK(Rational(50, 79).to_decimal(4) == "0.6329");
    CHECK(Rational(1, 8).to_decimal(2) == "0.13");
    CHECK(Rational(-1, 8).to_decimal(2) == "-0.13");
    CHECK(Rational(3).to_decimal(1) == "3.0");
}

TEST_CASE("ordering is by value") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) == Rational(1, 2));
}
