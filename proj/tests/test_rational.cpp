#include <doctest.h>

#include <random>

#include "asmg/rational.hpp"

using asmg::Rational;

TEST_CASE("canonical form and arithmetic") {
    Rational a(6, -4);
    CHECK(a.str() == "-3/2");
    CHECK(Rational(2, 4) + Rational(1, 4) == Rational(3, 4));
    CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(7, 3) / Rational(7, 3) == Rational(1));
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational(1, 2) / Rational(0));
}

TEST_CASE("parse/render round trip") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> num(-10000, 10000);
    std::uniform_int_distribution<long> den(1, 9999);
    for (int i = 0; i < 500; ++i) {
        Rational r(num(rng), den(rng));
        CHECK(Rational::parse(r.str()) == r);
    }
    CHECK(Rational::parse("-241/6912") == Rational(-241, 6912));
    CHECK(Rational::parse("20809/93312").to_double() ==
          doctest::Approx(20809.0 / 93312.0));
}

TEST_CASE("pochhammer, factorial, binomial") {
    CHECK(asmg::factorial(5) == Rational(120));
    CHECK(asmg::binomial(5, 2) == Rational(10));
    CHECK(asmg::binomial(3, 5) == Rational(0));
    // (-1/2)_2 = (-1/2)(1/2)
    CHECK(asmg::pochhammer(Rational(-1, 2), 2) == Rational(-1, 4));
    // (-3/2)_4 = (-3/2)(-1/2)(1/2)(3/2) = 9/16
    CHECK(asmg::pochhammer(Rational(-3, 2), 4) == Rational(9, 16));
    CHECK(asmg::pochhammer(Rational(7), 0) == Rational(1));
}

TEST_CASE("powers") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(5).pow(0) == Rational(1));
}
