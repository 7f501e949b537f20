#include <doctest.h>

#include <random>

#include "asmg/cyclotomic.hpp"

using namespace asmg;

TEST_CASE("cyclotomic polynomials") {
    // Phi_1 = x - 1, Phi_2 = x + 1, Phi_3 = x^2 + x + 1, Phi_6 = x^2 - x + 1
    auto p1 = cyclotomic_poly(1);
    CHECK(p1.size() == 2);
    CHECK(p1[0] == Rational(-1));
    auto p3 = cyclotomic_poly(3);
    CHECK(p3.size() == 3);
    CHECK(p3[1] == Rational(1));
    auto p6 = cyclotomic_poly(6);
    CHECK(p6.size() == 3);
    CHECK(p6[1] == Rational(-1));
    auto p10 = cyclotomic_poly(10);  // x^4 - x^3 + x^2 - x + 1
    CHECK(p10.size() == 5);
    CHECK(p10[3] == Rational(-1));
}

TEST_CASE("1 + z + z^2 vanishes at primitive cube roots") {
    LaurentPoly p(1);
    p.add_term({0, 0}, Rational(1));
    p.add_term({1, 0}, Rational(1));
    p.add_term({2, 0}, Rational(1));
    CHECK(cyclo_eval(p, {1, 3}).is_zero());
    CHECK(cyclo_eval(p, {2, 3}).is_zero());
    CHECK_FALSE(cyclo_eval(p, {0, 3}).is_zero());
    CHECK(cyclo_eval(p, {0, 3}).rational_value() == Rational(3));
}

TEST_CASE("evaluation is a ring homomorphism at root-of-unity points") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<std::int64_t> expd(-4, 4);
    std::uniform_int_distribution<long> numd(-4, 4);
    auto rnd = [&](int terms) {
        LaurentPoly p(2);
        for (int i = 0; i < terms; ++i)
            p.add_term({expd(rng), expd(rng)}, Rational(numd(rng), 3));
        return p;
    };
    for (int i = 0; i < 50; ++i) {
        LaurentPoly a = rnd(4), b = rnd(4);
        RootOfUnity e1{1, 2}, e2{2, 5};
        CHECK(cyclo_eval(a * b, e1, e2) == cyclo_eval(a, e1, e2) * cyclo_eval(b, e1, e2));
        CHECK(cyclo_eval(a + b, e1, e2) == cyclo_eval(a, e1, e2) + cyclo_eval(b, e1, e2));
        CHECK(cyclo_eval(a - a, e1, e2).is_zero());
    }
}

TEST_CASE("negative exponents reduce correctly") {
    // z^-1 at z = e^{-2 pi i /4}: z^-1 = z^3 in the order-4 field.
    LaurentPoly p(1);
    p.add_term({-1, 0}, Rational(1));
    LaurentPoly q(1);
    q.add_term({3, 0}, Rational(1));
    CHECK(cyclo_eval(p, {1, 4}) == cyclo_eval(q, {1, 4}));
}
