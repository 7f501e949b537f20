#include <doctest.h>

#include <random>

#include "asmg/laurent.hpp"

using asmg::Exp;
using asmg::LaurentPoly;
using asmg::Rational;

namespace {

LaurentPoly random_poly(std::mt19937& rng, int max_terms = 6) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<std::int64_t> expd(-3, 3);
    std::uniform_int_distribution<long> numd(-5, 5);
    std::uniform_int_distribution<long> dend(1, 4);
    LaurentPoly p(2);
    int k = nterms(rng);
    for (int i = 0; i < k; ++i)
        p.add_term({expd(rng), expd(rng)}, Rational(numd(rng), dend(rng)));
    return p;
}

}  // namespace

TEST_CASE("basic identities") {
    LaurentPoly z = LaurentPoly::mono1(1, Rational(1));
    LaurentPoly one = LaurentPoly::constant(1, Rational(1));
    // (z + 1) + (-z) = 1
    CHECK((z + one) - z == one);
    // p + 0 = p
    LaurentPoly zero(1);
    CHECK(z + zero == z);
    // (1+z)(1+z) = 1 + 2z + z^2
    LaurentPoly s = one + z;
    LaurentPoly sq = s * s;
    CHECK(sq.coeff({0, 0}) == Rational(1));
    CHECK(sq.coeff({1, 0}) == Rational(2));
    CHECK(sq.coeff({2, 0}) == Rational(1));
    // p * 1 = p
    CHECK(sq * one == sq);
}

TEST_CASE("ring axioms on random instances") {
    std::mt19937 rng(99);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("derivatives") {
    // D^{(1,0)} z1^2 z2 = 2 z1 z2
    LaurentPoly p = LaurentPoly::monomial(2, {2, 1}, Rational(1));
    LaurentPoly d = p.derivative({1, 0});
    CHECK(d.coeff({1, 1}) == Rational(2));
    CHECK(d.term_count() == 1);
    // D^{(0,0)} p = p
    CHECK(p.derivative({0, 0}) == p);
    // Mixed partials commute.
    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
        LaurentPoly q = random_poly(rng);
        CHECK(q.derivative({1, 0}).derivative({0, 1}) ==
              q.derivative({0, 1}).derivative({1, 0}));
    }
    // Negative exponents differentiate formally.
    LaurentPoly inv = LaurentPoly::monomial(2, {-1, 0}, Rational(1));
    CHECK(inv.derivative({1, 0}).coeff({-2, 0}) == Rational(-1));
}

TEST_CASE("lift and scale") {
    LaurentPoly h(1);
    h.add_term({-1, 0}, Rational(1, 2));
    h.add_term({1, 0}, Rational(1, 2));
    LaurentPoly v2 = h.lift(2);
    CHECK(v2.coeff({0, -1}) == Rational(1, 2));
    CHECK(v2.coeff({0, 1}) == Rational(1, 2));
    LaurentPoly s = v2.scale_vars(Rational(1), Rational(-1));
    CHECK(s.coeff({0, 1}) == Rational(-1, 2));
}

TEST_CASE("rendering") {
    LaurentPoly p(2);
    p.add_term({1, -2}, Rational(3, 4));
    CHECK(p.str() == "3/4 * z1^1 * z2^-2");
    CHECK(LaurentPoly(2).str() == "0");
}
