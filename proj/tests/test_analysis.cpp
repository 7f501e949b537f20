#include <doctest.h>

#include "asmg/analysis.hpp"
#include "asmg/schemes.hpp"

using namespace asmg;

namespace {

Mask dirac_mask(const Dilation& M) {
    Mask m;
    m.symbol = LaurentPoly::constant(2, Rational(1));
    m.dilation = M;
    m.name = "dirac";
    return m;
}

}  // namespace

TEST_CASE("interpolation checks") {
    CHECK(check_interpolatory(aniso_interp_symbol({2, 3}, 2)));
    CHECK(check_interpolatory(aniso_interp_symbol({2, 5}, 1)));
    CHECK_FALSE(check_interpolatory(approx_symbol(2, 0)));
    CHECK_FALSE(check_interpolatory(box_spline_symbol(2)));
    CHECK(check_interpolatory(dirac_mask({2, 3})));
    CHECK_FALSE(check_interpolatory(external_mask("P1")));
    CHECK(check_interpolatory(external_mask("K")));
    CHECK(check_interpolatory(dd_symbol(3, 2)));
}

TEST_CASE("generation degrees") {
    CHECK(generation_degree(aniso_interp_symbol({2, 3}, 2)) == 3);
    CHECK(generation_degree(box_spline_symbol(3)) == 5);
    Mask constant6;
    constant6.symbol = LaurentPoly::constant(2, Rational(6));
    constant6.dilation = {2, 3};
    CHECK(generation_degree(constant6) == -1);
    CHECK(generation_degree(external_mask("P1")) == 1);
    CHECK(generation_degree(external_mask("P2")) == 3);
    CHECK(generation_degree(external_mask("K")) == 3);
}

TEST_CASE("reproduction degrees") {
    CHECK(reproduction_degree(aniso_interp_symbol({2, 3}, 3)) == 5);
    CHECK(reproduction_degree(box_spline_symbol(2)) == 1);
    CHECK(reproduction_degree(approx_symbol(3, 1)) == 3);
    CHECK(reproduction_degree(dirac_mask({2, 3})) == -1);
    Mask bad;
    bad.symbol = LaurentPoly::constant(2, Rational(2));
    bad.symbol.add_term({1, 0}, Rational(1));
    bad.dilation = {2, 3};
    CHECK_THROWS(reproduction_degree(bad));
}

TEST_CASE("generation equals reproduction equals 2n-1 for the interpolatory family") {
    for (long m : {3L, 5L}) {
        for (long n = 1; n <= 3; ++n) {
            Mask a = aniso_interp_symbol({2, m}, n);
            CHECK(generation_degree(a) == 2 * n - 1);
            CHECK(reproduction_degree(a) == 2 * n - 1);
        }
    }
}

TEST_CASE("sum rules") {
    Mask a1 = aniso_interp_symbol({2, 3}, 1);
    CHECK(check_sum_rules(a1, 2));
    CHECK_FALSE(check_sum_rules(a1, 3));
    CHECK_FALSE(check_sum_rules(dirac_mask({2, 3}), 1));
    CHECK_THROWS(check_sum_rules(a1, 0));
}

TEST_CASE("sum rules of order k iff generation degree >= k-1") {
    std::vector<Mask> zoo;
    for (long n = 1; n <= 2; ++n) {
        zoo.push_back(aniso_interp_symbol({2, 3}, n));
        zoo.push_back(aniso_interp_symbol({2, 5}, n));
        zoo.push_back(box_spline_symbol(n));
    }
    zoo.push_back(approx_symbol(2, 1));
    zoo.push_back(approx_symbol(3, 1));
    zoo.push_back(external_mask("P1"));
    zoo.push_back(external_mask("K"));
    for (const auto& m : zoo) {
        long g = generation_degree(m);
        for (long k = 1; k <= 6; ++k)
            CHECK(check_sum_rules(m, k) == (g >= k - 1));
    }
}

TEST_CASE("subdivision of a Dirac gives the mask") {
    Mask a = aniso_interp_symbol({2, 3}, 1);
    Sequence dirac{{Exp{0, 0}, Rational(1)}};
    Sequence out = subdivide(a, dirac, 1);
    CHECK(out.size() == a.nnz());
    for (const auto& [e, c] : a.symbol.terms()) CHECK(out.at(e) == c);
}

TEST_CASE("subdivision reproduces constants on the interior") {
    Mask a = aniso_interp_symbol({2, 3}, 1);
    Sequence ones;
    for (std::int64_t i = -4; i <= 4; ++i)
        for (std::int64_t j = -4; j <= 4; ++j) ones[{i, j}] = Rational(1);
    Sequence out = subdivide(a, ones, 1);
    for (const auto& idx : subdivision_interior(a, ones))
        CHECK(out.at(idx) == Rational(1));
}

TEST_CASE("interpolatory masks keep old samples and reproduce linears") {
    Mask a = aniso_interp_symbol({2, 3}, 1);
    Sequence lin;
    for (std::int64_t i = -5; i <= 5; ++i)
        for (std::int64_t j = -5; j <= 5; ++j) lin[{i, j}] = Rational(i);
    Sequence out = subdivide(a, lin, 1);
    for (const auto& idx : subdivision_interior(a, lin)) {
        // Degree-1 reproduction: limit samples pi(M^{-1} alpha), pi(x) = x1.
        CHECK(out.at(idx) == Rational(idx[0], 2));
        // Interpolation: on-grid values survive untouched.
        if (idx[0] % 2 == 0 && idx[1] % 3 == 0) CHECK(out.at(idx) == lin.at({idx[0] / 2, idx[1] / 3}));
    }
}

TEST_CASE("analyze report") {
    SchemeReport r = analyze(approx_symbol(2, 0));
    CHECK_FALSE(r.is_interpolatory);
    CHECK(r.symmetric);
    CHECK(r.generation_degree == 3);
    CHECK(r.reproduction_degree == 1);
    CHECK(r.support_lo == Exp{-2, -4});
    CHECK(r.support_hi == Exp{2, 4});
}
