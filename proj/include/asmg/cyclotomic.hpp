#pragma once

#include <vector>

#include "asmg/laurent.hpp"
#include "asmg/rational.hpp"

namespace asmg {

/// e^{-2 pi i num/order}, stored exactly.
struct RootOfUnity {
    long num = 0;
    long order = 1;
};

/// Element of the cyclotomic field Q(zeta_L), zeta_L = e^{-2 pi i / L},
/// represented canonically as a polynomial in zeta_L reduced modulo the
/// L-th cyclotomic polynomial. Gives an exact zero test.
class CycloNum {
public:
    CycloNum() : order_(1), coeffs_{Rational(0)} {}
    CycloNum(long order, std::vector<Rational> coeffs);

    long order() const { return order_; }
    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;  // throws when not rational

    friend bool operator==(const CycloNum& a, const CycloNum& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

    /// Field arithmetic; both operands must live in the same Q(zeta_L).
    friend CycloNum operator+(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b);

private:
    long order_;
    std::vector<Rational> coeffs_;  // degree < deg(Phi_L)
};

/// Monic L-th cyclotomic polynomial, ascending coefficients.
const std::vector<Rational>& cyclotomic_poly(long L);

/// Exact evaluation of p at componentwise roots of unity. Univariate
/// polynomials only use e1.
CycloNum cyclo_eval(const LaurentPoly& p, const RootOfUnity& e1,
                    const RootOfUnity& e2 = {0, 1});

}  // namespace asmg
