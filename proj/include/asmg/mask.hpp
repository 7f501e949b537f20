#pragma once

#include <string>

#include "asmg/laurent.hpp"

namespace asmg {

/// Diagonal integer dilation diag(m1, m2); univariate schemes use m1 only.
struct Dilation {
    long m1 = 2;
    long m2 = 2;

    long det() const { return m1 * m2; }
    bool operator==(const Dilation& o) const { return m1 == o.m1 && m2 == o.m2; }
};

enum class MaskFamily { DD1D, AnisoInterp, MinimalInterp, BoxSpline, Approx, External };

std::string family_name(MaskFamily f);

/// A subdivision mask: the symbol polynomial plus its dilation and a
/// family label. Coefficient p(alpha) is the symbol coefficient at z^alpha.
struct Mask {
    LaurentPoly symbol{2};
    Dilation dilation;
    MaskFamily family = MaskFamily::External;
    long n = 0;
    long ell = 0;
    std::string name;

    Rational coeff(std::int64_t a1, std::int64_t a2 = 0) const {
        return symbol.coeff({a1, a2});
    }
    Rational coefficient_sum() const { return symbol.eval_at_one(); }
    std::size_t nnz() const { return symbol.term_count(); }
};

/// Renders the mask as a matrix of exact "num/den" cells. Rows run over
/// the first exponent (the factor-2 axis) ascending, columns over the
/// second exponent ascending, matching the displayed-matrix convention.
std::string mask_to_csv(const Mask& m);

std::string mask_to_json(const Mask& m);
Mask mask_from_json(const std::string& text);

/// Parses a whitespace/row-per-line matrix of rationals into a bivariate
/// polynomial, centering the matrix at the origin (odd dimensions).
LaurentPoly poly_from_matrix_text(const std::string& text);

}  // namespace asmg
