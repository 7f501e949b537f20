#pragma once

#include "asmg/mask.hpp"

namespace asmg {

/// Univariate 2n-point interpolatory symbol of dilation m (closed form).
Mask dd_symbol(long m, long n);

/// Bivariate interpolatory symbol for M = diag(2, m), m odd >= 3, built
/// from univariate factors of dilations 2 and m.
Mask aniso_interp_symbol(const Dilation& M, long n);

/// Same mask constructed independently: fixed support diamond,
/// interpolatory conditions, and one exact moment system per coset.
Mask minimal_interp_mask(const Dilation& M, long n);

/// Four-directional box-spline symbol, dilation fixed at diag(2,3).
Mask box_spline_symbol(long n);

/// Approximating symbol of order (n, ell), dilation diag(2,3); the
/// correction coefficients are solved exactly level by level.
Mask approx_symbol(long n, long ell);

/// Reference transfer masks with dilation diag(2,2): bilinear "P1",
/// bicubic B-spline "P2", tensor 4-point interpolatory "K".
Mask external_mask(const std::string& name);

/// Builds a named mask: family one of dd|interp|minimal|box|approx plus
/// parameters, or an external name (P1|P2|K).
Mask make_mask(const std::string& family, long m, long n, long ell);

/// Univariate Lagrange interpolation value L_beta(eps/m) on the node set
/// {-n+1, ..., n} (test oracle for dd_symbol; direct product formula).
Rational lagrange_weight(long m, long n, long beta, long eps);

}  // namespace asmg
