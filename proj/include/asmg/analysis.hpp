#pragma once

#include <map>
#include <vector>

#include "asmg/cyclotomic.hpp"
#include "asmg/mask.hpp"

namespace asmg {

/// Summary of the algebraic properties of a scheme. Degrees of -1 mean
/// the corresponding property fails already for constants.
struct SchemeReport {
    bool is_interpolatory = false;
    bool symmetric = false;
    long generation_degree = -1;
    long reproduction_degree = -1;
    Exp support_lo{0, 0}, support_hi{0, 0};
    std::size_t nnz = 0;
};

/// Coset representatives of Z^2 / M Z^2 in lexicographic order.
std::vector<Exp> coset_reps(const Dilation& M);

/// Exact coefficient check p(0)=1, p(M alpha)=0; also evaluates the
/// root-of-unity sum criterion and asserts the two routes agree.
bool check_interpolatory(const Mask& mask);

/// p(a1,a2) = p(+-a1,+-a2) for all coefficients.
bool check_symmetric(const Mask& mask);

/// Largest n with vanishing derivatives up to order n at every nontrivial
/// point of E_M; -1 when the order-0 condition already fails.
long generation_degree(const Mask& mask, long cap = 64);

/// Largest n satisfying the tau = 0 reproduction conditions; requires the
/// mask to be symmetric or interpolatory.
long reproduction_degree(const Mask& mask, long cap = 64);

/// Exact coset-moment equality for all monomials of total degree < order.
bool check_sum_rules(const Mask& mask, long order);

SchemeReport analyze(const Mask& mask);

/// Finitely supported exact sequence on Z^2.
using Sequence = std::map<Exp, Rational>;

/// One or more subdivision steps applied to exact data.
Sequence subdivide(const Mask& mask, const Sequence& data, int steps);

/// Output indices of one subdivision step whose stencil footprint lies
/// entirely inside the data window (no boundary truncation).
std::vector<Exp> subdivision_interior(const Mask& mask, const Sequence& data);

}  // namespace asmg
