#pragma once

#include <cstddef>
#include <vector>

#include "asmg/mask.hpp"
#include "asmg/ratmat.hpp"

namespace asmg {

struct OmegaDiagnostics {
    std::size_t fixed_point_cells = 0;
    std::size_t certified = 0;
    std::size_t floor_added = 0;
    std::size_t closure_added = 0;
};

/// Minimal integer cell set whose unit cells cover the attractor of the
/// refinement equation. Cells are certified by exact/sampled attractor
/// points; the set is then closed so the transition matrices capture
/// every nonzero mask entry.
std::vector<Exp> compute_omega(const Mask& mask, OmegaDiagnostics* diag = nullptr,
                               std::size_t samples = 400000);

/// Transition matrices T_gamma[alpha, beta] = p(M alpha - beta + gamma)
/// over omega, indexed by the coset representatives gamma.
struct TransitionSet {
    std::vector<Exp> omega;
    std::vector<Exp> gamma;
    std::vector<RatMat> matrices;
};

TransitionSet transition_matrices(const Mask& mask, const std::vector<Exp>& omega);

/// Difference subspaces: U from the fixed vector of T_0, U1/U2 from the
/// coordinate-direction difference seeds; all closed under every T_gamma.
struct SubspaceBases {
    SpanBasis U;
    SpanBasis U1;
    SpanBasis U2;
};

SubspaceBases invariant_subspaces(const TransitionSet& ts, const Mask& mask);

/// Representations of each T restricted to the span of `basis`; exact,
/// throws when the span is not invariant. Duplicates are removed.
std::vector<RatMat> restrict_to_span(const std::vector<RatMat>& mats, const SpanBasis& basis);

struct JsrEstimate {
    double lower = 0;
    double upper = 0;
    int depth = 0;           // requested product length
    int completed_depth = 0; // product lengths fully enumerated
    bool refined = false;    // ellipsoidal norm pass was used
};

struct JsrOptions {
    int depth = 8;
    long node_budget = 6000000;
    double gap_tol = 1e-3;  // triggers the balanced-norm pass
};

JsrEstimate jsr_bounds(const std::vector<RatMat>& mats, const JsrOptions& opts = {});

struct HolderReport {
    std::vector<Exp> omega;
    std::size_t dim_u = 0, dim_u1 = 0, dim_u2 = 0;
    JsrEstimate rho_v, rho_v1, rho_v2;
    int continuity = 0;  // +1 continuous, -1 discontinuous, 0 inconclusive
    double alpha_lo = 0, alpha_hi = 0;
};

/// Continuity check and Hoelder exponent interval for an interpolatory
/// mask with dilation diag(2, m).
HolderReport holder_exponent(const Mask& mask, int depth = 8);

}  // namespace asmg
