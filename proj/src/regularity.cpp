#include "asmg/regularity.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "asmg/analysis.hpp"

namespace asmg {

namespace {

long rational_floor(const Rational& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.raw().get_num().get_mpz_t(), r.raw().get_den().get_mpz_t());
    if (!q.fits_slong_p()) throw std::domain_error("rational_floor: out of range");
    return q.get_si();
}

long rational_ceil(const Rational& r) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.raw().get_num().get_mpz_t(), r.raw().get_den().get_mpz_t());
    if (!q.fits_slong_p()) throw std::domain_error("rational_ceil: out of range");
    return q.get_si();
}

}  // namespace

std::vector<Exp> compute_omega(const Mask& mask, OmegaDiagnostics* diag, std::size_t samples) {
    if (mask.symbol.is_zero()) throw std::invalid_argument("compute_omega: zero mask");
    if (mask.symbol.arity() != 2) throw std::invalid_argument("compute_omega: bivariate only");
    const long m[2] = {mask.dilation.m1, mask.dilation.m2};
    std::vector<Exp> supp;
    for (const auto& [e, c] : mask.symbol.terms()) {
        (void)c;
        supp.push_back(e);
    }
    Exp slo, shi;
    mask.symbol.support_box(slo, shi);

    // Candidate cells from the attractor bounding box sum_j M^-j supp.
    long clo[2], chi[2];
    for (int k = 0; k < 2; ++k) {
        clo[k] = rational_floor(Rational(slo[k], m[k] - 1 > 0 ? m[k] - 1 : 1));
        chi[k] = rational_ceil(Rational(shi[k], m[k] - 1 > 0 ? m[k] - 1 : 1)) - 1;
        if (chi[k] < clo[k]) chi[k] = clo[k];
    }
    std::set<Exp> cells;
    for (long a = clo[0]; a <= chi[0]; ++a)
        for (long b = clo[1]; b <= chi[1]; ++b) cells.insert({a, b});

    // Shrink to the cell-level fixed point of K = U_alpha M^-1 (alpha + K):
    // keep a cell only if its image under M meets alpha + (surviving cell).
    bool changed = true;
    while (changed) {
        changed = false;
        std::set<Exp> keep;
        for (const auto& w : cells) {
            bool ok = false;
            for (const auto& a : supp) {
                for (const auto& wp : cells) {
                    bool hit = true;
                    for (int k = 0; k < 2; ++k) {
                        const long lo = a[k] + wp[k], hi = a[k] + wp[k] + 1;
                        if (m[k] * w[k] > hi || m[k] * (w[k] + 1) < lo) {
                            hit = false;
                            break;
                        }
                    }
                    if (hit) {
                        ok = true;
                        break;
                    }
                }
                if (ok) break;
            }
            if (ok) keep.insert(w);
        }
        if (keep.size() != cells.size()) {
            cells = std::move(keep);
            changed = true;
        }
    }
    if (diag) diag->fixed_point_cells = cells.size();

    // Certify cells by attractor points: random digit expansions plus the
    // exact constant-digit points alpha / (M - 1).
    const int D = 30;
    double eta[2];
    for (int k = 0; k < 2; ++k) {
        const double reach =
            std::max(std::abs(static_cast<double>(slo[k])), std::abs(static_cast<double>(shi[k]))) /
            (m[k] - 1 > 0 ? m[k] - 1 : 1);
        eta[k] = std::pow(static_cast<double>(m[k]), -D) * (reach + 1.0) + 1e-12;
    }
    std::set<Exp> certified;
    std::mt19937_64 rng(0xC0FFEE5EEDULL);
    std::uniform_int_distribution<std::size_t> pick(0, supp.size() - 1);
    std::vector<std::array<double, 2>> boundary_samples;
    for (std::size_t s = 0; s < samples; ++s) {
        double x[2] = {0, 0};
        for (int j = 0; j < D; ++j) {
            const Exp& a = supp[pick(rng)];
            for (int k = 0; k < 2; ++k) x[k] = (x[k] + static_cast<double>(a[k])) / m[k];
        }
        Exp cell{static_cast<long>(std::floor(x[0])), static_cast<long>(std::floor(x[1]))};
        bool interior = true;
        for (int k = 0; k < 2; ++k) {
            const double f = x[k] - std::floor(x[k]);
            if (f <= eta[k] || f >= 1.0 - eta[k]) interior = false;
        }
        if (interior)
            certified.insert(cell);
        else
            boundary_samples.push_back({x[0], x[1]});
    }
    // Constant-digit fixed points, handled exactly.
    std::vector<std::array<Rational, 2>> exact_pts;
    for (const auto& a : supp)
        exact_pts.push_back({Rational(a[0], m[0] - 1 > 0 ? m[0] - 1 : 1),
                             Rational(a[1], m[1] - 1 > 0 ? m[1] - 1 : 1)});
    for (const auto& p : exact_pts) {
        Exp cell{rational_floor(p[0]), rational_floor(p[1])};
        const bool int0 = p[0] == Rational(rational_floor(p[0]));
        const bool int1 = p[1] == Rational(rational_floor(p[1]));
        if (!int0 && !int1) certified.insert(cell);
    }
    if (diag) diag->certified = certified.size();

    // Cover leftovers: a sample on a cell boundary is fine when a certified
    // closed cell contains it; otherwise its floor cell joins the set.
    std::set<Exp> omega = certified;
    std::size_t floor_added = 0;
    auto covered = [&](double x0, double x1) {
        for (const auto& w : omega) {
            if (x0 >= w[0] - eta[0] && x0 <= w[0] + 1 + eta[0] && x1 >= w[1] - eta[1] &&
                x1 <= w[1] + 1 + eta[1])
                return true;
        }
        return false;
    };
    for (const auto& p : exact_pts) {
        bool inside = false;
        for (const auto& w : omega) {
            if (p[0] >= Rational(w[0]) && p[0] <= Rational(w[0] + 1) && p[1] >= Rational(w[1]) &&
                p[1] <= Rational(w[1] + 1)) {
                inside = true;
                break;
            }
        }
        if (!inside) {
            omega.insert({rational_floor(p[0]), rational_floor(p[1])});
            ++floor_added;
        }
    }
    for (const auto& b : boundary_samples) {
        if (!covered(b[0], b[1])) {
            omega.insert({static_cast<long>(std::floor(b[0])), static_cast<long>(std::floor(b[1]))});
            ++floor_added;
        }
    }
    if (diag) diag->floor_added = floor_added;

    // Closure: every beta in omega and coset gamma must find all alpha with
    // p(M alpha - beta + gamma) != 0 inside omega, so the transition
    // matrices represent the full operator.
    std::size_t closure_added = 0;
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Exp> add;
        for (const auto& beta : omega) {
            for (long g1 = 0; g1 < m[0]; ++g1) {
                for (long g2 = 0; g2 < m[1]; ++g2) {
                    for (const auto& s : supp) {
                        const long t1 = s[0] + beta[0] - g1;
                        const long t2 = s[1] + beta[1] - g2;
                        if (t1 % m[0] || t2 % m[1]) continue;
                        Exp alpha{t1 / m[0], t2 / m[1]};
                        if (!omega.count(alpha)) add.push_back(alpha);
                    }
                }
            }
        }
        for (const auto& a : add)
            if (omega.insert(a).second) {
                ++closure_added;
                grew = true;
            }
    }
    if (diag) diag->closure_added = closure_added;

    return std::vector<Exp>(omega.begin(), omega.end());
}

TransitionSet transition_matrices(const Mask& mask, const std::vector<Exp>& omega) {
    TransitionSet ts;
    ts.omega = omega;
    ts.gamma = coset_reps(mask.dilation);
    const std::size_t N = omega.size();
    const long m1 = mask.dilation.m1, m2 = mask.dilation.m2;
    for (const auto& g : ts.gamma) {
        RatMat T(N, N);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                T.at(i, j) = mask.symbol.coeff({m1 * omega[i][0] - omega[j][0] + g[0],
                                                m2 * omega[i][1] - omega[j][1] + g[1]});
        ts.matrices.push_back(std::move(T));
    }
    return ts;
}

namespace {

std::size_t omega_index(const std::vector<Exp>& omega, const Exp& w) {
    auto it = std::lower_bound(omega.begin(), omega.end(), w);
    if (it == omega.end() || *it != w)
        throw std::domain_error("invariant_subspaces: required cell missing from omega");
    return static_cast<std::size_t>(it - omega.begin());
}

SpanBasis close_under(std::vector<RatVec> init, const std::vector<RatMat>& mats,
                      std::size_t ambient) {
    SpanBasis basis(ambient);
    for (auto& v : init) basis.insert(std::move(v));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<RatVec> snapshot = basis.echelon_rows();
        for (const auto& row : snapshot)
            for (const auto& T : mats)
                if (basis.insert(T.apply(row))) grew = true;
    }
    return basis;
}

}  // namespace

SubspaceBases invariant_subspaces(const TransitionSet& ts, const Mask& mask) {
    const std::size_t N = ts.omega.size();
    if (!check_interpolatory(mask))
        throw std::domain_error("invariant_subspaces: mask must be interpolatory");

    // phi(alpha) = delta_0 makes the value vector of T_0 at eigenvalue 1 an
    // indicator of the origin cell.
    RatVec v0(N, Rational(0));
    v0[omega_index(ts.omega, {0, 0})] = Rational(1);
    const RatMat& T0 = ts.matrices[0];
    if (T0.apply(v0) != v0)
        throw std::domain_error("invariant_subspaces: T_0 lacks the unit eigenvector");

    std::vector<RatVec> u_init;
    for (std::size_t g = 1; g < ts.matrices.size(); ++g) {
        RatVec d = ts.matrices[g].apply(v0);
        for (std::size_t i = 0; i < N; ++i) d[i] -= v0[i];
        u_init.push_back(std::move(d));
    }

    auto difference_seed = [&](const Exp& shift) {
        // v(shift) - v(0): indicators of -shift and the origin.
        RatVec s(N, Rational(0));
        s[omega_index(ts.omega, {-shift[0], -shift[1]})] = Rational(1);
        s[omega_index(ts.omega, {0, 0})] -= Rational(1);
        return s;
    };

    SubspaceBases out{
        close_under(std::move(u_init), ts.matrices, N),
        close_under({difference_seed({1, 0})}, ts.matrices, N),
        close_under({difference_seed({0, 1})}, ts.matrices, N),
    };
    return out;
}

std::vector<RatMat> restrict_to_span(const std::vector<RatMat>& mats, const SpanBasis& basis) {
    const auto& rows = basis.echelon_rows();
    const std::size_t d = rows.size();
    std::vector<RatMat> out;
    for (const auto& T : mats) {
        RatMat R(d, d);
        for (std::size_t j = 0; j < d; ++j) {
            RatVec y = T.apply(rows[j]);
            // Coordinates against the reduced echelon rows via pivot readout.
            for (std::size_t i = 0; i < d; ++i) {
                std::size_t piv = 0;
                while (piv < y.size() && rows[i][piv].is_zero()) ++piv;
                // pivot column of row i is its first nonzero (normalized 1)
                Rational c = y[piv];
                if (!c.is_zero())
                    for (std::size_t k = 0; k < y.size(); ++k) y[k] -= c * rows[i][k];
                R.at(i, j) = c;
            }
            for (const auto& r : y)
                if (!r.is_zero())
                    throw std::domain_error("restrict_to_span: subspace not invariant");
        }
        if (std::find(out.begin(), out.end(), R) == out.end()) out.push_back(std::move(R));
    }
    return out;
}

namespace {

using Eigen::MatrixXd;

MatrixXd to_eigen(const RatMat& A) {
    MatrixXd B(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) B(i, j) = A.at(i, j).to_double();
    return B;
}

double spectral_radius(const MatrixXd& A) {
    Eigen::EigenSolver<MatrixXd> es(A, false);
    double r = 0;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
        r = std::max(r, std::abs(es.eigenvalues()[i]));
    return r;
}

double norm_1(const MatrixXd& A) {
    double m = 0;
    for (int j = 0; j < A.cols(); ++j) m = std::max(m, A.col(j).cwiseAbs().sum());
    return m;
}

double norm_inf(const MatrixXd& A) {
    double m = 0;
    for (int i = 0; i < A.rows(); ++i) m = std::max(m, A.row(i).cwiseAbs().sum());
    return m;
}

double norm_fro(const MatrixXd& A) { return A.norm(); }

double norm_spec(const MatrixXd& A) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(A.transpose() * A, Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

constexpr int kNorms = 3;  // 1, inf, Frobenius (cheap, submultiplicative)

std::array<double, kNorms> cheap_norms(const MatrixXd& A) {
    return {norm_1(A), norm_inf(A), norm_fro(A)};
}

struct DfsState {
    const std::vector<MatrixXd>* mats;
    std::array<double, kNorms> bmax;      // max single-matrix norm per family
    std::vector<std::array<double, kNorms>> cmax;  // per level
    std::vector<double> cmax_spec;                  // exact spectral max per level
    double lower;
    long nodes_left;
    int target;
};

bool dfs(DfsState& st, const MatrixXd& P, const std::array<double, kNorms>& pn, int d) {
    if (st.nodes_left-- <= 0) return false;
    if (d == st.target) {
        for (int v = 0; v < kNorms; ++v)
            st.cmax[d][v] = std::max(st.cmax[d][v], pn[v]);
        // Exact spectral-norm maximum, evaluated only when the Frobenius
        // bound says it could exceed the running maximum.
        if (pn[2] > st.cmax_spec[d]) {
            double s = norm_spec(P);
            st.cmax_spec[d] = std::max(st.cmax_spec[d], s);
        }
        // Lower bound candidates: products whose norms rival the current
        // lower bound estimate.
        double best = std::min({pn[0], pn[1], pn[2]});
        if (std::pow(best, 1.0 / d) > st.lower * 0.999)
            st.lower = std::max(st.lower, std::pow(spectral_radius(P), 1.0 / d));
        return true;
    }
    for (const auto& A : *st.mats) {
        MatrixXd Q = P * A;
        auto qn = cheap_norms(Q);
        if (d + 1 <= 2) st.lower = std::max(st.lower, std::pow(spectral_radius(Q), 1.0 / (d + 1)));
        bool useful = false;
        const int k = st.target;
        for (int v = 0; v < kNorms && !useful; ++v)
            if (qn[v] * std::pow(st.bmax[v], k - d - 1) > st.cmax[k][v]) useful = true;
        if (qn[2] * std::pow(st.bmax[2], k - d - 1) > st.cmax_spec[k]) useful = true;
        if (d + 1 == k) useful = true;  // leaves are always recorded
        if (useful) {
            if (!dfs(st, Q, qn, d + 1)) return false;
        }
    }
    return true;
}

struct PassResult {
    double lower = 0;
    double upper = std::numeric_limits<double>::infinity();
    int completed = 0;
};

PassResult jsr_pass(const std::vector<MatrixXd>& mats, int depth, long budget, double lower0) {
    DfsState st;
    st.mats = &mats;
    st.bmax = {0, 0, 0};
    for (const auto& A : mats) {
        auto n = cheap_norms(A);
        for (int v = 0; v < kNorms; ++v) st.bmax[v] = std::max(st.bmax[v], n[v]);
    }
    st.lower = lower0;
    for (const auto& A : mats) st.lower = std::max(st.lower, spectral_radius(A));
    st.nodes_left = budget;

    PassResult res;
    st.cmax.assign(depth + 1, {0, 0, 0});
    st.cmax_spec.assign(depth + 1, 0);
    MatrixXd I = MatrixXd::Identity(mats[0].rows(), mats[0].cols());
    for (int k = 1; k <= depth; ++k) {
        st.target = k;
        for (int v = 0; v < kNorms; ++v) st.cmax[k][v] = std::pow(st.lower, k);
        st.cmax_spec[k] = std::pow(st.lower, k);
        std::array<double, kNorms> in = cheap_norms(I);
        if (!dfs(st, I, in, 0)) break;
        res.completed = k;
        double up_k = std::pow(st.cmax_spec[k], 1.0 / k);
        for (int v = 0; v < kNorms; ++v) up_k = std::min(up_k, std::pow(st.cmax[k][v], 1.0 / k));
        res.upper = std::min(res.upper, up_k);
    }
    res.lower = st.lower;
    return res;
}

/// Ellipsoidal balancing: P solving P = I + sum_i A_i^T P A_i / c^2 gives
/// a norm in which every A_i has norm at most c, when the iteration
/// converges. The transformed set keeps all spectra.
std::vector<MatrixXd> balance(const std::vector<MatrixXd>& mats, double lower) {
    const int n = static_cast<int>(mats[0].rows());
    double c = std::max(lower, 1e-8) * 1.001;
    for (int attempt = 0; attempt < 10; ++attempt) {
        MatrixXd P = MatrixXd::Identity(n, n);
        bool diverged = false;
        for (int it = 0; it < 120; ++it) {
            MatrixXd next = MatrixXd::Identity(n, n);
            for (const auto& A : mats) next += A.transpose() * P * A / (c * c);
            if (!next.allFinite() || next.norm() > 1e13) {
                diverged = true;
                break;
            }
            if ((next - P).norm() <= 1e-9 * P.norm()) {
                P = next;
                break;
            }
            P = next;
        }
        if (!diverged) {
            Eigen::LLT<MatrixXd> llt(P + 1e-12 * MatrixXd::Identity(n, n));
            if (llt.info() == Eigen::Success) {
                MatrixXd L = llt.matrixL();
                std::vector<MatrixXd> out;
                out.reserve(mats.size());
                for (const auto& A : mats)
                    out.push_back(L.transpose() * A *
                                  L.transpose().triangularView<Eigen::Upper>().solve(
                                      MatrixXd::Identity(n, n)));
                return out;
            }
        }
        c *= 1.3;
    }
    return mats;  // balancing failed; caller falls back to the raw set
}

}  // namespace

JsrEstimate jsr_bounds(const std::vector<RatMat>& mats_in, const JsrOptions& opts) {
    if (mats_in.empty()) throw std::invalid_argument("jsr_bounds: empty matrix set");
    const std::size_t n = mats_in[0].rows();
    for (const auto& A : mats_in)
        if (A.rows() != n || A.cols() != n)
            throw std::invalid_argument("jsr_bounds: dimension mismatch");
    if (opts.depth < 1) throw std::invalid_argument("jsr_bounds: depth must be >= 1");

    // Exact duplicates collapse before any floating conversion.
    std::vector<RatMat> uniq;
    for (const auto& A : mats_in)
        if (std::find(uniq.begin(), uniq.end(), A) == uniq.end()) uniq.push_back(A);

    JsrEstimate est;
    est.depth = opts.depth;

    if (n == 0) {
        est.completed_depth = opts.depth;
        return est;
    }

    std::vector<MatrixXd> mats;
    for (const auto& A : uniq) mats.push_back(to_eigen(A));

    if (mats.size() == 1) {
        // One matrix: the limit equals its spectral radius.
        double r = spectral_radius(mats[0]);
        est.lower = est.upper = r;
        est.completed_depth = opts.depth;
        return est;
    }

    PassResult raw = jsr_pass(mats, opts.depth, opts.node_budget, 0.0);
    est.lower = raw.lower;
    est.upper = std::max(raw.upper, raw.lower);
    est.completed_depth = raw.completed;

    if (est.upper - est.lower > opts.gap_tol) {
        std::vector<MatrixXd> bal = balance(mats, est.lower);
        PassResult ref = jsr_pass(bal, opts.depth, opts.node_budget, est.lower);
        est.refined = true;
        est.lower = std::max(est.lower, ref.lower);
        est.upper = std::max(std::min(est.upper, ref.upper), est.lower);
        est.completed_depth = std::max(est.completed_depth, ref.completed);
    }
    return est;
}

HolderReport holder_exponent(const Mask& mask, int depth) {
    if (mask.dilation.m1 != 2)
        throw std::invalid_argument("holder_exponent: dilation must be diag(2, m)");
    HolderReport rep;
    rep.omega = compute_omega(mask);
    TransitionSet ts = transition_matrices(mask, rep.omega);
    SubspaceBases bases = invariant_subspaces(ts, mask);
    rep.dim_u = bases.U.dim();
    rep.dim_u1 = bases.U1.dim();
    rep.dim_u2 = bases.U2.dim();

    JsrOptions opts;
    opts.depth = depth;
    rep.rho_v = jsr_bounds(restrict_to_span(ts.matrices, bases.U), opts);
    rep.rho_v1 = jsr_bounds(restrict_to_span(ts.matrices, bases.U1), opts);
    rep.rho_v2 = jsr_bounds(restrict_to_span(ts.matrices, bases.U2), opts);

    if (rep.rho_v.upper < 1.0)
        rep.continuity = 1;
    else if (rep.rho_v.lower >= 1.0)
        rep.continuity = -1;
    else
        rep.continuity = 0;

    auto log_base = [](double base_inv, double x) {
        return std::log(std::max(x, 1e-300)) / std::log(1.0 / base_inv);
    };
    const double m = static_cast<double>(mask.dilation.m2);
    rep.alpha_lo = std::min(log_base(2.0, rep.rho_v1.upper), log_base(m, rep.rho_v2.upper));
    rep.alpha_hi = std::min(log_base(2.0, rep.rho_v1.lower), log_base(m, rep.rho_v2.lower));
    return rep;
}

}  // namespace asmg
