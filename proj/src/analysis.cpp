#include "asmg/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace asmg {

std::vector<Exp> coset_reps(const Dilation& M) {
    std::vector<Exp> g;
    for (long a = 0; a < M.m1; ++a)
        for (long b = 0; b < M.m2; ++b) g.push_back({a, b});
    return g;
}

namespace {

/// E_M points as exact roots of unity, gamma indexing Gamma.
std::array<RootOfUnity, 2> em_point(const Dilation& M, const Exp& gamma) {
    return {RootOfUnity{gamma[0], M.m1}, RootOfUnity{gamma[1], M.m2}};
}

bool is_univariate(const Mask& mask) { return mask.symbol.arity() == 1; }

}  // namespace

bool check_interpolatory(const Mask& mask) {
    const Dilation& M = mask.dilation;
    const bool uni = is_univariate(mask);
    const long m2 = uni ? 1 : M.m2;
    const long det = M.m1 * m2;

    // Coefficient route: p(0) = 1 and p(M alpha) = 0 for alpha != 0.
    bool coeff_ok = mask.symbol.coeff({0, 0}) == Rational(1);
    if (coeff_ok) {
        for (const auto& [e, c] : mask.symbol.terms()) {
            if (e == Exp{0, 0}) continue;
            if (e[0] % M.m1 == 0 && e[1] % m2 == 0 && !c.is_zero()) {
                coeff_ok = false;
                break;
            }
        }
    }

    // Root-of-unity route: the coefficient of z^e in sum_{xi in E_M}
    // p(xi . z) is c_e * s(e) with s(e) = sum_gamma xi_gamma^e. The
    // identity holds iff that polynomial is the constant det M. s(e) is
    // evaluated exactly in the cyclotomic field (it reduces to a rational).
    auto axis_sum = [](long m, std::int64_t ei) {
        std::vector<Rational> acc(static_cast<std::size_t>(m), Rational(0));
        for (long g = 0; g < m; ++g) {
            std::int64_t k = (((g * ei) % m) + m) % m;
            acc[static_cast<std::size_t>(k)] += Rational(1);
        }
        return CycloNum(m, std::move(acc));
    };
    bool sum_ok = true;
    bool origin_present = false;
    for (const auto& [e, c] : mask.symbol.terms()) {
        CycloNum s1 = axis_sum(M.m1, e[0]);
        CycloNum s2 = axis_sum(m2, e[1]);
        if (!s1.is_rational() || !s2.is_rational())
            throw std::logic_error("check_interpolatory: non-rational coset sum");
        const Rational se = s1.rational_value() * s2.rational_value();
        const Rational want = (e == Exp{0, 0}) ? Rational(det) : Rational(0);
        if (e == Exp{0, 0}) origin_present = true;
        if (c * se != want) {
            sum_ok = false;
            break;
        }
    }
    if (!origin_present) sum_ok = false;

    if (sum_ok != coeff_ok)
        throw std::logic_error("check_interpolatory: criteria disagree");
    return coeff_ok;
}

bool check_symmetric(const Mask& mask) {
    for (const auto& [e, c] : mask.symbol.terms()) {
        if (mask.symbol.coeff({-e[0], e[1]}) != c) return false;
        if (mask.symbol.arity() == 2) {
            if (mask.symbol.coeff({e[0], -e[1]}) != c) return false;
            if (mask.symbol.coeff({-e[0], -e[1]}) != c) return false;
        }
    }
    return true;
}

namespace {

/// All derivative orders mu with |mu| = total (bivariate) or mu = total
/// (univariate).
std::vector<std::array<int, 2>> orders_of(long total, bool univariate) {
    std::vector<std::array<int, 2>> v;
    if (univariate) {
        v.push_back({static_cast<int>(total), 0});
        return v;
    }
    for (long a = 0; a <= total; ++a)
        v.push_back({static_cast<int>(a), static_cast<int>(total - a)});
    return v;
}

bool zero_conditions_hold(const Mask& mask, long level) {
    const Dilation& M = mask.dilation;
    const bool uni = mask.symbol.arity() == 1;
    for (const auto& mu : orders_of(level, uni)) {
        LaurentPoly d = mask.symbol.derivative(mu);
        for (long a = 0; a < M.m1; ++a) {
            for (long b = 0; b < (uni ? 1 : M.m2); ++b) {
                if (a == 0 && b == 0) continue;
                auto pt = em_point(uni ? Dilation{M.m1, 1} : M, {a, b});
                if (!cyclo_eval(d, pt[0], pt[1]).is_zero()) return false;
            }
        }
    }
    return true;
}

}  // namespace

long generation_degree(const Mask& mask, long cap) {
    long n = -1;
    while (n < cap && zero_conditions_hold(mask, n + 1)) ++n;
    return n;
}

long reproduction_degree(const Mask& mask, long cap) {
    if (!check_symmetric(mask) && !check_interpolatory(mask))
        throw std::domain_error(
            "reproduction_degree: mask must be symmetric or interpolatory (tau = 0)");
    const bool uni = mask.symbol.arity() == 1;
    const long det = uni ? mask.dilation.m1 : mask.dilation.det();
    if (mask.symbol.eval_at_one() != Rational(det)) return -1;
    long n = -1;
    while (n < cap) {
        const long next = n + 1;
        if (!zero_conditions_hold(mask, next)) break;
        if (next >= 1) {
            bool ok = true;
            for (const auto& mu : orders_of(next, uni)) {
                if (!mask.symbol.derivative(mu).eval_at_one().is_zero()) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        n = next;
    }
    return n;
}

bool check_sum_rules(const Mask& mask, long order) {
    if (order < 1) throw std::invalid_argument("check_sum_rules: order must be >= 1");
    const Dilation& M = mask.dilation;
    const bool uni = mask.symbol.arity() == 1;
    auto ipow = [](long base, long e) {
        Rational r(1);
        for (long i = 0; i < e; ++i) r *= Rational(base);
        return r;
    };
    for (long dtot = 0; dtot < order; ++dtot) {
        for (long a = 0; a <= (uni ? dtot : dtot); ++a) {
            const long b = dtot - a;
            if (uni && b != 0) continue;
            // Coset sums of p(gamma + M alpha) * pi(gamma + M alpha).
            Rational ref(0);
            bool have_ref = false;
            for (long g1 = 0; g1 < M.m1; ++g1) {
                for (long g2 = 0; g2 < (uni ? 1 : M.m2); ++g2) {
                    Rational s(0);
                    for (const auto& [e, c] : mask.symbol.terms()) {
                        const bool in_coset =
                            (((e[0] - g1) % M.m1) == 0) &&
                            (uni || ((e[1] - g2) % M.m2) == 0);
                        if (!in_coset) continue;
                        s += c * ipow(e[0], a) * (uni ? Rational(1) : ipow(e[1], b));
                    }
                    if (!have_ref) {
                        ref = s;
                        have_ref = true;
                    } else if (s != ref) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

SchemeReport analyze(const Mask& mask) {
    SchemeReport r;
    r.is_interpolatory = check_interpolatory(mask);
    r.symmetric = check_symmetric(mask);
    r.generation_degree = generation_degree(mask);
    r.reproduction_degree =
        (r.symmetric || r.is_interpolatory) ? reproduction_degree(mask) : -1;
    mask.symbol.support_box(r.support_lo, r.support_hi);
    r.nnz = mask.nnz();
    return r;
}

Sequence subdivide(const Mask& mask, const Sequence& data, int steps) {
    if (steps < 1) throw std::invalid_argument("subdivide: steps must be >= 1");
    const Dilation& M = mask.dilation;
    Sequence cur = data;
    for (int s = 0; s < steps; ++s) {
        Sequence next;
        for (const auto& [beta, v] : cur) {
            if (v.is_zero()) continue;
            for (const auto& [e, c] : mask.symbol.terms()) {
                Exp alpha{e[0] + M.m1 * beta[0], e[1] + M.m2 * beta[1]};
                auto [it, inserted] = next.emplace(alpha, c * v);
                if (!inserted) it->second += c * v;
            }
        }
        for (auto it = next.begin(); it != next.end();)
            it = it->second.is_zero() ? next.erase(it) : std::next(it);
        cur = std::move(next);
    }
    return cur;
}

std::vector<Exp> subdivision_interior(const Mask& mask, const Sequence& data) {
    if (data.empty()) return {};
    Exp dlo = data.begin()->first, dhi = dlo;
    for (const auto& [e, v] : data) {
        (void)v;
        for (int k = 0; k < 2; ++k) {
            dlo[k] = std::min(dlo[k], e[k]);
            dhi[k] = std::max(dhi[k], e[k]);
        }
    }
    Exp slo, shi;
    mask.symbol.support_box(slo, shi);
    const Dilation& M = mask.dilation;
    // alpha is interior iff every beta with p(alpha - M beta) != 0 lies in
    // the data box: slo <= alpha - M beta <= shi  =>  beta range inside box.
    std::vector<Exp> out;
    const long m[2] = {M.m1, M.m2};
    Exp alo, ahi;
    for (int k = 0; k < 2; ++k) {
        alo[k] = m[k] * dlo[k] + slo[k];
        ahi[k] = m[k] * dhi[k] + shi[k];
    }
    for (std::int64_t a1 = alo[0]; a1 <= ahi[0]; ++a1) {
        for (std::int64_t a2 = alo[1]; a2 <= ahi[1]; ++a2) {
            bool interior = true;
            for (int k = 0; k < 2 && interior; ++k) {
                const std::int64_t a = (k == 0 ? a1 : a2);
                // beta with slo[k] <= a - m beta <= shi[k]
                // i.e. (a - shi)/m <= beta <= (a - slo)/m
                std::int64_t lo_num = a - shi[k], hi_num = a - slo[k];
                auto ceil_div = [](std::int64_t x, std::int64_t d) {
                    return x >= 0 ? (x + d - 1) / d : -((-x) / d);
                };
                auto floor_div = [](std::int64_t x, std::int64_t d) {
                    return x >= 0 ? x / d : -(((-x) + d - 1) / d);
                };
                std::int64_t blo = ceil_div(lo_num, m[k]);
                std::int64_t bhi = floor_div(hi_num, m[k]);
                if (blo < dlo[k] || bhi > dhi[k]) interior = false;
            }
            if (interior) out.push_back({a1, a2});
        }
    }
    return out;
}

}  // namespace asmg
