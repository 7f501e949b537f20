#include "asmg/schemes.hpp"

#include <array>
#include <stdexcept>
#include <vector>

#include "asmg/ratmat.hpp"

namespace asmg {

Mask dd_symbol(long m, long n) {
    if (m < 2) throw std::invalid_argument("dd_symbol: m must be >= 2");
    if (n < 1) throw std::invalid_argument("dd_symbol: n must be >= 1");
    LaurentPoly p(1);
    p.add_term({0, 0}, Rational(1));
    const Rational fact = factorial(2 * n - 1);
    for (long eps = 1; eps <= m - 1; ++eps) {
        const Rational em(eps, m);
        const Rational poch = pochhammer(Rational(-n + 1) - em, 2 * n);
        for (long beta = -n + 1; beta <= n; ++beta) {
            Rational sign((beta + n) % 2 == 0 ? 1 : -1);
            Rational coef = sign / (fact * (em - Rational(beta)));
            coef *= binomial(2 * n - 1, n - beta);
            coef *= poch;
            p.add_term({-m * beta + eps, 0}, coef);
        }
    }
    Mask out;
    out.symbol = std::move(p);
    out.dilation = {m, 1};
    out.family = MaskFamily::DD1D;
    out.n = n;
    out.name = "a_{" + std::to_string(m) + "," + std::to_string(n) + "}";
    return out;
}

Rational lagrange_weight(long m, long n, long beta, long eps) {
    // L_beta(t) = prod_{g != beta} (t - g)/(beta - g) on nodes -n+1..n,
    // evaluated at t = eps/m.
    const Rational t(eps, m);
    Rational r(1);
    for (long g = -n + 1; g <= n; ++g) {
        if (g == beta) continue;
        r *= (t - Rational(g)) / Rational(beta - g);
    }
    return r;
}

static void require_aniso(const Dilation& M) {
    if (M.m1 != 2 || M.m2 < 3 || M.m2 % 2 == 0)
        throw std::invalid_argument("dilation must be diag(2, m) with odd m >= 3");
}

Mask aniso_interp_symbol(const Dilation& M, long n) {
    require_aniso(M);
    if (n < 1) throw std::invalid_argument("aniso_interp_symbol: n must be >= 1");
    const long m = M.m2;
    LaurentPoly p(2);
    for (long k = 0; k <= n - 1; ++k)
        p += dd_symbol(2, n - k).symbol.lift(1) * dd_symbol(m, k + 1).symbol.lift(2);
    for (long k = 0; k <= n - 2; ++k)
        p -= dd_symbol(2, n - k - 1).symbol.lift(1) * dd_symbol(m, k + 1).symbol.lift(2);
    Mask out;
    out.symbol = std::move(p);
    out.dilation = M;
    out.family = MaskFamily::AnisoInterp;
    out.n = n;
    out.name = "a_{M," + std::to_string(n) + "}";
    return out;
}

namespace {

/// Exact integer power with 0^0 = 1.
Rational ipow(long base, long e) {
    Rational r(1);
    for (long i = 0; i < e; ++i) r *= Rational(base);
    return r;
}

}  // namespace

Mask minimal_interp_mask(const Dilation& M, long n) {
    require_aniso(M);
    if (n < 1) throw std::invalid_argument("minimal_interp_mask: n must be >= 1");
    const long m = M.m2;

    LaurentPoly p(2);
    p.add_term({0, 0}, Rational(1));

    // Index set A: alpha1 in [0, n-1], alpha2 in [alpha1-n, n-alpha1-1].
    std::vector<std::array<long, 2>> A;
    for (long a1 = 0; a1 <= n - 1; ++a1)
        for (long a2 = a1 - n; a2 <= n - a1 - 1; ++a2) A.push_back({a1, a2});
    // Moment set: 2*mu1 + mu2 <= 2n-1.
    std::vector<std::array<long, 2>> Mom;
    for (long mu1 = 0; 2 * mu1 <= 2 * n - 1; ++mu1)
        for (long mu2 = 0; 2 * mu1 + mu2 <= 2 * n - 1; ++mu2) Mom.push_back({mu1, mu2});
    if (A.size() != Mom.size())
        throw std::logic_error("minimal_interp_mask: index/moment size mismatch");

    auto insert_sym = [&p](long x, long y, const Rational& v) {
        if (v.is_zero()) return;
        std::vector<std::array<long, 2>> pts = {{x, y}, {-x, y}, {x, -y}, {-x, -y}};
        for (auto& q : pts) {
            Rational cur = p.coeff({q[0], q[1]});
            if (cur.is_zero())
                p.add_term({q[0], q[1]}, v);
            else if (cur != v)
                throw std::logic_error("minimal_interp_mask: inconsistent symmetric fill");
        }
    };

    // One moment system per coset (k, j), j = 1..(m-1)/2 (the mirror cosets
    // j -> m-j are covered by the alpha2 sign range). Mask values at
    // mirrored alpha1 positions are folded in with weight 2; the value at
    // alpha1 = 0, k = 0 appears once.
    for (long k = 0; k <= 1; ++k) {
        for (long j = 1; j <= (m - 1) / 2; ++j) {
            const std::size_t N = A.size();
            RatMat sys(N, N);
            RatVec rhs(N, Rational(0));
            for (std::size_t r = 0; r < N; ++r) {
                const long mu1 = Mom[r][0], mu2 = Mom[r][1];
                for (std::size_t c = 0; c < N; ++c) {
                    const long x = k + 2 * A[c][0];
                    const long y = j + m * A[c][1];
                    Rational w((k == 0 && A[c][0] == 0) ? 1 : 2);
                    sys.at(r, c) = w * ipow(x, 2 * mu1) * ipow(y, mu2);
                }
                rhs[r] = (mu1 == 0 && mu2 == 0) ? Rational(1) : Rational(0);
            }
            RatVec sol = solve_linear(sys, rhs);
            for (std::size_t c = 0; c < N; ++c)
                insert_sym(k + 2 * A[c][0], j + m * A[c][1], sol[c]);
        }
    }

    // Coset (1, 0): both coordinates fold, quarter index set.
    {
        std::vector<std::array<long, 2>> Ap;
        for (long a1 = 0; a1 <= n - 1; ++a1)
            for (long a2 = 0; a2 <= n - a1 - 1; ++a2) Ap.push_back({a1, a2});
        std::vector<std::array<long, 2>> Mp;
        for (long mu1 = 0; 2 * mu1 <= 2 * n - 1; ++mu1)
            for (long mu2 = 0; 2 * mu1 + 2 * mu2 <= 2 * n - 1; ++mu2) Mp.push_back({mu1, mu2});
        if (Ap.size() != Mp.size())
            throw std::logic_error("minimal_interp_mask: (1,0) size mismatch");
        const std::size_t N = Ap.size();
        RatMat sys(N, N);
        RatVec rhs(N, Rational(0));
        for (std::size_t r = 0; r < N; ++r) {
            const long mu1 = Mp[r][0], mu2 = Mp[r][1];
            for (std::size_t c = 0; c < N; ++c) {
                const long x = 1 + 2 * Ap[c][0];
                const long y = m * Ap[c][1];
                Rational w(Ap[c][1] == 0 ? 2 : 4);
                sys.at(r, c) = w * ipow(x, 2 * mu1) * ipow(y, 2 * mu2);
            }
            rhs[r] = (mu1 == 0 && mu2 == 0) ? Rational(1) : Rational(0);
        }
        RatVec sol = solve_linear(sys, rhs);
        for (std::size_t c = 0; c < N; ++c)
            insert_sym(1 + 2 * Ap[c][0], m * Ap[c][1], sol[c]);
    }

    Mask out;
    out.symbol = std::move(p);
    out.dilation = M;
    out.family = MaskFamily::MinimalInterp;
    out.n = n;
    out.name = "c_{M," + std::to_string(n) + "}";
    return out;
}

namespace {

LaurentPoly first_direction() {
    // (1+z1)^2 / (4 z1)
    LaurentPoly f(1);
    f.add_term({-1, 0}, Rational(1, 4));
    f.add_term({0, 0}, Rational(1, 2));
    f.add_term({1, 0}, Rational(1, 4));
    return f.lift(1);
}

LaurentPoly second_direction() {
    // (1+z2+z2^2)^2 / (9 z2^2)
    LaurentPoly g(1);
    g.add_term({-2, 0}, Rational(1, 9));
    g.add_term({-1, 0}, Rational(2, 9));
    g.add_term({0, 0}, Rational(3, 9));
    g.add_term({1, 0}, Rational(2, 9));
    g.add_term({2, 0}, Rational(1, 9));
    return g.lift(2);
}

LaurentPoly third_fourth_directions() {
    // (2 + z2 + z1 z2 + 2 z1 z2^2)(2 z1 + z2 + z1 z2 + 2 z2^2) / (36 z1 z2^2)
    LaurentPoly u(2), v(2);
    u.add_term({0, 0}, Rational(2));
    u.add_term({0, 1}, Rational(1));
    u.add_term({1, 1}, Rational(1));
    u.add_term({1, 2}, Rational(2));
    v.add_term({1, 0}, Rational(2));
    v.add_term({0, 1}, Rational(1));
    v.add_term({1, 1}, Rational(1));
    v.add_term({0, 2}, Rational(2));
    LaurentPoly q = u * v * Rational(1, 36);
    LaurentPoly shift = LaurentPoly::monomial(2, {-1, -2}, Rational(1));
    return q * shift;
}

}  // namespace

Mask box_spline_symbol(long n) {
    if (n < 1) throw std::invalid_argument("box_spline_symbol: n must be >= 1");
    const long hi = (n + 1) / 2, lo = n / 2;
    LaurentPoly p = LaurentPoly::constant(2, Rational(6));
    p *= (first_direction() * second_direction()).pow(hi);
    p *= third_fourth_directions().pow(lo);
    Mask out;
    out.symbol = std::move(p);
    out.dilation = {2, 3};
    out.family = MaskFamily::BoxSpline;
    out.n = n;
    out.name = "B_" + std::to_string(n);
    return out;
}

namespace {

LaurentPoly delta1() {
    // -(1 - z1^2)^2 / (16 z1^2)
    LaurentPoly d(2);
    d.add_term({-2, 0}, Rational(-1, 16));
    d.add_term({0, 0}, Rational(2, 16));
    d.add_term({2, 0}, Rational(-1, 16));
    return d;
}

LaurentPoly delta2() {
    // -(1 - z2^3)^2 / (27 z2^3)
    LaurentPoly d(2);
    d.add_term({0, -3}, Rational(-1, 27));
    d.add_term({0, 0}, Rational(2, 27));
    d.add_term({0, 3}, Rational(-1, 27));
    return d;
}

Rational deriv_at_one(const LaurentPoly& p, int d1, int d2) {
    return p.derivative({d1, d2}).eval_at_one();
}

}  // namespace

Mask approx_symbol(long n, long ell) {
    if (n < 1) throw std::invalid_argument("approx_symbol: n must be >= 1");
    if (ell < 0 || ell > n - 1) throw std::invalid_argument("approx_symbol: ell out of range");

    const LaurentPoly d1 = delta1(), d2 = delta2();
    std::vector<Mask> box(ell + 1);
    for (long i = 0; i <= ell; ++i) box[i] = box_spline_symbol(n - i);

    // accum = sum_{i' < i} B_{n-i'} * S_{i'}; level i adds B_{n-i} * S_i with
    // S_i = sum_j c^{(i,j)} d1^{i-j} d2^j. The order-2i derivative conditions
    // at (1,1) touch level i diagonally, so each level is a small exact solve.
    LaurentPoly accum = box[0].symbol;
    for (long i = 1; i <= ell; ++i) {
        std::vector<LaurentPoly> basis(i + 1);
        for (long j = 0; j <= i; ++j)
            basis[j] = box[i].symbol * d1.pow(i - j) * d2.pow(j);
        const std::size_t N = i + 1;
        RatMat sys(N, N);
        RatVec rhs(N, Rational(0));
        for (long jc = 0; jc <= i; ++jc) {
            const int o1 = static_cast<int>(2 * (i - jc)), o2 = static_cast<int>(2 * jc);
            for (long j = 0; j <= i; ++j) sys.at(jc, j) = deriv_at_one(basis[j], o1, o2);
            rhs[jc] = -deriv_at_one(accum, o1, o2);
        }
        RatVec sol = solve_linear(sys, rhs);
        for (long j = 0; j <= i; ++j) accum += basis[j] * sol[j];
    }

    Mask out;
    out.symbol = std::move(accum);
    out.dilation = {2, 3};
    out.family = MaskFamily::Approx;
    out.n = n;
    out.ell = ell;
    out.name = "B_{" + std::to_string(n) + "," + std::to_string(ell) + "}";
    return out;
}

Mask external_mask(const std::string& name) {
    Mask out;
    out.dilation = {2, 2};
    out.family = MaskFamily::External;
    out.name = name;
    if (name == "P1") {
        LaurentPoly h(1);
        h.add_term({-1, 0}, Rational(1, 2));
        h.add_term({0, 0}, Rational(1));
        h.add_term({1, 0}, Rational(1, 2));
        out.symbol = h.lift(1) * h.lift(2);
        return out;
    }
    if (name == "P2") {
        LaurentPoly h(1);
        h.add_term({-2, 0}, Rational(1, 8));
        h.add_term({-1, 0}, Rational(4, 8));
        h.add_term({0, 0}, Rational(6, 8));
        h.add_term({1, 0}, Rational(4, 8));
        h.add_term({2, 0}, Rational(1, 8));
        out.symbol = h.lift(1) * h.lift(2);
        return out;
    }
    if (name == "K") {
        LaurentPoly h = dd_symbol(2, 2).symbol;
        out.symbol = h.lift(1) * h.lift(2);
        return out;
    }
    throw std::invalid_argument("external_mask: unknown mask '" + name + "'");
}

Mask make_mask(const std::string& family, long m, long n, long ell) {
    if (family == "dd") return dd_symbol(m, n);
    if (family == "interp") return aniso_interp_symbol({2, m}, n);
    if (family == "minimal") return minimal_interp_mask({2, m}, n);
    if (family == "box") return box_spline_symbol(n);
    if (family == "approx") return approx_symbol(n, ell);
    return external_mask(family);
}

}  // namespace asmg
