#include "asmg/ratmat.hpp"

#include <gmpxx.h>

#include <stdexcept>

namespace asmg {

RatMat RatMat::identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RatVec RatMat::apply(const RatVec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("RatMat: size mismatch in apply");
    RatVec y(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) y[i] += at(i, j) * x[j];
    return y;
}

RatMat RatMat::mul(const RatMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("RatMat: size mismatch in mul");
    RatMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

RatMat RatMat::transpose() const {
    RatMat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

RatVec RatMat::column_sums() const {
    RatVec s(cols_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) s[j] += at(i, j);
    return s;
}

RatVec RatMat::char_poly() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMat: char_poly needs square");
    const std::size_t n = rows_;
    // Faddeev-LeVerrier: c_n = 1, M_0 = 0.
    RatVec c(n + 1, Rational(0));
    c[n] = Rational(1);
    RatMat M(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I
        RatMat AM = mul(M);
        for (std::size_t i = 0; i < n; ++i) AM.at(i, i) += c[n - k + 1];
        M = AM;
        RatMat P = mul(M);
        Rational tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += P.at(i, i);
        c[n - k] = -(tr / Rational(static_cast<long>(k)));
    }
    return c;
}

namespace {

/// Fraction-free (Bareiss) elimination on an integer matrix [A | b...].
/// Rational inputs are scaled row-wise to integers first; scaling a row
/// of [A | b] leaves the solution of A x = b unchanged.
std::vector<std::vector<mpz_class>> to_integer_rows(const RatMat& A, const RatVec* b) {
    const std::size_t n = A.rows(), m = A.cols();
    std::vector<std::vector<mpz_class>> M(n);
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class lcm = 1;
        auto fold = [&lcm](const Rational& r) {
            mpz_class den = r.raw().get_den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            lcm = lcm / g * den;
        };
        for (std::size_t j = 0; j < m; ++j) fold(A.at(i, j));
        if (b) fold((*b)[i]);
        M[i].resize(m + (b ? 1 : 0));
        for (std::size_t j = 0; j < m; ++j) {
            const mpq_class& q = A.at(i, j).raw();
            M[i][j] = q.get_num() * (lcm / q.get_den());
        }
        if (b) {
            const mpq_class& q = (*b)[i].raw();
            M[i][m] = q.get_num() * (lcm / q.get_den());
        }
    }
    return M;
}

}  // namespace

RatVec solve_linear(const RatMat& A, const RatVec& b) {
    if (A.rows() != A.cols() || b.size() != A.rows())
        throw std::invalid_argument("solve_linear: shape mismatch");
    const std::size_t n = A.rows();
    auto M = to_integer_rows(A, &b);

    mpz_class prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && M[piv][k] == 0) ++piv;
        if (piv == n) throw std::domain_error("solve_linear: singular system");
        if (piv != k) std::swap(M[piv], M[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                mpz_class t = M[k][k] * M[i][j] - M[i][k] * M[k][j];
                mpz_divexact(M[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            M[i][k] = 0;
        }
        prev = M[k][k];
    }

    RatVec x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational s = Rational(mpq_class(M[i][n]));
        for (std::size_t j = i + 1; j < n; ++j)
            s -= Rational(mpq_class(M[i][j])) * x[j];
        x[i] = s / Rational(mpq_class(M[i][i]));
    }
    return x;
}

RatMat invert(const RatMat& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("invert: square only");
    const std::size_t n = A.rows();
    RatMat inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        RatVec e(n, Rational(0));
        e[j] = Rational(1);
        RatVec col = solve_linear(A, e);
        for (std::size_t i = 0; i < n; ++i) inv.at(i, j) = col[i];
    }
    return inv;
}

RatVec SpanBasis::reduce(RatVec v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational& f = v[pivots_[r]];
        if (f.is_zero()) continue;
        Rational c = f;  // pivot entries are normalized to 1
        for (std::size_t j = 0; j < n_; ++j)
            if (!rows_[r][j].is_zero()) v[j] -= c * rows_[r][j];
    }
    return v;
}

bool SpanBasis::insert(RatVec v) {
    if (v.size() != n_) throw std::invalid_argument("SpanBasis: dimension mismatch");
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < n_ && v[p].is_zero()) ++p;
    if (p == n_) return false;
    Rational inv = Rational(1) / v[p];
    for (auto& c : v) c *= inv;
    // Back-substitute into existing rows to keep the reduced form.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational f = rows_[r][p];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j)
            if (!v[j].is_zero()) rows_[r][j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

bool SpanBasis::contains(const RatVec& v) const {
    RatVec r = reduce(v);
    for (const auto& c : r)
        if (!c.is_zero()) return false;
    return true;
}

}  // namespace asmg
