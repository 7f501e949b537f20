#include "asmg/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace asmg {

namespace {

using Poly = std::vector<Rational>;  // dense, ascending, no trailing zeros

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

/// Exact division, remainder must vanish.
Poly divide_exact(const Poly& num, const Poly& den) {
    Poly r = num;
    trim(r);
    Poly q(r.size() > den.size() - 1 ? r.size() - den.size() + 1 : 0, Rational(0));
    while (r.size() >= den.size()) {
        Rational f = r.back() / den.back();
        std::size_t shift = r.size() - den.size();
        q[shift] = f;
        for (std::size_t i = 0; i < den.size(); ++i)
            r[shift + i] -= f * den[i];
        trim(r);
    }
    if (!r.empty())
        throw std::logic_error("cyclotomic: division not exact");
    return q;
}

}  // namespace

const std::vector<Rational>& cyclotomic_poly(long L) {
    static std::map<long, Poly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(L);
    if (it != cache.end()) return it->second;

    // Phi_L = (x^L - 1) / prod_{d | L, d < L} Phi_d, computed bottom-up.
    for (long d = 1; d <= L; ++d) {
        if (L % d != 0 || cache.count(d)) continue;
        Poly num(d + 1, Rational(0));
        num[0] = Rational(-1);
        num[d] = Rational(1);
        Poly phi = num;
        for (long e = 1; e < d; ++e)
            if (d % e == 0) phi = divide_exact(phi, cache.at(e));
        cache.emplace(d, std::move(phi));
    }
    return cache.at(L);
}

CycloNum::CycloNum(long order, std::vector<Rational> coeffs) : order_(order) {
    const auto& phi = cyclotomic_poly(order);
    const std::size_t deg = phi.size() - 1;
    // Reduce modulo Phi_order.
    while (coeffs.size() > deg) {
        Rational f = coeffs.back();
        std::size_t shift = coeffs.size() - 1 - deg;
        for (std::size_t i = 0; i < phi.size(); ++i)
            coeffs[shift + i] -= f * phi[i];
        while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
        if (coeffs.size() <= deg) break;
    }
    coeffs.resize(deg, Rational(0));
    if (coeffs.empty()) coeffs.push_back(Rational(0));
    coeffs_ = std::move(coeffs);
}

bool CycloNum::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool CycloNum::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

Rational CycloNum::rational_value() const {
    if (!is_rational())
        throw std::domain_error("CycloNum: value is not rational");
    return coeffs_[0];
}

CycloNum operator+(const CycloNum& a, const CycloNum& b) {
    if (a.order_ != b.order_)
        throw std::invalid_argument("CycloNum: mixed orders in +");
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return CycloNum(a.order_, std::move(c));
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
    if (a.order_ != b.order_)
        throw std::invalid_argument("CycloNum: mixed orders in *");
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return CycloNum(a.order_, std::move(c));
}

CycloNum cyclo_eval(const LaurentPoly& p, const RootOfUnity& e1, const RootOfUnity& e2) {
    const long L = std::lcm(e1.order, e2.order);
    // zeta_L exponent carried by each variable.
    const long s1 = (L / e1.order) * (((e1.num % e1.order) + e1.order) % e1.order);
    const long s2 = (L / e2.order) * (((e2.num % e2.order) + e2.order) % e2.order);
    std::vector<Rational> acc(static_cast<std::size_t>(L), Rational(0));
    for (const auto& [e, c] : p.terms()) {
        long k = ((e[0] % L) * s1 + (e[1] % L) * s2) % L;
        k = ((k % L) + L) % L;
        acc[static_cast<std::size_t>(k)] += c;
    }
    return CycloNum(L, std::move(acc));
}

}  // namespace asmg
