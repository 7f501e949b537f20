#include "asmg/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace asmg {

LaurentPoly LaurentPoly::constant(int arity, const Rational& c) {
    LaurentPoly p(arity);
    p.add_term({0, 0}, c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int arity, const Exp& e, const Rational& c) {
    LaurentPoly p(arity);
    if (arity == 1 && e[1] != 0)
        throw std::invalid_argument("LaurentPoly: univariate exponent uses slot 0 only");
    p.add_term(e, c);
    return p;
}

void LaurentPoly::add_term(const Exp& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.arity_ != b.arity_)
        throw std::invalid_argument("LaurentPoly: arity mismatch in +");
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.arity_ != b.arity_)
        throw std::invalid_argument("LaurentPoly: arity mismatch in -");
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    // Tensor lift: a univariate factor multiplies into variable 1 of a
    // bivariate partner (use lift() explicitly for variable 2).
    if (a.arity_ != b.arity_) {
        if (a.arity_ == 1) return a.lift(1) * b;
        return a * b.lift(1);
    }
    LaurentPoly r(a.arity_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term({ea[0] + eb[0], ea[1] + eb[1]}, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const {
    LaurentPoly r(arity_);
    if (c.is_zero()) return r;
    for (const auto& [e, cc] : terms_) r.terms_.emplace(e, cc * c);
    return r;
}

LaurentPoly LaurentPoly::pow(long e) const {
    if (e < 0) throw std::invalid_argument("LaurentPoly: negative power");
    LaurentPoly r = constant(arity_, Rational(1));
    LaurentPoly base = *this;
    while (e) {
        if (e & 1) r *= base;
        if (e >>= 1) base *= base;
    }
    return r;
}

LaurentPoly LaurentPoly::derivative(const std::array<int, 2>& mu) const {
    if (mu[0] < 0 || mu[1] < 0)
        throw std::invalid_argument("LaurentPoly: derivative order must be >= 0");
    LaurentPoly r(arity_);
    for (const auto& [e, c] : terms_) {
        Rational f = c;
        Exp ne = e;
        bool dead = false;
        for (int v = 0; v < 2; ++v) {
            for (int k = 0; k < mu[v]; ++k) {
                if (ne[v] == 0) { dead = true; break; }
                f *= Rational(ne[v]);
                ne[v] -= 1;
            }
            if (dead) break;
        }
        if (!dead) r.add_term(ne, f);
    }
    return r;
}

LaurentPoly LaurentPoly::lift(int var) const {
    if (arity_ != 1) throw std::invalid_argument("LaurentPoly: lift needs arity 1");
    if (var != 1 && var != 2) throw std::invalid_argument("LaurentPoly: lift var must be 1 or 2");
    LaurentPoly r(2);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(var == 1 ? Exp{e[0], 0} : Exp{0, e[0]}, c);
    return r;
}

Rational LaurentPoly::eval_at_one() const {
    Rational s(0);
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

LaurentPoly LaurentPoly::scale_vars(const Rational& s1, const Rational& s2) const {
    LaurentPoly r(arity_);
    for (const auto& [e, c] : terms_)
        r.add_term(e, c * s1.pow(e[0]) * s2.pow(e[1]));
    return r;
}

void LaurentPoly::support_box(Exp& lo, Exp& hi) const {
    lo = {1, 1};
    hi = {0, 0};
    bool first = true;
    for (const auto& [e, c] : terms_) {
        (void)c;
        if (first) {
            lo = hi = e;
            first = false;
            continue;
        }
        for (int v = 0; v < 2; ++v) {
            if (e[v] < lo[v]) lo[v] = e[v];
            if (e[v] > hi[v]) hi[v] = e[v];
        }
    }
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (e[0] != 0) os << " * z1^" << e[0];
        if (arity_ == 2 && e[1] != 0) os << " * z2^" << e[1];
    }
    return os.str();
}

}  // namespace asmg
