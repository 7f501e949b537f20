#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "asmg/rational.hpp"

namespace asmg {

/// Exponent vector; univariate polynomials keep the second slot at 0.
using Exp = std::array<std::int64_t, 2>;

inline Exp exp1(std::int64_t a) { return {a, 0}; }
inline Exp exp2(std::int64_t a, std::int64_t b) { return {a, b}; }

/// Sparse Laurent polynomial over Rational in one or two variables.
/// Terms are kept in lexicographic exponent order with no stored zeros,
/// so equal polynomials compare equal structurally.
class LaurentPoly {
public:
    explicit LaurentPoly(int arity = 2) : arity_(arity) {}

    static LaurentPoly constant(int arity, const Rational& c);
    static LaurentPoly monomial(int arity, const Exp& e, const Rational& c);
    /// Univariate z^k with coefficient c.
    static LaurentPoly mono1(std::int64_t k, const Rational& c) {
        return monomial(1, exp1(k), c);
    }

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exp, Rational>& terms() const { return terms_; }

    Rational coeff(const Exp& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Accumulates c into the coefficient at e, dropping exact zeros.
    void add_term(const Exp& e, const Rational& c);

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    LaurentPoly operator*(const Rational& c) const;
    LaurentPoly pow(long e) const;

    /// Formal mu-th partial derivative in the complex variables.
    LaurentPoly derivative(const std::array<int, 2>& mu) const;

    /// Promotes a univariate polynomial to a bivariate one living in
    /// variable `var` (1 or 2).
    LaurentPoly lift(int var) const;

    /// Value at z = 1 (in every variable): the coefficient sum.
    Rational eval_at_one() const;

    /// Substitutes z_i -> s_i * z_i for rational scale factors.
    LaurentPoly scale_vars(const Rational& s1, const Rational& s2) const;

    /// Componentwise support bounds; [lo, hi] per variable (zero polynomial
    /// reports an empty box lo > hi).
    void support_box(Exp& lo, Exp& hi) const;

    std::string str() const;

private:
    int arity_;
    std::map<Exp, Rational> terms_;
};

inline LaurentPoly operator*(const Rational& c, const LaurentPoly& p) { return p * c; }

}  // namespace asmg
