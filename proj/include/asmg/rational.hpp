#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace asmg {

/// Exact arbitrary-precision rational, always in lowest terms with a
/// positive denominator. Thin wrapper around GMP's mpq_class so that
/// parsing, rendering and hashing stay under our control.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "num", "num/den" or a decimal-free integer string, base 10.
    static Rational parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        if (q.get_den() == 0)
            throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
        q.canonicalize();
        return Rational(q);
    }

    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    std::string num_str() const { return v_.get_num().get_str(); }
    std::string den_str() const { return v_.get_den().get_str(); }

    double to_double() const { return v_.get_d(); }

    bool is_zero() const { return v_ == 0; }
    int sign() const { return sgn(v_); }

    bool is_integer() const { return v_.get_den() == 1; }
    long to_long() const {
        if (!is_integer() || !v_.get_num().fits_slong_p())
            throw std::domain_error("Rational: not a small integer");
        return v_.get_num().get_si();
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return v_ < 0 ? Rational(mpq_class(-v_)) : *this; }

    /// Exact integer power, negative exponents allowed for nonzero values.
    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        Rational base = *this;
        if (e < 0) {
            if (is_zero()) throw std::domain_error("Rational: 0^negative");
            base = Rational(1) / base;
            e = -e;
        }
        Rational r(1);
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }

/// Exact factorial as a rational (denominator 1).
inline Rational factorial(long n) {
    Rational r(1);
    for (long i = 2; i <= n; ++i) r *= Rational(i);
    return r;
}

/// Exact binomial coefficient C(n, k); zero outside the triangle.
inline Rational binomial(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    Rational r(1);
    for (long i = 0; i < k; ++i) r *= Rational(n - i, i + 1);
    return r;
}

/// Rising factorial (x)_l = x (x+1) ... (x+l-1), exact for rational x.
inline Rational pochhammer(const Rational& x, long l) {
    Rational r(1);
    for (long i = 0; i < l; ++i) r *= x + Rational(i);
    return r;
}

}  // namespace asmg
