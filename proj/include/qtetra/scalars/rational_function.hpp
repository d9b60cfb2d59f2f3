#pragma once

// Elements of the rational function field Q(q).
//
// Canonical form: gcd(num, den) = 1, den monic, zero is 0/1. Negative powers
// of q live in the denominator, so q^-3 is 1/q^3.

#include "qtetra/scalars/polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace qtetra {

class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}
    RationalFunction(const Rational& c) : num_(c), den_(1) {}
    RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}

    /// Reduce num/den to canonical form.
    static RationalFunction canonicalize(Polynomial num, Polynomial den) {
        if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
        RationalFunction r;
        if (num.is_zero()) return r;
        if (!den.is_constant()) {
            Polynomial g = gcd(num, den);
            if (!g.is_constant()) {
                num = exact_quotient(num, g);
                den = exact_quotient(den, g);
            }
        }
        Rational lead = den.leading();
        if (lead != 1) {
            Rational inv = Rational(1) / lead;
            num = num.scaled(inv);
            den = den.scaled(inv);
        }
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        return r;
    }

    static RationalFunction q() { return RationalFunction(Polynomial::variable()); }

    /// q^k for any integer k.
    static RationalFunction q_power(long k) {
        RationalFunction r;
        if (k >= 0) {
            r.num_ = Polynomial::monomial(Rational(1), static_cast<std::size_t>(k));
        } else {
            r.num_ = Polynomial(1);
            r.den_ = Polynomial::monomial(Rational(1), static_cast<std::size_t>(-k));
        }
        return r;
    }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) {
            if (a.den_.is_constant()) return RationalFunction(a.num_ + b.num_);
            return canonicalize(a.num_ + b.num_, a.den_);
        }
        // Laurent fast path: both denominators are powers of q.
        if (a.den_.is_monomial() && b.den_.is_monomial()) {
            const std::size_t ka = a.den_.valuation(), kb = b.den_.valuation();
            const std::size_t k = std::max(ka, kb);
            Polynomial num = a.num_.shifted_up(k - ka) + b.num_.shifted_up(k - kb);
            return canonicalize(std::move(num), Polynomial::monomial(Rational(1), k));
        }
        Polynomial g = gcd(a.den_, b.den_);
        Polynomial ad = exact_quotient(a.den_, g);
        Polynomial bd = exact_quotient(b.den_, g);
        return canonicalize(a.num_ * bd + b.num_ * ad, a.den_ * bd);
    }

    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.den_.is_constant() && b.den_.is_constant()) return RationalFunction(a.num_ * b.num_);
        Polynomial g1 = gcd(a.num_, b.den_);
        Polynomial g2 = gcd(b.num_, a.den_);
        RationalFunction r;
        r.num_ = exact_quotient(a.num_, g1) * exact_quotient(b.num_, g2);
        r.den_ = exact_quotient(a.den_, g2) * exact_quotient(b.den_, g1);
        return r;
    }

    RationalFunction inverse() const {
        if (is_zero()) throw std::domain_error("division by zero in Q(q)");
        RationalFunction r;
        Rational inv = Rational(1) / num_.leading();
        r.num_ = den_.scaled(inv);
        r.den_ = num_.scaled(inv);
        return r;
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        return a * b.inverse();
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Value at q = x; throws when the denominator vanishes there.
    Rational evaluate(const Rational& x) const {
        Rational d = den_.evaluate(x);
        if (sgn(d) == 0) throw std::domain_error("denominator vanishes at the specialization point");
        return num_.evaluate(x) / d;
    }

private:
    Polynomial num_;
    Polynomial den_;
};

inline bool is_zero(const RationalFunction& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// Gauss number [n]_q = (q^n - q^-n)/(q - q^-1) = q^(1-n) (1 + q^2 + ... + q^(2n-2)).
inline RationalFunction q_int(unsigned n) {
    if (n == 0) return {};
    std::vector<Rational> c(2 * n - 1, Rational(0));
    for (unsigned k = 0; k < n; ++k) c[2 * k] = 1;
    return RationalFunction::canonicalize(Polynomial(std::move(c)),
                                          Polynomial::monomial(Rational(1), n - 1));
}

}  // namespace qtetra
