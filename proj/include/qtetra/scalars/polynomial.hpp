#pragma once

// Dense univariate polynomials over Q in the indeterminate q.
//
// Coefficients are GMP rationals stored lowest degree first; the leading
// coefficient of a nonzero polynomial is never zero and the zero polynomial
// has no coefficients.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qtetra {

using Rational = mpq_class;
using Integer = mpz_class;

class Polynomial {
public:
    Polynomial() = default;

    Polynomial(long c) {
        if (c != 0) coeffs_.emplace_back(c);
    }

    Polynomial(const Rational& c) {
        if (sgn(c) != 0) coeffs_.push_back(c);
    }

    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    /// c * q^k
    static Polynomial monomial(const Rational& c, std::size_t k) {
        Polynomial p;
        if (sgn(c) == 0) return p;
        p.coeffs_.assign(k + 1, Rational(0));
        p.coeffs_[k] = c;
        return p;
    }

    static Polynomial variable() { return monomial(Rational(1), 1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Degree of the polynomial; -1 for zero.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    /// Largest k with q^k dividing the polynomial (0 for zero).
    std::size_t valuation() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (sgn(coeffs_[i]) != 0) return i;
        return 0;
    }

    bool is_monomial() const { return !is_zero() && valuation() == coeffs_.size() - 1; }

    const Rational& leading() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational evaluate(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        Rational tmp;
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (sgn(a.coeffs_[i]) == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (sgn(b.coeffs_[j]) == 0) continue;
                mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
                out[i + j] += tmp;
            }
        }
        return Polynomial(std::move(out));
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const Rational& c) const {
        if (sgn(c) == 0) return {};
        Polynomial r = *this;
        for (auto& x : r.coeffs_) x *= c;
        return r;
    }

    /// Divide by q^k; the caller guarantees k <= valuation().
    Polynomial shifted_down(std::size_t k) const {
        Polynomial r;
        if (k >= coeffs_.size()) return r;
        r.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end());
        return r;
    }

    Polynomial shifted_up(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        Polynomial r;
        r.coeffs_.assign(k, Rational(0));
        r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
        return r;
    }

    Polynomial monic() const {
        if (is_zero()) return {};
        return scaled(Rational(1) / leading());
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim() {
        while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// Quotient and remainder of a / b over Q.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    std::vector<Rational> rem = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    std::vector<Rational> quot(rem.size() - db, Rational(0));
    const Rational inv_lead = Rational(1) / bc.back();
    for (std::size_t k = rem.size(); k-- > db;) {
        if (sgn(rem[k]) == 0) continue;
        Rational f = rem[k] * inv_lead;
        quot[k - db] = f;
        for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * bc[j];
    }
    rem.resize(db);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

/// Exact quotient; throws when b does not divide a.
inline Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
    if (b.is_monomial()) {
        const std::size_t k = b.valuation();
        if (a.valuation() < k && !a.is_zero()) throw std::domain_error("inexact polynomial division");
        return a.shifted_down(k).scaled(Rational(1) / b.leading());
    }
    auto [quot, rem] = divmod(a, b);
    if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
    return quot;
}

namespace detail {

using IntPoly = std::vector<Integer>;

inline void trim(IntPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline Integer content(const IntPoly& p) {
    Integer g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

inline void make_primitive(IntPoly& p) {
    trim(p);
    if (p.empty()) return;
    Integer g = content(p);
    if (sgn(p.back()) < 0) g = -g;
    if (g != 1)
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

inline IntPoly to_primitive_integer(const Polynomial& p) {
    Integer l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    IntPoly out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.get_num() * (l / c.get_den()));
    make_primitive(out);
    return out;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed in Z[q].
inline IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    const Integer& lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        Integer la = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (auto& c : a) c *= lb;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
        trim(a);
    }
    return a;
}

}  // namespace detail

/// Monic gcd over Q[q]; gcd(0, 0) = 0.
inline Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    const std::size_t v = std::min(a.valuation(), b.valuation());
    const Polynomial a0 = a.shifted_down(a.valuation());
    const Polynomial b0 = b.shifted_down(b.valuation());
    const Polynomial power = Polynomial::monomial(Rational(1), v);
    if (a0.is_constant() || b0.is_constant()) return power;

    detail::IntPoly x = detail::to_primitive_integer(a0);
    detail::IntPoly y = detail::to_primitive_integer(b0);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        if (y.size() == 1) return power;
        detail::IntPoly r = detail::pseudo_remainder(x, y);
        detail::make_primitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(x.size());
    for (const auto& c : x) coeffs.emplace_back(c);
    return (Polynomial(std::move(coeffs)).monic()).shifted_up(v);
}

}  // namespace qtetra
