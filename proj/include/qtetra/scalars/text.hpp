#pragma once

// Canonical text syntax for scalars.
//
// A rational function prints as an integer polynomial in q when its
// denominator is 1, and as "(num)/(den)" otherwise, where num and den are
// integer polynomials with jointly trivial content and den has positive
// leading coefficient:
//
//   q^2 + 1        (q^4 + q^2 + 1)/(q^2)        (-q + 1)/(q + 1)        (q)/(2)
//
// The parser accepts general arithmetic expressions (+ - * / ^, parentheses,
// integers, q) so hand-written input such as "-(q - 1)/(q + 1)" or "q^-2"
// is valid, and parse(print(x)) reproduces print(x) exactly.

#include "qtetra/scalars/field.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qtetra {

namespace detail {

inline void append_integer_poly(std::string& out, const IntPoly& p) {
    if (p.empty()) {
        out += '0';
        return;
    }
    bool first = true;
    for (std::size_t k = p.size(); k-- > 0;) {
        const Integer& c = p[k];
        if (sgn(c) == 0) continue;
        const bool neg = sgn(c) < 0;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        Integer mag = abs(c);
        if (k == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) {
            out += mag.get_str();
            out += '*';
        }
        out += 'q';
        if (k > 1) {
            out += '^';
            out += std::to_string(k);
        }
    }
}

}  // namespace detail

inline std::string to_string(const RationalFunction& x) {
    if (x.is_zero()) return "0";
    const auto& num = x.numerator().coeffs();
    const auto& den = x.denominator().coeffs();
    Integer l = 1;
    for (const auto& c : num) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& c : den) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    detail::IntPoly n, d;
    for (const auto& c : num) n.push_back(c.get_num() * (l / c.get_den()));
    for (const auto& c : den) d.push_back(c.get_num() * (l / c.get_den()));
    Integer g = 0;
    for (const auto& c : n) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    for (const auto& c : d) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    for (auto& c : n) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    for (auto& c : d) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    std::string out;
    if (d.size() == 1 && d[0] == 1) {
        detail::append_integer_poly(out, n);
        return out;
    }
    out += '(';
    detail::append_integer_poly(out, n);
    out += ")/(";
    detail::append_integer_poly(out, d);
    out += ')';
    return out;
}

inline std::string to_string(const Rational& x) { return x.get_str(); }

namespace detail {

template <FieldScalar F>
class ScalarParser {
public:
    ScalarParser(std::string_view text, const FieldContext<F>& ctx) : s_(text), ctx_(ctx) {}

    F parse() {
        F v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream os;
        os << "cannot parse scalar \"" << s_ << "\": " << what << " at offset " << pos_;
        throw std::invalid_argument(os.str());
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    F expr() {
        F acc(0);
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    bool starts_primary() {
        skip();
        return pos_ < s_.size() &&
               (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == 'q' || s_[pos_] == '(');
    }

    F term() {
        F acc = factor();
        for (;;) {
            if (accept('*')) {
                acc = acc * factor();
            } else if (accept('/')) {
                F d = factor();
                if (is_zero(d)) fail("division by zero");
                acc = acc / d;
            } else if (starts_primary()) {
                acc = acc * factor();  // juxtaposition, e.g. "2q"
            } else {
                return acc;
            }
        }
    }

    F factor() {
        if (accept('-')) return -factor();
        F base = primary();
        if (!accept('^')) return base;
        bool neg = accept('-');
        long e = 0;
        if (accept('(')) {
            neg = accept('-') != neg;
            e = exponent();
            if (!accept(')')) fail("expected ')'");
        } else {
            e = exponent();
        }
        if (neg) {
            if (is_zero(base)) fail("zero raised to a negative power");
            base = F(1) / base;
        }
        F out(1);
        for (long i = 0; i < e; ++i) out = out * base;
        return out;
    }

    long exponent() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected exponent");
        if (pos_ - start > 6) fail("exponent too large");
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }

    F primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            F v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (c == 'q') {
            ++pos_;
            return ctx_.q;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            Integer v(std::string(s_.substr(start, pos_ - start)));
            return F(Rational(v));
        }
        fail("unexpected character");
    }

    std::string_view s_;
    const FieldContext<F>& ctx_;
    std::size_t pos_ = 0;
};

}  // namespace detail

template <FieldScalar F>
F parse_scalar(std::string_view text, const FieldContext<F>& ctx) {
    return detail::ScalarParser<F>(text, ctx).parse();
}

inline Rational parse_rational(std::string_view text) {
    // Plain rationals such as "21/4" or "-3" are valid expressions at any q.
    SpecializedField dummy{Rational(2)};
    std::string s(text);
    if (s.find('q') != std::string::npos) throw std::invalid_argument("rational constant must not mention q");
    return parse_scalar<Rational>(s, dummy);
}

}  // namespace qtetra
