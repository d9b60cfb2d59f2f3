#pragma once

// Field contexts. Every algorithm in the library is a template over a scalar
// type F and takes a FieldContext<F> that supplies the distinguished element
// q. Symbolic mode uses F = RationalFunction with q the indeterminate;
// specialized mode uses F = Rational with q a fixed rational constant.

#include "qtetra/scalars/rational_function.hpp"

#include <concepts>
#include <stdexcept>
#include <string>

namespace qtetra {

template <class F>
concept FieldScalar = std::constructible_from<F, long> && requires(const F& a, const F& b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    { is_zero(a) } -> std::convertible_to<bool>;
};

template <FieldScalar F>
struct FieldContext {
    F q;

    F zero() const { return F(0); }
    F one() const { return F(1); }

    F q_power(long k) const {
        F base = k >= 0 ? q : F(F(1) / q);
        F out(1);
        for (long i = 0; i < (k >= 0 ? k : -k); ++i) out = out * base;
        return out;
    }

    /// [n]_q as the Laurent sum q^(n-1) + q^(n-3) + ... + q^(1-n).
    F q_int(unsigned n) const {
        F out(0);
        for (unsigned k = 0; k < n; ++k) out = out + q_power(static_cast<long>(n) - 1 - 2 * static_cast<long>(k));
        return out;
    }

    /// q - q^-1
    F q_diff() const { return q - q_power(-1); }
};

using SymbolicField = FieldContext<RationalFunction>;
using SpecializedField = FieldContext<Rational>;

inline SymbolicField symbolic_field() { return SymbolicField{RationalFunction::q()}; }

/// Specialization requires q outside {0, 1, -1}; every other rational has
/// infinite multiplicative order.
inline SpecializedField specialized_field(const Rational& value) {
    if (sgn(value) == 0 || value == 1 || value == -1)
        throw std::invalid_argument("specialized q must not be 0, 1 or -1");
    return SpecializedField{value};
}

/// Runtime description of the field mode, as stored in module files.
struct FieldMode {
    bool specialized = false;
    Rational q_value = 0;

    static FieldMode symbolic() { return {}; }
    static FieldMode at(const Rational& v) {
        specialized_field(v);
        return {true, v};
    }
    friend bool operator==(const FieldMode&, const FieldMode&) = default;
};

}  // namespace qtetra
