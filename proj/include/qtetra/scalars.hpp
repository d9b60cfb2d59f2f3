#pragma once

#include "qtetra/scalars/field.hpp"
#include "qtetra/scalars/polynomial.hpp"
#include "qtetra/scalars/rational_function.hpp"
#include "qtetra/scalars/text.hpp"

#include <stdexcept>

namespace qtetra {

/// Value of s at q = ctx.q.
inline Rational specialize(const RationalFunction& s, const SpecializedField& ctx) {
    try {
        return s.evaluate(ctx.q);
    } catch (const std::domain_error&) {
        throw std::domain_error("cannot specialize " + to_string(s) + " at q = " + to_string(ctx.q) +
                                ": denominator vanishes");
    }
}

}  // namespace qtetra
