#pragma once

// Dimension of the unital algebra generated by a set of matrices.
// By Burnside's theorem n x n matrices generate the full matrix algebra
// (dimension n^2) iff they have no common invariant subspace over any
// extension field, which is how absolute irreducibility is certified.

#include "qtetra/exactla/matrix.hpp"

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtetra {

/// Incrementally built semi-echelon basis: row k has a pivot entry 1 and
/// zeros at the pivots of the rows inserted before it.
template <FieldScalar F>
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t length) : length_(length) {}

    std::size_t size() const { return rows_.size(); }

    /// Inserts v if it is independent of the current rows.
    bool insert(Vector<F> v) {
        if (v.size() != length_) throw std::invalid_argument("vector length mismatch");
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const F c = v[pivots_[r]];
            if (is_zero(c)) continue;
            for (std::size_t j = 0; j < length_; ++j)
                if (!is_zero(rows_[r][j])) v[j] = v[j] - c * rows_[r][j];
        }
        std::optional<std::size_t> pivot;
        for (std::size_t j = 0; j < length_ && !pivot; ++j)
            if (!is_zero(v[j])) pivot = j;
        if (!pivot) return false;
        const F inv = F(1) / v[*pivot];
        for (auto& x : v)
            if (!is_zero(x)) x = x * inv;
        rows_.push_back(std::move(v));
        pivots_.push_back(*pivot);
        return true;
    }

private:
    std::size_t length_;
    std::vector<Vector<F>> rows_;
    std::vector<std::size_t> pivots_;
};

struct ClosureDimension {
    std::size_t dim = 0;
    bool stabilized = false;
    std::size_t word_length = 0;  // longest word length examined
};

/// Default word-length cap 2n, overridable through QTETRA_WORD_CAP.
inline std::size_t default_word_cap(std::size_t n) {
    if (const char* env = std::getenv("QTETRA_WORD_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 2 * n;
}

/// Span of all words of length <= L in gens (the empty word is the
/// identity), where L is the first length at which the span stops growing
/// or the cap, whichever comes first.
template <FieldScalar F>
ClosureDimension algebra_closure_dim(const std::vector<Matrix<F>>& gens, std::size_t cap) {
    if (gens.empty()) throw std::invalid_argument("no generators");
    const std::size_t n = gens.front().rows();
    for (const auto& g : gens)
        if (g.rows() != n || g.cols() != n) throw std::invalid_argument("generators differ in size");
    if (cap == 0) throw std::invalid_argument("word cap must be positive");

    EchelonBasis<F> basis(n * n);
    const auto id = Matrix<F>::identity(n);
    basis.insert(id.entries());
    std::vector<Matrix<F>> frontier{id};
    ClosureDimension out;
    for (std::size_t len = 1; len <= cap; ++len) {
        out.word_length = len;
        std::vector<Matrix<F>> next;
        for (const auto& w : frontier)
            for (const auto& g : gens) {
                Matrix<F> p = g * w;
                if (basis.insert(p.entries())) next.push_back(std::move(p));
            }
        if (next.empty() || basis.size() == n * n) {
            out.stabilized = true;
            break;
        }
        frontier = std::move(next);
    }
    out.dim = basis.size();
    return out;
}

template <FieldScalar F>
ClosureDimension algebra_closure_dim(const std::vector<Matrix<F>>& gens) {
    if (gens.empty()) throw std::invalid_argument("no generators");
    return algebra_closure_dim(gens, default_word_cap(gens.front().rows()));
}

}  // namespace qtetra
