#pragma once

// Subspaces of F^n with a canonical basis, and the eigenspace machinery.

#include "qtetra/exactla/matrix.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qtetra {

/// A subspace of F^n. The basis is stored as the rows of a reduced row
/// echelon matrix, so two subspaces are equal iff their bases are equal.
template <FieldScalar F>
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace zero(std::size_t n) { return Subspace(n); }

    static Subspace full(std::size_t n) {
        Subspace s(n);
        s.basis_ = Matrix<F>::identity(n);
        s.pivots_.resize(n);
        std::iota(s.pivots_.begin(), s.pivots_.end(), std::size_t{0});
        return s;
    }

    static Subspace span(const std::vector<Vector<F>>& vectors, std::size_t n) {
        Matrix<F> m(vectors.size(), n);
        for (std::size_t i = 0; i < vectors.size(); ++i) {
            if (vectors[i].size() != n) throw std::invalid_argument("vector length differs from ambient dimension");
            for (std::size_t j = 0; j < n; ++j) m(i, j) = vectors[i][j];
        }
        return from_rows(std::move(m));
    }

    /// Row space of m.
    static Subspace from_rows(Matrix<F> m) {
        Subspace s(m.cols());
        auto [red, pivots] = row_echelon(std::move(m));
        s.basis_ = std::move(red);
        s.pivots_ = std::move(pivots);
        return s;
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    const Matrix<F>& basis_matrix() const { return basis_; }
    std::vector<Vector<F>> basis() const {
        std::vector<Vector<F>> out;
        for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
        return out;
    }

    /// Residue of v after elimination against the canonical basis; zero iff v lies in the subspace.
    Vector<F> reduce(Vector<F> v) const {
        if (v.size() != ambient_) throw std::invalid_argument("vector length differs from ambient dimension");
        for (std::size_t r = 0; r < dim(); ++r) {
            const F c = v[pivots_[r]];
            if (qtetra::is_zero(c)) continue;
            for (std::size_t j = pivots_[r]; j < ambient_; ++j)
                if (!qtetra::is_zero(basis_(r, j))) v[j] = v[j] - c * basis_(r, j);
        }
        return v;
    }

    bool contains(const Vector<F>& v) const {
        for (const auto& x : reduce(v))
            if (!qtetra::is_zero(x)) return false;
        return true;
    }

    bool contains(const Subspace& other) const {
        require_same_ambient(other);
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_.row(i))) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

    void require_same_ambient(const Subspace& o) const {
        if (ambient_ != o.ambient_) throw std::invalid_argument("subspaces live in different ambient spaces");
    }

private:
    std::size_t ambient_;
    Matrix<F> basis_;
    std::vector<std::size_t> pivots_;
};

template <FieldScalar F>
struct SubspaceSum {
    Subspace<F> sum;
    bool is_direct = false;
};

template <FieldScalar F>
SubspaceSum<F> subspace_sum(const std::vector<Subspace<F>>& parts, std::size_t ambient) {
    std::vector<Vector<F>> all;
    std::size_t total = 0;
    for (const auto& p : parts) {
        if (p.ambient_dim() != ambient) throw std::invalid_argument("subspaces live in different ambient spaces");
        total += p.dim();
        for (auto& v : p.basis()) all.push_back(std::move(v));
    }
    auto s = Subspace<F>::span(all, ambient);
    const bool direct = s.dim() == total;
    return {std::move(s), direct};
}

template <FieldScalar F>
SubspaceSum<F> subspace_sum(const std::vector<Subspace<F>>& parts) {
    if (parts.empty()) throw std::invalid_argument("sum of an empty list needs an ambient dimension");
    return subspace_sum(parts, parts.front().ambient_dim());
}

/// a ∩ b by the Zassenhaus construction: echelonize [[a a], [b 0]]; rows
/// whose left half vanishes span the intersection in their right half.
template <FieldScalar F>
Subspace<F> subspace_intersect(const Subspace<F>& a, const Subspace<F>& b) {
    a.require_same_ambient(b);
    const std::size_t n = a.ambient_dim();
    if (a.is_zero() || b.is_zero()) return Subspace<F>::zero(n);
    if (a.is_full()) return b;
    if (b.is_full()) return a;
    Matrix<F> z(a.dim() + b.dim(), 2 * n);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            z(i, j) = a.basis_matrix()(i, j);
            z(i, n + j) = a.basis_matrix()(i, j);
        }
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) z(a.dim() + i, j) = b.basis_matrix()(i, j);
    auto [red, pivots] = row_echelon(std::move(z));
    std::vector<Vector<F>> inter;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] < n) continue;
        Vector<F> v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = red(r, n + j);
        inter.push_back(std::move(v));
    }
    return Subspace<F>::span(inter, n);
}

/// V_M(theta) = ker(M - theta I).
template <FieldScalar F>
Subspace<F> eigenspace(const Matrix<F>& m, const F& theta) {
    if (!m.is_square()) throw std::invalid_argument("eigenspace of a non-square matrix");
    Matrix<F> shifted = m;
    for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) = shifted(i, i) - theta;
    return Subspace<F>::span(kernel(shifted), m.rows());
}

/// Image of a subspace under a linear map.
template <FieldScalar F>
Subspace<F> image(const Matrix<F>& m, const Subspace<F>& s) {
    std::vector<Vector<F>> out;
    for (const auto& v : s.basis()) out.push_back(m * v);
    return Subspace<F>::span(out, m.rows());
}

/// An ordered direct-sum decomposition V = V_0 + ... + V_d.
template <FieldScalar F>
struct Decomposition {
    std::size_t ambient_dim = 0;
    std::vector<Subspace<F>> components;

    std::size_t diameter() const { return components.empty() ? 0 : components.size() - 1; }

    /// Component n, with out-of-range indices treated as the zero subspace.
    Subspace<F> component(long n) const {
        if (n < 0 || n >= static_cast<long>(components.size())) return Subspace<F>::zero(ambient_dim);
        return components[static_cast<std::size_t>(n)];
    }

    /// Sum of components lo..hi (clamped to the valid range).
    Subspace<F> range_sum(long lo, long hi) const {
        std::vector<Subspace<F>> parts;
        for (long k = std::max(lo, 0L); k <= hi && k < static_cast<long>(components.size()); ++k)
            parts.push_back(components[static_cast<std::size_t>(k)]);
        if (parts.empty()) return Subspace<F>::zero(ambient_dim);
        return subspace_sum(parts, ambient_dim).sum;
    }

    Decomposition inversion() const { return {ambient_dim, {components.rbegin(), components.rend()}}; }

    std::vector<std::size_t> shape() const {
        std::vector<std::size_t> s;
        for (const auto& c : components) s.push_back(c.dim());
        return s;
    }

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// A flag U_0 ⊆ U_1 ⊆ ... ⊆ U_d.
template <FieldScalar F>
struct Flag {
    std::size_t ambient_dim = 0;
    std::vector<Subspace<F>> components;

    std::size_t diameter() const { return components.empty() ? 0 : components.size() - 1; }

    /// The flag induced by a decomposition: U_n = V_0 + ... + V_n.
    static Flag induced_by(const Decomposition<F>& dec) {
        Flag f{dec.ambient_dim, {}};
        std::vector<Vector<F>> acc;
        for (const auto& c : dec.components) {
            for (auto& v : c.basis()) acc.push_back(std::move(v));
            f.components.push_back(Subspace<F>::span(acc, dec.ambient_dim));
        }
        return f;
    }

    friend bool operator==(const Flag&, const Flag&) = default;
};

/// Eigenspaces for the given candidate eigenvalues if they sum directly to
/// the whole space, i.e. m is semisimple with spectrum inside candidates.
/// Zero-dimensional components are rejected unless allow_empty is set.
template <FieldScalar F>
std::optional<Decomposition<F>> spectrum_decompose(const Matrix<F>& m, const std::vector<F>& candidates,
                                                   bool allow_empty = false) {
    if (!m.is_square()) throw std::invalid_argument("spectrum of a non-square matrix");
    for (std::size_t i = 0; i < candidates.size(); ++i)
        for (std::size_t j = i + 1; j < candidates.size(); ++j)
            if (candidates[i] == candidates[j]) throw std::invalid_argument("duplicate candidate eigenvalue");
    const std::size_t n = m.rows();
    Decomposition<F> dec{n, {}};
    std::size_t total = 0;
    for (const auto& theta : candidates) {
        auto e = eigenspace(m, theta);
        if (e.is_zero() && !allow_empty) return std::nullopt;
        total += e.dim();
        dec.components.push_back(std::move(e));
    }
    // Eigenspaces for distinct eigenvalues are always independent.
    if (total != n) return std::nullopt;
    return dec;
}

/// Projection onto component k along the others.
template <FieldScalar F>
Matrix<F> projection(const Decomposition<F>& dec, std::size_t k) {
    const std::size_t n = dec.ambient_dim;
    std::vector<Vector<F>> cols;
    std::size_t begin = 0, end = 0;
    for (std::size_t c = 0; c < dec.components.size(); ++c) {
        if (c == k) begin = cols.size();
        for (auto& v : dec.components[c].basis()) cols.push_back(std::move(v));
        if (c == k) end = cols.size();
    }
    auto p = Matrix<F>::from_columns(cols, n);
    auto pinv = inverse(p);
    if (!pinv) throw std::invalid_argument("components do not form a direct sum of the whole space");
    Matrix<F> mask(n, n);
    for (std::size_t i = begin; i < end; ++i) mask(i, i) = F(1);
    return p * mask * *pinv;
}

/// The operator acting as eigenvalues[n] on component n.
template <FieldScalar F>
Matrix<F> operator_from_decomposition(const Decomposition<F>& dec, const std::vector<F>& eigenvalues) {
    if (eigenvalues.size() != dec.components.size()) throw std::invalid_argument("eigenvalue count mismatch");
    const std::size_t n = dec.ambient_dim;
    std::vector<Vector<F>> cols;
    std::vector<F> diag;
    for (std::size_t c = 0; c < dec.components.size(); ++c)
        for (auto& v : dec.components[c].basis()) {
            cols.push_back(std::move(v));
            diag.push_back(eigenvalues[c]);
        }
    auto p = Matrix<F>::from_columns(cols, n);
    auto pinv = inverse(p);
    if (!pinv) throw std::invalid_argument("components do not form a direct sum of the whole space");
    return p * Matrix<F>::diagonal(diag) * *pinv;
}

}  // namespace qtetra
