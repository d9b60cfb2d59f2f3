#pragma once

// Intertwiners between two matrix representations of the same algebra.

#include "qtetra/exactla/subspace.hpp"
#include "qtetra/rep.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace qtetra {

template <FieldScalar F>
struct IntertwinerSpace {
    std::size_t dimension = 0;             // size of the representations
    std::vector<Matrix<F>> basis;          // basis of {S : A(g) S = S B(g)}
    std::optional<Matrix<F>> witness;      // an invertible element, if one was found

    bool isomorphic() const { return witness.has_value(); }

    /// The space as a subspace of the n^2-dimensional matrix space (row-major vec).
    Subspace<F> as_subspace() const {
        std::vector<Vector<F>> v;
        for (const auto& s : basis) v.push_back(s.entries());
        return Subspace<F>::span(v, dimension * dimension);
    }
};

namespace detail {

// Restricts span(current) to the solutions of L S = S R.
template <FieldScalar F>
std::vector<Matrix<F>> restrict_commuting(const std::vector<Matrix<F>>& current, const Matrix<F>& left,
                                          const Matrix<F>& right) {
    if (current.empty()) return {};
    const std::size_t m = current.front().rows();
    const std::size_t cols = current.front().cols();
    // Column k of the system holds vec(L S_k - S_k R).
    Matrix<F> system(m * cols, current.size());
    for (std::size_t k = 0; k < current.size(); ++k) {
        Matrix<F> r = left * current[k] - current[k] * right;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < cols; ++j) system(i * cols + j, k) = r(i, j);
    }
    std::vector<Matrix<F>> out;
    for (const auto& coeffs : kernel(system)) {
        Matrix<F> s(m, cols);
        for (std::size_t k = 0; k < current.size(); ++k)
            if (!is_zero(coeffs[k])) s += coeffs[k] * current[k];
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace detail

/// Solves L_g S = S R_g for every pair, starting from all n x m matrices.
template <FieldScalar F>
std::vector<Matrix<F>> solve_commuting(const std::vector<std::pair<Matrix<F>, Matrix<F>>>& pairs, std::size_t rows,
                                       std::size_t cols) {
    std::vector<Matrix<F>> current;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            Matrix<F> e(rows, cols);
            e(i, j) = F(1);
            current.push_back(std::move(e));
        }
    for (const auto& [l, r] : pairs) {
        if (l.rows() != rows || l.cols() != rows || r.rows() != cols || r.cols() != cols)
            throw std::invalid_argument("matrix sizes do not match the unknown");
        current = detail::restrict_commuting(current, l, r);
        if (current.empty()) break;
    }
    return current;
}

/// Looks for an invertible element of span(basis): each basis element, then
/// a fixed sequence of integer combinations.
template <FieldScalar F>
std::optional<Matrix<F>> invertible_element(const std::vector<Matrix<F>>& basis) {
    if (basis.empty()) return std::nullopt;
    if (!basis.front().is_square()) return std::nullopt;
    for (const auto& s : basis)
        if (!is_zero(determinant(s))) return s;
    if (basis.size() == 1) return std::nullopt;
    for (long trial = 1; trial <= 4; ++trial) {
        Matrix<F> s(basis.front().rows(), basis.front().cols());
        long c = 1;
        for (const auto& b : basis) {
            s += F(c) * b;
            c = c * (trial + 1) + 1;
        }
        if (!is_zero(determinant(s))) return s;
    }
    return std::nullopt;
}

/// {S : A(g) S = S B(g) for every generator g}. The modules are isomorphic
/// iff the space contains an invertible element; a witness is reported when found.
template <FieldScalar F>
IntertwinerSpace<F> intertwiner_space(const MatrixRep<F>& a, const MatrixRep<F>& b) {
    if (a.algebra != b.algebra) throw std::invalid_argument("representations of different algebras");
    if (a.dimension != b.dimension) throw std::invalid_argument("representations of different dimensions");
    a.validate();
    b.validate();
    std::vector<std::pair<Matrix<F>, Matrix<F>>> pairs;
    for (const auto& label : generator_labels(a.algebra)) pairs.emplace_back(a.at(label), b.at(label));
    IntertwinerSpace<F> out;
    out.dimension = a.dimension;
    const std::size_t n = a.dimension;
    out.basis = solve_commuting(pairs, n, n);
    // Replace the solver's basis by the canonical one of the solution space.
    const auto canonical = out.as_subspace().basis();
    out.basis.clear();
    for (const auto& v : canonical) {
        Matrix<F> s(n, n);
        for (std::size_t k = 0; k < n * n; ++k) s(k / n, k % n) = v[k];
        out.basis.push_back(std::move(s));
    }
    out.witness = invertible_element(out.basis);
    return out;
}

}  // namespace qtetra
