#pragma once

// Dense matrices over an exact field and the Gaussian elimination kernel
// shared by every subspace computation.

#include "qtetra/scalars/field.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qtetra {

template <FieldScalar F>
using Vector = std::vector<F>;

template <FieldScalar F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

    Matrix(std::initializer_list<std::initializer_list<F>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    static Matrix diagonal(const std::vector<F>& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    /// Matrix whose columns are the given vectors.
    static Matrix from_columns(const std::vector<Vector<F>>& cols, std::size_t n) {
        Matrix m(n, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != n) throw std::invalid_argument("column length mismatch");
            for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector<F> row(std::size_t i) const {
        return Vector<F>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                         data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    Vector<F> column(std::size_t j) const {
        Vector<F> v;
        v.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
        return v;
    }

    /// Row-major entries, used when matrices are treated as vectors.
    const std::vector<F>& entries() const { return data_; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!qtetra::is_zero(x)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = data_[k] + o.data_[k];
        return *this;
    }

    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = data_[k] - o.data_[k];
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.data_) x = -x;
        return r;
    }

    friend Matrix operator*(const F& c, Matrix m) {
        for (auto& x : m.data_) x = c * x;
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                if (qtetra::is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const F& bkj = b(k, j);
                    if (qtetra::is_zero(bkj)) continue;
                    r(i, j) = r(i, j) + aik * bkj;
                }
            }
        return r;
    }

    friend Vector<F> operator*(const Matrix& a, const Vector<F>& v) {
        if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
        Vector<F> r(a.rows_, F(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (!qtetra::is_zero(a(i, k)) && !qtetra::is_zero(v[k])) r[i] = r[i] + a(i, k) * v[k];
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Entries are mapped through fn, e.g. to specialize q.
    template <class Fn>
    auto map(Fn&& fn) const {
        using G = decltype(fn(std::declval<const F&>()));
        Matrix<G> r(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = fn((*this)(i, j));
        return r;
    }

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

template <FieldScalar F>
Matrix<F> power(const Matrix<F>& m, unsigned k) {
    Matrix<F> r = Matrix<F>::identity(m.rows());
    for (unsigned i = 0; i < k; ++i) r = r * m;
    return r;
}

/// Kronecker product, left factor index major.
template <FieldScalar F>
Matrix<F> kron(const Matrix<F>& a, const Matrix<F>& b) {
    Matrix<F> r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (is_zero(a(i, j))) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

// Pivot selection prefers the entry with the smallest representation, which
// keeps intermediate expression growth down during elimination.
inline std::size_t pivot_cost(const RationalFunction& x) {
    std::size_t c = static_cast<std::size_t>(x.numerator().degree() + x.denominator().degree() + 2) * 64;
    for (const auto& a : x.numerator().coeffs()) c += mpz_sizeinbase(a.get_num_mpz_t(), 2) + mpz_sizeinbase(a.get_den_mpz_t(), 2);
    return c;
}

inline std::size_t pivot_cost(const Rational& x) {
    return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}

/// Reduced row echelon form. Pivot entries are 1 and pivot columns are
/// otherwise zero, so the result is unique for a given row space.
template <FieldScalar F>
struct RowEchelon {
    Matrix<F> reduced;                 // nonzero rows only
    std::vector<std::size_t> pivots;   // pivot column of each row
};

template <FieldScalar F>
RowEchelon<F> row_echelon(Matrix<F> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::optional<std::size_t> best;
        std::size_t best_cost = 0;
        for (std::size_t i = r; i < rows; ++i) {
            if (is_zero(m(i, c))) continue;
            std::size_t cost = pivot_cost(m(i, c));
            if (!best || cost < best_cost) {
                best = i;
                best_cost = cost;
            }
        }
        if (!best) continue;
        if (*best != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(*best, j));
        const F inv = F(1) / m(r, c);
        for (std::size_t j = c; j < cols; ++j)
            if (!is_zero(m(r, j))) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            const F f = m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!is_zero(m(r, j))) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix<F> out(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = std::move(m(i, j));
    return {std::move(out), std::move(pivots)};
}

template <FieldScalar F>
std::size_t rank(const Matrix<F>& m) {
    return row_echelon(m).pivots.size();
}

/// Basis of {v : m v = 0}, one vector per free column, read off the RREF.
template <FieldScalar F>
std::vector<Vector<F>> kernel(const Matrix<F>& m) {
    auto [red, pivots] = row_echelon(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector<F>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vector<F> v(cols, F(0));
        v[free] = F(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <FieldScalar F>
F determinant(Matrix<F> m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    F det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::optional<std::size_t> best;
        std::size_t best_cost = 0;
        for (std::size_t i = c; i < n; ++i) {
            if (is_zero(m(i, c))) continue;
            std::size_t cost = pivot_cost(m(i, c));
            if (!best || cost < best_cost) {
                best = i;
                best_cost = cost;
            }
        }
        if (!best) return F(0);
        if (*best != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(*best, j));
            det = -det;
        }
        det = det * m(c, c);
        const F inv = F(1) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(m(i, c))) continue;
            const F f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j)
                if (!is_zero(m(c, j))) m(i, j) = m(i, j) - f * m(c, j);
        }
    }
    return det;
}

/// Inverse via RREF of [m | I]; empty optional when m is singular.
template <FieldScalar F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix<F> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = F(1);
    }
    auto [red, pivots] = row_echelon(std::move(aug));
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix<F> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = red(i, n + j);
    return inv;
}

}  // namespace qtetra
