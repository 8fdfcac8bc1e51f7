#ifndef MULTIFLAG_MATRIX_HPP
#define MULTIFLAG_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "field.hpp"

namespace multiflag {

/*
 * Dense row-major matrix over an exact field scalar K. K must provide
 * +,-,*,/, unary -, is_zero(), additive_identity(), multiplicative_identity().
 * Matrices are nonempty by construction.
 */
template <class K>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const K& fill)
        : rows_(rows), cols_(cols), e_(rows * cols, fill) {
        if (rows == 0 || cols == 0)
            throw field_error("EmptyMatrix", "matrix dimensions must be positive");
    }

    static Matrix identity(std::size_t n, const K& like) {
        Matrix m(n, n, like.additive_identity());
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = like.multiplicative_identity();
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<K>>& rows) {
        if (rows.empty() || rows[0].empty())
            throw field_error("EmptyMatrix", "matrix dimensions must be positive");
        Matrix m(rows.size(), rows[0].size(), rows[0][0].additive_identity());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_)
                throw field_error("ShapeMismatch", "ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_columns(const std::vector<std::vector<K>>& cols) {
        if (cols.empty() || cols[0].empty())
            throw field_error("EmptyMatrix", "matrix dimensions must be positive");
        Matrix m(cols[0].size(), cols.size(), cols[0][0].additive_identity());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != m.rows_)
                throw field_error("ShapeMismatch", "ragged columns");
            for (std::size_t i = 0; i < m.rows_; ++i) m.at(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const K& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    K zero() const { return e_[0].additive_identity(); }
    K one() const { return e_[0].multiplicative_identity(); }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw field_error("ShapeMismatch", "matrix product shape");
        Matrix r(rows_, o.cols_, zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
            }
        return r;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        if (v.size() != cols_) throw field_error("ShapeMismatch", "matrix-vector shape");
        std::vector<K> r(rows_, zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero()) r[i] = r[i] + at(i, j) * v[j];
        return r;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<K> e_;
};

template <class K>
struct RrefResult {
    Matrix<K> reduced;
    std::vector<std::size_t> pivots;  // strictly increasing column indices
    std::size_t rank;
    Matrix<K> transform;  // transform * input = reduced, exactly
};

/*
 * Reduced row echelon form by exact Gauss-Jordan. Pivoting is deterministic:
 * leftmost nonzero column, topmost nonzero entry.
 */
template <class K>
RrefResult<K> rref(const Matrix<K>& m) {
    Matrix<K> a = m;
    Matrix<K> t = Matrix<K>::identity(m.rows(), m.zero());
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pr = row;
        while (pr < a.rows() && a.at(pr, col).is_zero()) ++pr;
        if (pr == a.rows()) continue;
        if (pr != row) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(row, j), a.at(pr, j));
            for (std::size_t j = 0; j < t.cols(); ++j) std::swap(t.at(row, j), t.at(pr, j));
        }
        K inv = a.one() / a.at(row, col);
        for (std::size_t j = 0; j < a.cols(); ++j) a.at(row, j) = a.at(row, j) * inv;
        for (std::size_t j = 0; j < t.cols(); ++j) t.at(row, j) = t.at(row, j) * inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a.at(i, col).is_zero()) continue;
            K f = a.at(i, col);
            for (std::size_t j = 0; j < a.cols(); ++j)
                a.at(i, j) = a.at(i, j) - f * a.at(row, j);
            for (std::size_t j = 0; j < t.cols(); ++j)
                t.at(i, j) = t.at(i, j) - f * t.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return RrefResult<K>{std::move(a), pivots, pivots.size(), std::move(t)};
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
    return rref(m).rank;
}

/*
 * One exact solution of A x = b if consistent (free variables zeroed),
 * std::nullopt otherwise.
 */
template <class K>
std::optional<std::vector<K>> solve(const Matrix<K>& a, const std::vector<K>& b) {
    if (b.size() != a.rows()) throw field_error("ShapeMismatch", "solve rhs length");
    auto r = rref(a);
    std::vector<K> rb(b.size(), a.zero());
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!r.transform.at(i, j).is_zero()) rb[i] = rb[i] + r.transform.at(i, j) * b[j];
    // inconsistent iff a zero row of the reduced matrix has nonzero rhs
    for (std::size_t i = r.rank; i < a.rows(); ++i)
        if (!rb[i].is_zero()) return std::nullopt;
    std::vector<K> x(a.cols(), a.zero());
    for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = rb[i];
    return x;
}

/*
 * Basis of the null space, one vector per non-pivot column, in column order.
 * Each basis vector has its free coordinate equal to 1.
 */
template <class K>
std::vector<std::vector<K>> kernel_basis(const Matrix<K>& a) {
    auto r = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<std::vector<K>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<K> v(a.cols(), a.zero());
        v[free] = a.one();
        for (std::size_t i = 0; i < r.rank; ++i)
            v[r.pivots[i]] = -r.reduced.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class K>
struct Circuit {
    std::size_t index;                 // non-basis vector index
    std::vector<std::size_t> support;  // basis indices with nonzero coefficient
    std::vector<K> coefficients;       // matching support order
};

template <class K>
struct FundamentalCircuits {
    std::vector<std::size_t> basis;  // greedy leftmost maximal independent subset
    std::vector<Circuit<K>> circuits;
};

/*
 * Greedy leftmost basis of a family of nonzero vectors and the unique
 * expansion of each non-basis vector in that basis.
 */
template <class K>
FundamentalCircuits<K> fundamental_circuits(const std::vector<std::vector<K>>& vectors) {
    if (vectors.empty()) throw field_error("EmptyMatrix", "no vectors");
    const std::size_t dim = vectors[0].size();
    for (const auto& v : vectors) {
        if (v.size() != dim) throw field_error("ShapeMismatch", "mixed dimensions");
        bool zero = true;
        for (const auto& x : v) if (!x.is_zero()) { zero = false; break; }
        if (zero) throw field_error("ZeroVector", "zero vector in circuit computation");
    }
    FundamentalCircuits<K> out;
    std::vector<std::vector<K>> chosen;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        auto trial = chosen;
        trial.push_back(vectors[i]);
        if (rank(Matrix<K>::from_columns(trial)) == trial.size()) {
            out.basis.push_back(i);
            chosen = std::move(trial);
        }
    }
    auto basis_mat = Matrix<K>::from_columns(chosen);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (std::find(out.basis.begin(), out.basis.end(), i) != out.basis.end()) continue;
        auto coeff = solve(basis_mat, vectors[i]);
        // non-basis vectors are dependent on the greedy prefix, so always solvable
        Circuit<K> c;
        c.index = i;
        for (std::size_t b = 0; b < out.basis.size(); ++b) {
            if (!(*coeff)[b].is_zero()) {
                c.support.push_back(out.basis[b]);
                c.coefficients.push_back((*coeff)[b]);
            }
        }
        out.circuits.push_back(std::move(c));
    }
    return out;
}

}  // namespace multiflag

#endif
