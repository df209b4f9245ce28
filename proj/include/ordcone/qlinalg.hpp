// Exact Gaussian elimination over the rationals: rank, unique solve,
// inverse, nullspace — plus a fraction-free (Bareiss) integer determinant.
// These are internal building blocks; pivoting is deterministic (first
// nonzero entry scanning rows top-down).

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "int_linalg.hpp"
#include "rational.hpp"

namespace ordcone {

using QMatrix = std::vector<QVector>;  // row-major, possibly ragged-checked at use

inline QMatrix q_matrix_from_int_rows(const std::vector<IntVector>& rows) {
    QMatrix m;
    m.reserve(rows.size());
    for (const IntVector& r : rows) m.push_back(r.to_rational());
    return m;
}

// Reduces m in place to row echelon form; returns the pivot column of each
// pivot row (row i of the result has its pivot at pivots[i]).
inline std::vector<std::size_t> q_row_echelon(QMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m[0].size();
    for (const QVector& r : m)
        if (r.size() != cols) throw std::invalid_argument("q_row_echelon: ragged matrix");
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot_row = row;
        while (pivot_row < m.size() && m[pivot_row][col] == 0) ++pivot_row;
        if (pivot_row == m.size()) continue;
        std::swap(m[row], m[pivot_row]);
        const Rational p = m[row][col];
        for (std::size_t j = col; j < cols; ++j) m[row][j] /= p;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rational f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t q_rank(QMatrix m) { return q_row_echelon(m).size(); }

inline std::size_t q_rank_of_int_rows(const std::vector<IntVector>& rows) {
    return q_rank(q_matrix_from_int_rows(rows));
}

// Solves sum_j x_j * columns[j] = target when the columns are linearly
// independent; returns nullopt when inconsistent. With independent columns
// the solution is unique.
inline std::optional<QVector> q_solve_columns(const std::vector<QVector>& columns,
                                              const QVector& target) {
    const std::size_t n = target.size();
    for (const QVector& c : columns)
        if (c.size() != n) throw std::invalid_argument("q_solve_columns: dimension mismatch");
    QMatrix aug(n, QVector(columns.size() + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < columns.size(); ++j) aug[i][j] = columns[j][i];
        aug[i][columns.size()] = target[i];
    }
    std::vector<std::size_t> pivots = q_row_echelon(aug);
    QVector x(columns.size(), Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == columns.size()) return std::nullopt;  // 0 = 1 row: inconsistent
        x[pivots[i]] = aug[i][columns.size()];
    }
    // Guard against dependent columns silently producing a non-solution.
    for (std::size_t i = 0; i < n; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < columns.size(); ++j) s += columns[j][i] * x[j];
        if (s != target[i]) return std::nullopt;
    }
    return x;
}

// Basis of { x : row . x = 0 for every row }.
inline std::vector<QVector> q_nullspace(const QMatrix& rows, std::size_t cols) {
    for (const QVector& r : rows)
        if (r.size() != cols) throw std::invalid_argument("q_nullspace: dimension mismatch");
    QMatrix m = rows;
    std::vector<std::size_t> pivots = q_row_echelon(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<QVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVector v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline QVector q_matvec(const QMatrix& m, const QVector& v) {
    QVector r(m.size(), Rational(0));
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != v.size()) throw std::invalid_argument("q_matvec: dimension mismatch");
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    }
    return r;
}

inline std::optional<QMatrix> q_inverse(const QMatrix& m) {
    const std::size_t n = m.size();
    for (const QVector& r : m)
        if (r.size() != n) throw std::invalid_argument("q_inverse: matrix must be square");
    QMatrix aug(n, QVector(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    std::vector<std::size_t> pivots = q_row_echelon(aug);
    if (pivots.size() != n) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        if (pivots[i] != i) return std::nullopt;  // singular left block
    QMatrix inv(n, QVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

// Exact inverse of a unimodular integer matrix; throws if the argument is not
// invertible over the integers.
inline IntMatrix int_inverse_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("int_inverse_unimodular: matrix must be square");
    QMatrix qm(m.rows(), QVector(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) qm[i][j] = Rational(m(i, j));
    std::optional<QMatrix> inv = q_inverse(qm);
    if (!inv) throw std::invalid_argument("int_inverse_unimodular: singular matrix");
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& e = (*inv)[i][j];
            if (rat_den(e) != 1)
                throw std::invalid_argument("int_inverse_unimodular: matrix is not unimodular");
            r(i, j) = rat_num(e);
        }
    return r;
}

// Fraction-free determinant (Bareiss).
inline Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix must be square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            a.swap_rows(k, swap_row);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

}  // namespace ordcone
