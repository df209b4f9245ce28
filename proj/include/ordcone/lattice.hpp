// Lattice algorithms over the integers: extended gcd / Bezout coefficients,
// primitive vectors, Hermite and Smith normal forms with exact unimodular
// transforms, and lattice bases for hyperplane kernels.
//
// Determinism: pivot selection always takes the candidate of smallest
// absolute value, ties broken by smallest row (then column) index, and all
// eliminations are extended-gcd combinations or integer shears. Re-running
// any routine on equal input yields identical output.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "int_linalg.hpp"
#include "qlinalg.hpp"
#include "rational.hpp"

namespace ordcone {

struct ExtGcdResult {
    Int g;  // gcd, always >= 0
    Int x;  // x*a + y*b = g
    Int y;
};

inline ExtGcdResult ext_gcd(const Int& a, const Int& b) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        const Int q = old_r / r;  // truncated division; any quotient keeps the identity
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

struct BezoutResult {
    Int gcd;                 // >= 0; zero only for the zero vector
    IntVector coefficients;  // coefficients . v == gcd
};

// Left-to-right fold of the two-argument extended gcd over the entries.
inline BezoutResult bezout(const IntVector& v) {
    Int g = 0;
    std::vector<Int> coeffs;
    coeffs.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const ExtGcdResult e = ext_gcd(g, v[i]);
        for (Int& c : coeffs) c *= e.x;
        coeffs.push_back(e.y);
        g = e.g;
    }
    return {g, IntVector(std::move(coeffs))};
}

inline IntVector primitive_vector(const IntVector& v) {
    if (v.is_zero()) throw std::invalid_argument("primitive_vector: zero vector has no primitive form");
    const Int g = bezout(v).gcd;
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

namespace detail {

// Keeps (u, uinv) synchronized with row operations applied to a working
// matrix: every row op on the working matrix and u is mirrored by the inverse
// column op on uinv, so u * uinv == I at all times.
struct RowOpTracker {
    IntMatrix* work;
    IntMatrix* u;
    IntMatrix* uinv;

    void swap(std::size_t a, std::size_t b) {
        if (a == b) return;
        work->swap_rows(a, b);
        u->swap_rows(a, b);
        uinv->swap_columns(a, b);
    }
    void negate(std::size_t a) {
        work->negate_row(a);
        u->negate_row(a);
        uinv->negate_column(a);
    }
    // row[dst] += c * row[src]
    void shear(std::size_t dst, std::size_t src, const Int& c) {
        if (c == 0) return;
        work->add_row_multiple(dst, src, c);
        u->add_row_multiple(dst, src, c);
        uinv->add_column_multiple(src, dst, -c);
    }
    // Unimodular 2x2 combination driven by ext_gcd(a, b) where a = work(r1, col)
    // and b = work(r2, col): afterwards work(r1, col) == gcd(a, b) and
    // work(r2, col) == 0.
    void euclid_combine(std::size_t r1, std::size_t r2, const Int& a, const Int& b) {
        const ExtGcdResult e = ext_gcd(a, b);
        const Int p = a / e.g, q = b / e.g;
        apply_pair(*work, r1, r2, e.x, e.y, -q, p);
        apply_pair(*u, r1, r2, e.x, e.y, -q, p);
        // Inverse transform on uinv columns: S^-1 = [[p, -y], [q, x]].
        for (std::size_t i = 0; i < uinv->rows(); ++i) {
            const Int c1 = (*uinv)(i, r1), c2 = (*uinv)(i, r2);
            (*uinv)(i, r1) = p * c1 + q * c2;
            (*uinv)(i, r2) = -e.y * c1 + e.x * c2;
        }
    }

private:
    static void apply_pair(IntMatrix& m, std::size_t r1, std::size_t r2, const Int& s11,
                           const Int& s12, const Int& s21, const Int& s22) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Int a = m(r1, j), b = m(r2, j);
            m(r1, j) = s11 * a + s12 * b;
            m(r2, j) = s21 * a + s22 * b;
        }
    }
};

// Same bookkeeping for column operations (right multiplication): v picks up
// the same column ops, vinv the inverse row ops.
struct ColOpTracker {
    IntMatrix* work;
    IntMatrix* v;
    IntMatrix* vinv;

    void swap(std::size_t a, std::size_t b) {
        if (a == b) return;
        work->swap_columns(a, b);
        v->swap_columns(a, b);
        vinv->swap_rows(a, b);
    }
    void negate(std::size_t a) {
        work->negate_column(a);
        v->negate_column(a);
        vinv->negate_row(a);
    }
    // col[dst] += c * col[src]
    void shear(std::size_t dst, std::size_t src, const Int& c) {
        if (c == 0) return;
        work->add_column_multiple(dst, src, c);
        v->add_column_multiple(dst, src, c);
        vinv->add_row_multiple(src, dst, -c);
    }
    // a = work(row, c1), b = work(row, c2); afterwards work(row, c1) == gcd(a, b)
    // and work(row, c2) == 0.
    void euclid_combine(std::size_t c1, std::size_t c2, const Int& a, const Int& b) {
        const ExtGcdResult e = ext_gcd(a, b);
        const Int p = a / e.g, q = b / e.g;
        apply_pair(*work, c1, c2, e.x, e.y, -q, p);
        apply_pair(*v, c1, c2, e.x, e.y, -q, p);
        // Inverse transform on vinv rows.
        for (std::size_t j = 0; j < vinv->cols(); ++j) {
            const Int r1 = (*vinv)(c1, j), r2 = (*vinv)(c2, j);
            (*vinv)(c1, j) = p * r1 + q * r2;
            (*vinv)(c2, j) = -e.y * r1 + e.x * r2;
        }
    }

private:
    static void apply_pair(IntMatrix& m, std::size_t c1, std::size_t c2, const Int& s11,
                           const Int& s12, const Int& s21, const Int& s22) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            const Int a = m(i, c1), b = m(i, c2);
            m(i, c1) = s11 * a + s12 * b;
            m(i, c2) = s21 * a + s22 * b;
        }
    }
};

inline Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace detail

struct HermiteResult {
    IntMatrix h;             // row-style Hermite normal form
    UnimodularMap transform;  // transform.matrix() * input == h
};

// Row-style Hermite normal form: pivots positive with strictly increasing
// pivot columns, entries above each pivot reduced into [0, pivot), zero rows
// at the bottom.
inline HermiteResult hermite_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix uinv = IntMatrix::identity(rows);
    detail::RowOpTracker ops{&h, &u, &uinv};

    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t best = rows;
        for (std::size_t i = pivot_row; i < rows; ++i) {
            if (h(i, col) == 0) continue;
            if (best == rows || detail::int_abs(h(i, col)) < detail::int_abs(h(best, col)))
                best = i;
        }
        if (best == rows) continue;
        ops.swap(pivot_row, best);
        for (std::size_t i = pivot_row + 1; i < rows; ++i) {
            if (h(i, col) == 0) continue;
            const Int a = h(pivot_row, col), b = h(i, col);
            if (b % a == 0)
                ops.shear(i, pivot_row, -(b / a));
            else
                ops.euclid_combine(pivot_row, i, a, b);
        }
        if (h(pivot_row, col) < 0) ops.negate(pivot_row);
        pivot_cols.push_back(col);
        ++pivot_row;
    }
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
        const Int p = h(k, pivot_cols[k]);
        for (std::size_t i = 0; i < k; ++i) {
            const Int q = floor_div(h(i, pivot_cols[k]), p);
            ops.shear(i, k, -q);
        }
    }
    return {h, UnimodularMap(std::move(u), std::move(uinv))};
}

struct SmithResult {
    IntMatrix d;                  // diagonal, d(0,0) | d(1,1) | ..., all >= 0
    UnimodularMap row_transform;  // row_transform.matrix() * input * col_transform.matrix() == d
    UnimodularMap col_transform;
};

inline SmithResult smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(rows), uinv = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols), vinv = IntMatrix::identity(cols);
    detail::RowOpTracker row_ops{&a, &u, &uinv};
    detail::ColOpTracker col_ops{&a, &v, &vinv};

    const std::size_t tmax = rows < cols ? rows : cols;
    for (std::size_t t = 0; t < tmax; ++t) {
        // Pivot: smallest absolute value in the trailing submatrix, ties by
        // lexicographically smallest (row, column).
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (a(i, j) == 0) continue;
                if (pi == rows || detail::int_abs(a(i, j)) < detail::int_abs(a(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == rows) break;  // trailing submatrix is zero
        row_ops.swap(t, pi);
        col_ops.swap(t, pj);

        bool pivot_settled = false;
        while (!pivot_settled) {
            // Clear column t below the pivot.
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                const Int p = a(t, t), b = a(i, t);
                if (b % p == 0)
                    row_ops.shear(i, t, -(b / p));
                else
                    row_ops.euclid_combine(t, i, p, b);
            }
            // Clear row t to the right of the pivot.
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                const Int p = a(t, t), b = a(t, j);
                if (b % p == 0)
                    col_ops.shear(j, t, -(b / p));
                else
                    col_ops.euclid_combine(t, j, p, b);
            }
            // Column combinations can reintroduce entries below the pivot.
            pivot_settled = true;
            for (std::size_t i = t + 1; i < rows && pivot_settled; ++i)
                if (a(i, t) != 0) pivot_settled = false;
            if (!pivot_settled) continue;
            // Divisibility: the pivot must divide the whole trailing block.
            for (std::size_t i = t + 1; i < rows && pivot_settled; ++i)
                for (std::size_t j = t + 1; j < cols && pivot_settled; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        row_ops.shear(t, i, 1);  // pull the offending row up, then re-clean
                        pivot_settled = false;
                    }
        }
        if (a(t, t) < 0) row_ops.negate(t);
    }
    return {a, UnimodularMap(std::move(u), std::move(uinv)),
            UnimodularMap(std::move(v), std::move(vinv))};
}

// Z-basis of { x : r . x == 0 } for a primitive vector r, read off the
// Hermite transform of r as a column: the transform maps r to the first unit
// vector, so its rows beyond the first span the kernel lattice.
inline std::vector<IntVector> kernel_lattice_basis(const IntVector& r) {
    if (bezout(r).gcd != 1)
        throw std::invalid_argument("kernel_lattice_basis: vector must be primitive");
    IntMatrix col(r.size(), 1);
    for (std::size_t i = 0; i < r.size(); ++i) col(i, 0) = r[i];
    const HermiteResult hnf = hermite_normal_form(col);
    std::vector<IntVector> basis;
    basis.reserve(r.size() - 1);
    for (std::size_t i = 1; i < r.size(); ++i) basis.push_back(hnf.transform.matrix().row(i));
    return basis;
}

}  // namespace ordcone
