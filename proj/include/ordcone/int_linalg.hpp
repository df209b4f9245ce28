// Dense integer vectors and matrices with bounds-checked access and
// immutable dimensions, plus the unimodular-map wrapper used by the lattice
// normal forms. Entries are arbitrary-precision integers; there is no
// floating point anywhere.

#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace ordcone {

class IntVector {
public:
    IntVector() = default;
    explicit IntVector(std::size_t n) : entries_(n, Int(0)) {}
    IntVector(std::initializer_list<Int> init) : entries_(init) {}
    explicit IntVector(std::vector<Int> entries) : entries_(std::move(entries)) {}

    std::size_t size() const { return entries_.size(); }

    const Int& operator[](std::size_t i) const { return entries_.at(i); }
    Int& operator[](std::size_t i) { return entries_.at(i); }

    bool operator==(const IntVector& o) const { return entries_ == o.entries_; }
    bool operator!=(const IntVector& o) const { return entries_ != o.entries_; }
    // Lexicographic; used wherever outputs are sorted for determinism.
    bool operator<(const IntVector& o) const {
        return std::lexicographical_compare(entries_.begin(), entries_.end(),
                                            o.entries_.begin(), o.entries_.end());
    }

    bool is_zero() const {
        for (const Int& x : entries_)
            if (x != 0) return false;
        return true;
    }

    bool is_componentwise_nonnegative() const {
        for (const Int& x : entries_)
            if (x < 0) return false;
        return true;
    }

    // True when *this <= o in every coordinate.
    bool componentwise_leq(const IntVector& o) const {
        if (size() != o.size()) throw std::invalid_argument("componentwise_leq: dimension mismatch");
        for (std::size_t i = 0; i < size(); ++i)
            if (entries_[i] > o.entries_[i]) return false;
        return true;
    }

    Int coordinate_sum() const {
        Int s = 0;
        for (const Int& x : entries_) s += x;
        return s;
    }

    IntVector operator+(const IntVector& o) const {
        if (size() != o.size()) throw std::invalid_argument("IntVector: dimension mismatch");
        IntVector r(size());
        for (std::size_t i = 0; i < size(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
        return r;
    }
    IntVector operator-(const IntVector& o) const {
        if (size() != o.size()) throw std::invalid_argument("IntVector: dimension mismatch");
        IntVector r(size());
        for (std::size_t i = 0; i < size(); ++i) r.entries_[i] = entries_[i] - o.entries_[i];
        return r;
    }
    IntVector operator-() const {
        IntVector r(size());
        for (std::size_t i = 0; i < size(); ++i) r.entries_[i] = -entries_[i];
        return r;
    }
    IntVector operator*(const Int& c) const {
        IntVector r(size());
        for (std::size_t i = 0; i < size(); ++i) r.entries_[i] = entries_[i] * c;
        return r;
    }
    IntVector& operator+=(const IntVector& o) { return *this = *this + o; }
    IntVector& operator-=(const IntVector& o) { return *this = *this - o; }

    Int dot(const IntVector& o) const {
        if (size() != o.size()) throw std::invalid_argument("IntVector::dot: dimension mismatch");
        Int s = 0;
        for (std::size_t i = 0; i < size(); ++i) s += entries_[i] * o.entries_[i];
        return s;
    }

    QVector to_rational() const {
        QVector r(size());
        for (std::size_t i = 0; i < size(); ++i) r[i] = Rational(entries_[i]);
        return r;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < size(); ++i) {
            if (i) s += ", ";
            s += entries_[i].str();
        }
        s += ")";
        return s;
    }

private:
    std::vector<Int> entries_;
};

inline IntVector operator*(const Int& c, const IntVector& v) { return v * c; }

class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
        IntMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows) {
        IntMatrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows)
                throw std::invalid_argument("IntMatrix::from_columns: ragged columns");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Int& operator()(std::size_t i, std::size_t j) const { return data_.at(index(i, j)); }
    Int& operator()(std::size_t i, std::size_t j) { return data_.at(index(i, j)); }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    IntVector row(std::size_t i) const {
        IntVector r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }

    IntVector column(std::size_t j) const {
        IntVector c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix::operator*: shape mismatch");
        IntMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    IntVector operator*(const IntVector& v) const {
        if (cols_ != v.size()) throw std::invalid_argument("IntMatrix::operator*: shape mismatch");
        IntVector r(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            Int s = 0;
            for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
            r[i] = s;
        }
        return r;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    // Elementary row operations (used by the normal-form algorithms).
    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) = -(*this)(a, j);
    }
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& c) {
        if (c == 0) return;
        for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += c * (*this)(src, j);
    }
    void swap_columns(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    void negate_column(std::size_t a) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) = -(*this)(i, a);
    }
    void add_column_multiple(std::size_t dst, std::size_t src, const Int& c) {
        if (c == 0) return;
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += c * (*this)(i, src);
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i) s += "; ";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += ", ";
                s += (*this)(i, j).str();
            }
        }
        s += "]";
        return s;
    }

private:
    std::size_t index(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("IntMatrix: index out of range");
        return i * cols_ + j;
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

// An invertible-over-Z change of basis, stored with its exact inverse. The
// constructor verifies both products so a UnimodularMap can never hold a
// non-unimodular pair.
class UnimodularMap {
public:
    UnimodularMap(IntMatrix matrix, IntMatrix inverse)
        : matrix_(std::move(matrix)), inverse_(std::move(inverse)) {
        if (matrix_.rows() != matrix_.cols() || inverse_.rows() != inverse_.cols() ||
            matrix_.rows() != inverse_.rows())
            throw std::invalid_argument("UnimodularMap: shapes must be square and equal");
        if (!(matrix_ * inverse_).is_identity() || !(inverse_ * matrix_).is_identity())
            throw std::invalid_argument("UnimodularMap: matrices are not mutually inverse");
    }

    static UnimodularMap identity(std::size_t n) {
        return UnimodularMap(IntMatrix::identity(n), IntMatrix::identity(n));
    }

    std::size_t dimension() const { return matrix_.rows(); }
    const IntMatrix& matrix() const { return matrix_; }
    const IntMatrix& inverse() const { return inverse_; }

    IntVector apply(const IntVector& v) const { return matrix_ * v; }
    IntVector apply_inverse(const IntVector& v) const { return inverse_ * v; }

private:
    IntMatrix matrix_;
    IntMatrix inverse_;
};

}  // namespace ordcone
