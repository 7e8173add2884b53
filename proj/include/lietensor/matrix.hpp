#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "lietensor/rational.hpp"

namespace lietensor {

using Vector = std::vector<Rational>;

inline bool is_zero(std::span<const Rational> v) {
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

/// Dense matrix of exact rationals. Immutable in spirit: operations
/// return new values.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    /// Convenience builder for tests and fixtures.
    static Matrix from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
        Matrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
        std::size_t r = 0;
        for (const auto& row : rows) {
            std::size_t c = 0;
            for (long long x : row)
                m(r, c++) = x;
            ++r;
        }
        return m;
    }

    static Matrix from_row_vectors(std::vector<Vector> rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < cols; ++c)
                m(r, c) = std::move(rows[r][c]);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    Vector row_copy(std::size_t r) const {
        return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                      data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }

    bool is_zero() const {
        return lietensor::is_zero(data_);
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw ValidationError("matrix product: inner dimensions differ");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Rational& bkj = b(k, j);
                    if (bkj != 0)
                        out(i, j) += aik * bkj;
                }
            }
        return out;
    }

    Vector apply(std::span<const Rational> v) const {
        if (v.size() != cols_)
            throw ValidationError("matrix apply: length mismatch");
        Vector out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0 && v[j] != 0)
                    out[i] += (*this)(i, j) * v[j];
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        for (std::size_t r = 0; r < m.rows_; ++r) {
            os << (r ? "\n[" : "[");
            for (std::size_t c = 0; c < m.cols_; ++c)
                os << (c ? " " : "") << to_string(m(r, c));
            os << "]";
        }
        return os;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

/// Incremental Gauss-Jordan elimination. Maintains a reduced row echelon
/// basis (pivots 1, pivot columns cleared, rows ordered by pivot) while
/// vectors are inserted one at a time, so membership tests and fixpoint
/// loops stay cheap.
class RowReducer {
public:
    explicit RowReducer(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<Vector>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Residual of v after elimination against the current basis.
    Vector reduce(Vector v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational& c = v[pivots_[r]];
            if (c == 0)
                continue;
            Rational coef = c; // v[pivot] is overwritten below
            for (std::size_t j = 0; j < cols_; ++j)
                if (rows_[r][j] != 0)
                    v[j] -= coef * rows_[r][j];
        }
        return v;
    }

    bool contains(Vector v) const { return lietensor::is_zero(reduce(std::move(v))); }

    /// Inserts v into the span; returns true if the rank grew.
    bool insert(Vector v) {
        v = reduce(std::move(v));
        std::size_t p = 0;
        while (p < cols_ && v[p] == 0)
            ++p;
        if (p == cols_)
            return false;
        const Rational inv = v[p];
        for (auto& x : v)
            if (x != 0)
                x /= inv;
        // clear the new pivot column in existing rows
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational c = rows_[r][p];
            if (c == 0)
                continue;
            for (std::size_t j = 0; j < cols_; ++j)
                if (v[j] != 0)
                    rows_[r][j] -= c * v[j];
        }
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
        pivots_.insert(pivots_.begin() + pos, p);
        rows_.insert(rows_.begin() + pos, std::move(v));
        return true;
    }

    Matrix to_matrix() const {
        Matrix m(rows_.size(), cols_);
        for (std::size_t r = 0; r < rows_.size(); ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                m(r, c) = rows_[r][c];
        return m;
    }

private:
    std::size_t cols_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

/// Unique reduced row echelon form; zero rows are dropped.
inline Matrix rref(const Matrix& m) {
    RowReducer red(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        red.insert(m.row_copy(r));
    return red.to_matrix();
}

inline std::size_t rank(const Matrix& m) {
    RowReducer red(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        red.insert(m.row_copy(r));
    return red.rank();
}

} // namespace lietensor
