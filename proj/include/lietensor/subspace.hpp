#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "lietensor/matrix.hpp"

namespace lietensor {

/// A linear subspace of Q^ambient in canonical form: the basis is the
/// unique RREF of the row space, so two subspaces are equal iff their
/// basis matrices are identical.
class Subspace {
public:
    static Subspace zero(std::size_t ambient) { return Subspace(ambient, Matrix(0, ambient)); }

    static Subspace full(std::size_t ambient) {
        return Subspace(ambient, Matrix::identity(ambient));
    }

    static Subspace span_of(const Matrix& rows) { return Subspace(rows.cols(), rref(rows)); }

    static Subspace span_of_vectors(const std::vector<Vector>& vecs, std::size_t ambient) {
        RowReducer red(ambient);
        for (const auto& v : vecs)
            red.insert(v);
        return Subspace(ambient, red.to_matrix());
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }

    bool is_zero() const { return dim() == 0; }

    /// Residual of v after elimination against the basis; zero iff v lies
    /// in the subspace.
    Vector reduce(Vector v) const {
        for (std::size_t r = 0; r < basis_.rows(); ++r) {
            std::size_t p = pivot(r);
            if (v[p] == 0)
                continue;
            const Rational c = v[p];
            for (std::size_t j = 0; j < ambient_; ++j)
                if (basis_(r, j) != 0)
                    v[j] -= c * basis_(r, j);
        }
        return v;
    }

    bool contains(std::span<const Rational> v) const {
        if (v.size() != ambient_)
            throw ValidationError("in_span: vector length does not match ambient dimension");
        return lietensor::is_zero(reduce(Vector(v.begin(), v.end())));
    }

    bool contains_subspace(const Subspace& other) const {
        if (other.ambient_ != ambient_)
            throw ValidationError("subspace containment: ambient dimensions differ");
        for (std::size_t r = 0; r < other.basis_.rows(); ++r)
            if (!contains(other.basis_.row(r)))
                return false;
        return true;
    }

    std::size_t pivot(std::size_t r) const {
        std::size_t p = 0;
        while (p < ambient_ && basis_(r, p) == 0)
            ++p;
        return p;
    }

    std::vector<std::size_t> pivot_columns() const {
        std::vector<std::size_t> out(dim());
        for (std::size_t r = 0; r < dim(); ++r)
            out[r] = pivot(r);
        return out;
    }

    /// Columns that carry no pivot; unit vectors at these positions
    /// represent a canonical complement basis.
    std::vector<std::size_t> complement_columns() const {
        std::vector<bool> is_pivot(ambient_, false);
        for (std::size_t r = 0; r < dim(); ++r)
            is_pivot[pivot(r)] = true;
        std::vector<std::size_t> out;
        for (std::size_t c = 0; c < ambient_; ++c)
            if (!is_pivot[c])
                out.push_back(c);
        return out;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    Subspace(std::size_t ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}

    std::size_t ambient_;
    Matrix basis_;
};

inline bool in_span(std::span<const Rational> v, const Subspace& s) { return s.contains(v); }

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw ValidationError("subspace_sum: ambient dimensions differ");
    RowReducer red(a.ambient_dim());
    for (std::size_t r = 0; r < a.dim(); ++r)
        red.insert(a.basis().row_copy(r));
    for (std::size_t r = 0; r < b.dim(); ++r)
        red.insert(b.basis().row_copy(r));
    return Subspace::span_of(red.to_matrix());
}

/// Zassenhaus: reduce rows [a|a] for a in A and [b|0] for b in B; rows of
/// the result whose left half vanished have right halves spanning A cap B.
inline Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw ValidationError("subspace_intersection: ambient dimensions differ");
    const std::size_t n = a.ambient_dim();
    RowReducer red(2 * n);
    for (std::size_t r = 0; r < a.dim(); ++r) {
        Vector v(2 * n);
        for (std::size_t c = 0; c < n; ++c)
            v[c] = v[n + c] = a.basis()(r, c);
        red.insert(std::move(v));
    }
    for (std::size_t r = 0; r < b.dim(); ++r) {
        Vector v(2 * n);
        for (std::size_t c = 0; c < n; ++c)
            v[c] = b.basis()(r, c);
        red.insert(std::move(v));
    }
    std::vector<Vector> inter;
    for (const auto& row : red.rows()) {
        if (!lietensor::is_zero(std::span<const Rational>(row.data(), n)))
            continue;
        inter.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
    }
    Subspace result = Subspace::span_of_vectors(inter, n);
    // dim A + dim B = dim(A+B) + dim(A cap B)
    if (a.dim() + b.dim() != subspace_sum(a, b).dim() + result.dim())
        throw CrossCheckError("subspace_intersection: dimension formula violated");
    return result;
}

/// Canonical basis of the null space of m (right kernel).
inline Subspace kernel_basis(const Matrix& m) {
    const Matrix R = rref(m);
    const std::size_t n = m.cols();
    std::vector<std::size_t> pivots;
    for (std::size_t r = 0; r < R.rows(); ++r) {
        std::size_t p = 0;
        while (p < n && R(r, p) == 0)
            ++p;
        pivots.push_back(p);
    }
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivots)
        is_pivot[p] = true;
    std::vector<Vector> gens;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        Vector v(n);
        v[f] = 1;
        for (std::size_t r = 0; r < R.rows(); ++r)
            v[pivots[r]] = -R(r, f);
        gens.push_back(std::move(v));
    }
    return Subspace::span_of_vectors(gens, n);
}

} // namespace lietensor
