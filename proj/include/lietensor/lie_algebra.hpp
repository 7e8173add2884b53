#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lietensor/subspace.hpp"

namespace lietensor {

/// A finite-dimensional Lie algebra over the rationals, given by structure
/// constants on a fixed basis e_1..e_n: [e_i, e_j] = sum_k c_ijk e_k.
/// Only pairs i < j are stored, so antisymmetry holds structurally; the
/// Jacobi identity is validated exhaustively at construction and every
/// instance of this class is a genuine Lie algebra.
///
/// Public indices follow the input format (1-based) in the constructor;
/// vector coordinates and the basis-pair accessors are 0-based.
class LieAlgebra {
public:
    struct BracketTerm {
        std::size_t i, j, k; // 1-based, i < j
        Rational c;
    };

    static LieAlgebra from_structure_constants(std::string name, std::size_t dim,
                                               const std::vector<BracketTerm>& terms) {
        LieAlgebra L(std::move(name), dim);
        std::vector<bool> seen(L.pair_count() * dim, false);
        for (const auto& t : terms) {
            if (t.i < 1 || t.j <= t.i || t.j > dim)
                throw ValidationError("structure constants of '" + L.name_ + "': pair (" +
                                      std::to_string(t.i) + "," + std::to_string(t.j) +
                                      ") violates 1 <= i < j <= " + std::to_string(dim));
            if (t.k < 1 || t.k > dim)
                throw ValidationError("structure constants of '" + L.name_ + "': target index " +
                                      std::to_string(t.k) + " out of range");
            const std::size_t slot =
                L.pair_index(t.i - 1, t.j - 1) * dim + (t.k - 1);
            if (seen[slot])
                throw ValidationError("structure constants of '" + L.name_ + "': duplicate entry (" +
                                      std::to_string(t.i) + "," + std::to_string(t.j) + "," +
                                      std::to_string(t.k) + ")");
            seen[slot] = true;
            L.table_[slot] = t.c;
        }
        L.check_jacobi();
        return L;
    }

    /// Zero bracket, dimension n.
    static LieAlgebra abelian(std::size_t n) {
        return LieAlgebra("A(" + std::to_string(n) + ")", n);
    }

    /// H(m): dimension 2m+1, basis v_1..v_2m, v with [v_{2i-1}, v_{2i}] = v.
    static LieAlgebra heisenberg(std::size_t m) {
        if (m == 0)
            throw ValidationError("heisenberg: m must be >= 1");
        std::vector<BracketTerm> terms;
        const std::size_t n = 2 * m + 1;
        for (std::size_t i = 1; i <= m; ++i)
            terms.push_back({2 * i - 1, 2 * i, n, Rational(1)});
        return from_structure_constants("H(" + std::to_string(m) + ")", n, terms);
    }

    const std::string& name() const { return name_; }
    std::size_t dim() const { return dim_; }

    LieAlgebra renamed(std::string name) const {
        LieAlgebra copy = *this;
        copy.name_ = std::move(name);
        return copy;
    }

    /// [e_i, e_j] as a coordinate vector (0-based indices).
    Vector bracket_basis(std::size_t i, std::size_t j) const {
        Vector v(dim_);
        if (i == j)
            return v;
        const bool flip = i > j;
        if (flip)
            std::swap(i, j);
        const std::size_t base = pair_index(i, j) * dim_;
        for (std::size_t k = 0; k < dim_; ++k)
            v[k] = flip ? -table_[base + k] : table_[base + k];
        return v;
    }

    /// Bilinear antisymmetric extension of the structure table.
    Vector bracket(std::span<const Rational> x, std::span<const Rational> y) const {
        if (x.size() != dim_ || y.size() != dim_)
            throw ValidationError("bracket: vector length does not match dim");
        Vector out(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i] == 0)
                continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j] == 0 || i == j)
                    continue;
                const Vector w = bracket_basis(i, j);
                const Rational c = x[i] * y[j];
                for (std::size_t k = 0; k < dim_; ++k)
                    if (w[k] != 0)
                        out[k] += c * w[k];
            }
        }
        return out;
    }

    /// All nonzero structure constants as 1-based terms, sorted by (i,j,k).
    std::vector<BracketTerm> structure_terms() const {
        std::vector<BracketTerm> out;
        for (std::size_t i = 0; i + 1 < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j) {
                const std::size_t base = pair_index(i, j) * dim_;
                for (std::size_t k = 0; k < dim_; ++k)
                    if (table_[base + k] != 0)
                        out.push_back({i + 1, j + 1, k + 1, table_[base + k]});
            }
        return out;
    }

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.dim_ == b.dim_ && a.table_ == b.table_;
    }

private:
    LieAlgebra(std::string name, std::size_t dim)
        : name_(std::move(name)), dim_(dim), table_(pair_count_for(dim) * dim) {}

    std::size_t pair_count() const { return pair_count_for(dim_); }
    static std::size_t pair_count_for(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

    // lexicographic rank of (i,j), i < j, both 0-based
    std::size_t pair_index(std::size_t i, std::size_t j) const {
        return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
    }

    void check_jacobi() const {
        for (std::size_t i = 0; i + 2 < dim_; ++i)
            for (std::size_t j = i + 1; j + 1 < dim_; ++j)
                for (std::size_t k = j + 1; k < dim_; ++k) {
                    Vector s = bracket(bracket_basis(i, j), unit_vector(dim_, k));
                    const Vector t = bracket(bracket_basis(j, k), unit_vector(dim_, i));
                    const Vector u = bracket(bracket_basis(k, i), unit_vector(dim_, j));
                    for (std::size_t p = 0; p < dim_; ++p)
                        s[p] += t[p] + u[p];
                    if (!lietensor::is_zero(s))
                        throw ValidationError(
                            "Jacobi identity fails in '" + name_ + "' on basis triple (" +
                            std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                            std::to_string(k + 1) + ")");
                }
    }

    static Vector unit_vector(std::size_t n, std::size_t i) {
        Vector v(n);
        v[i] = 1;
        return v;
    }

    std::string name_;
    std::size_t dim_;
    std::vector<Rational> table_; // pair_index(i,j) * dim + k
};

inline Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v[i] = 1;
    return v;
}

/// An ideal of a Lie algebra: a subspace closed under bracketing with the
/// whole algebra. Construction validates closure. The parent is stored by
/// value; algebras are small immutable values throughout.
class Ideal {
public:
    Ideal(const LieAlgebra& parent, Subspace space)
        : parent_(parent), space_(std::move(space)) {
        if (space_.ambient_dim() != parent_.dim())
            throw ValidationError("ideal: ambient dimension does not match the algebra");
        for (std::size_t r = 0; r < space_.dim(); ++r)
            for (std::size_t i = 0; i < parent_.dim(); ++i) {
                const Vector w =
                    parent_.bracket(unit_vector(parent_.dim(), i), space_.basis().row(r));
                if (!space_.contains(w))
                    throw ValidationError("subspace is not an ideal of '" + parent_.name() +
                                          "': not closed under bracketing");
            }
    }

    const LieAlgebra& parent() const { return parent_; }
    const Subspace& space() const { return space_; }
    std::size_t dim() const { return space_.dim(); }

private:
    LieAlgebra parent_;
    Subspace space_;
};

/// L^2: span of all [e_i, e_j]. Its dimension is the m of the main bound.
inline Ideal derived_subalgebra(const LieAlgebra& L) {
    const std::size_t n = L.dim();
    std::vector<Vector> gens;
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            gens.push_back(L.bracket_basis(i, j));
    return Ideal(L, Subspace::span_of_vectors(gens, n));
}

/// Z(L) = {x : [x, e_i] = 0 for all i}, computed as one kernel.
inline Ideal center(const LieAlgebra& L) {
    const std::size_t n = L.dim();
    Matrix m(n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            const Vector w = L.bracket_basis(i, j);
            for (std::size_t k = 0; k < n; ++k)
                m(j * n + k, i) = w[k];
        }
    return Ideal(L, kernel_basis(m));
}

/// L >= L^2 >= [L^2,L] >= ... until the series stabilizes. The final term
/// is zero exactly when L is nilpotent.
inline std::vector<Ideal> lower_central_series(const LieAlgebra& L) {
    const std::size_t n = L.dim();
    std::vector<Ideal> series;
    series.emplace_back(L, Subspace::full(n));
    while (true) {
        const Subspace& cur = series.back().space();
        RowReducer red(n);
        for (std::size_t r = 0; r < cur.dim(); ++r)
            for (std::size_t j = 0; j < n; ++j)
                red.insert(L.bracket(cur.basis().row(r), unit_vector(n, j)));
        Subspace next = Subspace::span_of(red.to_matrix());
        if (next == cur)
            break; // stabilized nonzero: not nilpotent
        const bool done = next.is_zero();
        series.emplace_back(L, std::move(next));
        if (done)
            break;
    }
    return series;
}

inline bool is_nilpotent(const LieAlgebra& L) {
    return lower_central_series(L).back().space().is_zero();
}

inline std::size_t nilpotency_class(const LieAlgebra& L) {
    const auto series = lower_central_series(L);
    if (!series.back().space().is_zero())
        throw ValidationError("nilpotency_class: '" + L.name() + "' is not nilpotent");
    return series.size() - 1; // number of nonzero terms
}

/// Block-diagonal sum; cross brackets vanish.
inline LieAlgebra direct_sum(const LieAlgebra& M, const LieAlgebra& N) {
    std::vector<LieAlgebra::BracketTerm> terms = M.structure_terms();
    for (auto t : N.structure_terms()) {
        t.i += M.dim();
        t.j += M.dim();
        t.k += M.dim();
        terms.push_back(t);
    }
    return LieAlgebra::from_structure_constants(M.name() + "+" + N.name(), M.dim() + N.dim(),
                                                terms);
}

/// L/N on the canonical complement coordinates of N (non-pivot columns of
/// its RREF basis). Structure constants are read off after reduction mod N;
/// the result revalidates Jacobi on construction.
inline LieAlgebra quotient(const LieAlgebra& L, const Ideal& N) {
    if (N.space().ambient_dim() != L.dim())
        throw ValidationError("quotient: ideal ambient dimension mismatch");
    // revalidate against this algebra (the Ideal may have been built elsewhere)
    Ideal checked(L, N.space());
    const auto comp = checked.space().complement_columns();
    const std::size_t q = comp.size();
    std::vector<LieAlgebra::BracketTerm> terms;
    for (std::size_t a = 0; a + 1 < q; ++a)
        for (std::size_t b = a + 1; b < q; ++b) {
            const Vector w = checked.space().reduce(L.bracket_basis(comp[a], comp[b]));
            for (std::size_t k = 0; k < q; ++k)
                if (w[comp[k]] != 0)
                    terms.push_back({a + 1, b + 1, k + 1, w[comp[k]]});
        }
    return LieAlgebra::from_structure_constants(L.name() + "/N", q, terms);
}

/// L / L^2; abelian of dimension n - m.
inline LieAlgebra abelianization(const LieAlgebra& L) {
    return quotient(L, derived_subalgebra(L)).renamed(L.name() + "^ab");
}

/// dim L^2 = 1 and L^2 = Z(L); true exactly for the Heisenberg algebras.
inline bool is_heisenberg(const LieAlgebra& L) {
    const Ideal d = derived_subalgebra(L);
    return d.dim() == 1 && d.space() == center(L).space();
}

} // namespace lietensor
