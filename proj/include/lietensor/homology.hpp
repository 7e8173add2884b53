#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "lietensor/lie_algebra.hpp"

namespace lietensor {

/// Lexicographic coordinates for the wedge spaces over an n-dimensional
/// algebra: pairs i<j index Lambda^2, triples i<j<k index Lambda^3.
class ChainBasis {
public:
    explicit ChainBasis(std::size_t n) : n_(n) {
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                pairs_.push_back({i, j});
        for (std::size_t i = 0; i + 2 < n; ++i)
            for (std::size_t j = i + 1; j + 1 < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k)
                    triples_.push_back({i, j, k});
    }

    std::size_t n() const { return n_; }
    std::size_t dim2() const { return pairs_.size(); }
    std::size_t dim3() const { return triples_.size(); }

    std::size_t pair_index(std::size_t i, std::size_t j) const {
        return i * n_ - i * (i + 1) / 2 + (j - i - 1);
    }
    std::array<std::size_t, 2> pair_at(std::size_t t) const { return pairs_[t]; }
    std::array<std::size_t, 3> triple_at(std::size_t t) const { return triples_[t]; }

    /// out += coef * (v wedge e_t) in Lambda^2 coordinates.
    void add_wedge(std::span<const Rational> v, std::size_t t, const Rational& coef,
                   Vector& out) const {
        for (std::size_t p = 0; p < n_; ++p) {
            if (v[p] == 0 || p == t)
                continue;
            if (p < t)
                out[pair_index(p, t)] += coef * v[p];
            else
                out[pair_index(t, p)] -= coef * v[p];
        }
    }

private:
    std::size_t n_;
    std::vector<std::array<std::size_t, 2>> pairs_;
    std::vector<std::array<std::size_t, 3>> triples_;
};

/// d2: Lambda^2 L -> L, e_i ^ e_j -> [e_i, e_j]. Rows are L coordinates.
inline Matrix boundary_d2(const LieAlgebra& L) {
    const ChainBasis cb(L.dim());
    Matrix m(L.dim(), cb.dim2());
    for (std::size_t t = 0; t < cb.dim2(); ++t) {
        const auto [i, j] = cb.pair_at(t);
        const Vector w = L.bracket_basis(i, j);
        for (std::size_t k = 0; k < L.dim(); ++k)
            m(k, t) = w[k];
    }
    return m;
}

/// d3: Lambda^3 L -> Lambda^2 L,
/// x ^ y ^ z -> -[x,y]^z + [x,z]^y - [y,z]^x.
inline Matrix boundary_d3(const LieAlgebra& L) {
    const ChainBasis cb(L.dim());
    Matrix m(cb.dim2(), cb.dim3());
    for (std::size_t t = 0; t < cb.dim3(); ++t) {
        const auto [i, j, k] = cb.triple_at(t);
        Vector col(cb.dim2());
        cb.add_wedge(L.bracket_basis(i, j), k, Rational(-1), col);
        cb.add_wedge(L.bracket_basis(i, k), j, Rational(1), col);
        cb.add_wedge(L.bracket_basis(j, k), i, Rational(-1), col);
        for (std::size_t r = 0; r < cb.dim2(); ++r)
            m(r, t) = col[r];
    }
    return m;
}

/// Second Chevalley-Eilenberg homology data. dim M(L) = dim ker d2 - rank d3;
/// the boundary condition d2*d3 = 0 is verified on construction.
struct SchurData {
    std::size_t dim_multiplier;
    long long t_value;
    Matrix d2;
    Matrix d3;
};

inline SchurData schur_data(const LieAlgebra& L) {
    const std::size_t n = L.dim();
    SchurData s{0, 0, boundary_d2(L), boundary_d3(L)};
    if (!(s.d2 * s.d3).is_zero())
        throw CrossCheckError("schur_data: d2*d3 != 0 for '" + L.name() + "'");
    const std::size_t n2 = n < 2 ? 0 : n * (n - 1) / 2;
    const std::size_t ker_d2 = n2 - rank(s.d2);
    const std::size_t rk_d3 = rank(s.d3);
    if (rk_d3 > ker_d2)
        throw CrossCheckError("schur_data: rank d3 exceeds dim ker d2 for '" + L.name() + "'");
    s.dim_multiplier = ker_d2 - rk_d3;
    s.t_value = static_cast<long long>(n2) - static_cast<long long>(s.dim_multiplier);
    return s;
}

inline std::size_t schur_multiplier_dim(const LieAlgebra& L) {
    return schur_data(L).dim_multiplier;
}

/// t(L) = n(n-1)/2 - dim M(L).
inline long long t_invariant(const LieAlgebra& L) { return schur_data(L).t_value; }

/// Names the structure of a nilpotent algebra from t(L) alone:
/// t = 0,1,2,3 characterize A(n), H(1), H(1)+A(1), H(1)+A(2); larger
/// values are reported as unclassified. A negative t cannot occur for
/// nilpotent input, so it is flagged as an internal inconsistency.
inline std::string classify_by_t(const LieAlgebra& L) {
    if (!is_nilpotent(L))
        throw ValidationError("classify_by_t: '" + L.name() + "' is not nilpotent");
    const long long t = t_invariant(L);
    if (t < 0)
        throw CrossCheckError("classify_by_t: negative t for nilpotent '" + L.name() + "'");
    switch (t) {
    case 0: return "A(" + std::to_string(L.dim()) + ")";
    case 1: return "H(1)";
    case 2: return "H(1)+A(1)";
    case 3: return "H(1)+A(2)";
    default: return "unclassified(" + std::to_string(t) + ")";
    }
}

} // namespace lietensor
