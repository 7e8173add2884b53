#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lietensor/homology.hpp"
#include "lietensor/lie_algebra.hpp"

namespace lietensor {

/// Coordinate expansion of x (x) y in the n^2-dimensional standard tensor
/// space, with e_i (x) e_j at position i*n + j (0-based).
inline Vector tensor_expand(std::span<const Rational> x, std::span<const Rational> y) {
    const std::size_t n = x.size();
    Vector v(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j)
            if (y[j] != 0)
                v[i * n + j] = x[i] * y[j];
    }
    return v;
}

/// kappa at the ambient level: sum_ij v_ij [e_i, e_j].
inline Vector kappa_ambient(const LieAlgebra& L, std::span<const Rational> v) {
    const std::size_t n = L.dim();
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& c = v[i * n + j];
            if (c == 0 || i == j)
                continue;
            const Vector w = L.bracket_basis(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (w[k] != 0)
                    out[k] += c * w[k];
        }
    return out;
}

/// Linearization of the two defining relation families over all basis
/// triples (x, y, z), with the self-action ^a b = [a, b]:
///   [x,y](x)z - x(x)[y,z] + y(x)[x,z]
///   x(x)[y,z] - [z,x](x)y + [y,x](x)z
inline Subspace defining_relations(const LieAlgebra& L) {
    const std::size_t n = L.dim();
    RowReducer red(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const Vector bxy = L.bracket_basis(x, y);
            const Vector byx = L.bracket_basis(y, x);
            for (std::size_t z = 0; z < n; ++z) {
                const Vector byz = L.bracket_basis(y, z);
                const Vector bxz = L.bracket_basis(x, z);
                const Vector bzx = L.bracket_basis(z, x);
                Vector a = tensor_expand(bxy, unit_vector(n, z));
                {
                    const Vector t1 = tensor_expand(unit_vector(n, x), byz);
                    const Vector t2 = tensor_expand(unit_vector(n, y), bxz);
                    for (std::size_t p = 0; p < n * n; ++p)
                        a[p] += t2[p] - t1[p];
                }
                red.insert(std::move(a));
                Vector b = tensor_expand(unit_vector(n, x), byz);
                {
                    const Vector t1 = tensor_expand(bzx, unit_vector(n, y));
                    const Vector t2 = tensor_expand(byx, unit_vector(n, z));
                    for (std::size_t p = 0; p < n * n; ++p)
                        b[p] += t2[p] - t1[p];
                }
                red.insert(std::move(b));
            }
        }
    return Subspace::span_of(red.to_matrix());
}

/// Enlarges W with the relations forced by requiring the bracket
/// [(m(x)n), (m'(x)n')] = [m,n](x)[m',n'] to define a Lie structure on the
/// quotient: antisymmetry defects a(x)b + b(x)a and Jacobi defects
/// [a,b](x)c + [b,c](x)a + [c,a](x)b. Both families are multilinear in
/// arguments ranging over L^2, so a basis of L^2 generates the same span
/// as all basis 4- and 6-tuples. Afterwards the span is closed under
/// v -> kappa(v)(x)L^2 and L^2(x)kappa(v) until it stabilizes, which makes
/// the relation space an ideal-compatible kernel: the bracket descends.
inline Subspace bracket_consistency_relations(const LieAlgebra& L, const Subspace& W) {
    const std::size_t n = L.dim();
    if (W.ambient_dim() != n * n)
        throw ValidationError("bracket_consistency_relations: W has wrong ambient dimension");
    RowReducer red(n * n);
    for (std::size_t r = 0; r < W.dim(); ++r)
        red.insert(W.basis().row_copy(r));

    const Subspace der = derived_subalgebra(L).space();
    std::vector<Vector> l2;
    for (std::size_t r = 0; r < der.dim(); ++r)
        l2.push_back(der.basis().row_copy(r));

    for (const auto& a : l2)
        for (const auto& b : l2) {
            Vector v = tensor_expand(a, b);
            const Vector w = tensor_expand(b, a);
            for (std::size_t p = 0; p < n * n; ++p)
                v[p] += w[p];
            red.insert(std::move(v));
        }
    for (const auto& a : l2)
        for (const auto& b : l2)
            for (const auto& c : l2) {
                Vector v = tensor_expand(L.bracket(a, b), c);
                const Vector t1 = tensor_expand(L.bracket(b, c), a);
                const Vector t2 = tensor_expand(L.bracket(c, a), b);
                for (std::size_t p = 0; p < n * n; ++p)
                    v[p] += t1[p] + t2[p];
                red.insert(std::move(v));
            }

    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<Vector> snapshot = red.rows();
        for (const auto& v : snapshot) {
            const Vector kv = kappa_ambient(L, v);
            if (lietensor::is_zero(kv))
                continue;
            for (const auto& b : l2) {
                grew |= red.insert(tensor_expand(kv, b));
                grew |= red.insert(tensor_expand(b, kv));
            }
        }
    }
    return Subspace::span_of(red.to_matrix());
}

/// The non-abelian tensor square L (x) L, realized as the quotient of the
/// n^2-dimensional standard tensor space by the stabilized relation space.
/// Quotient coordinates are the classes of e_i (x) e_j at the non-pivot
/// ambient positions, in ambient order. Every structural invariant
/// (kappa well-defined, bracket antisymmetric and Jacobi, square submodule
/// central and killed by kappa, kappa onto L^2) is verified during
/// construction; a violation throws CrossCheckError.
class TensorSquare {
public:
    const LieAlgebra& source() const { return source_; }
    std::size_t ambient_dim() const { return source_.dim() * source_.dim(); }
    const Subspace& relations() const { return relations_; }
    std::size_t quotient_dim() const { return quotient_cols_.size(); }

    /// Ambient position (i,j) of quotient basis element t.
    std::pair<std::size_t, std::size_t> quotient_pair(std::size_t t) const {
        return {quotient_cols_[t] / source_.dim(), quotient_cols_[t] % source_.dim()};
    }

    /// kappa: quotient -> L, class of l (x) l' -> [l, l']. n x q matrix.
    const Matrix& kappa() const { return kappa_; }

    /// Class of an ambient vector in quotient coordinates.
    Vector class_of(Vector ambient) const {
        const Vector r = relations_.reduce(std::move(ambient));
        Vector out(quotient_dim());
        for (std::size_t t = 0; t < quotient_dim(); ++t)
            out[t] = r[quotient_cols_[t]];
        return out;
    }

    /// Bracket of two quotient basis classes; zero entries are implicit.
    Vector bracket_entry(std::size_t s, std::size_t t) const {
        const auto it = table_.find({s, t});
        return it == table_.end() ? Vector(quotient_dim()) : it->second;
    }

    /// Bilinear extension of the bracket table to quotient vectors.
    Vector bracket_on(std::span<const Rational> u, std::span<const Rational> v) const {
        const std::size_t q = quotient_dim();
        Vector out(q);
        for (const auto& [key, w] : table_) {
            const Rational c = u[key.first] * v[key.second];
            if (c == 0)
                continue;
            for (std::size_t p = 0; p < q; ++p)
                if (w[p] != 0)
                    out[p] += c * w[p];
        }
        return out;
    }

    bool bracket_is_zero() const { return table_.empty(); }

    /// L [] L: span of the classes of e_i(x)e_i and e_i(x)e_j + e_j(x)e_i
    /// inside the quotient.
    const Subspace& square_submodule() const { return square_; }

    std::size_t exterior_dim() const { return quotient_dim() - square_.dim(); }

    friend TensorSquare build_tensor_square(const LieAlgebra& L);

private:
    explicit TensorSquare(LieAlgebra source, Subspace relations)
        : source_(std::move(source)), relations_(std::move(relations)),
          quotient_cols_(relations_.complement_columns()),
          square_(Subspace::zero(quotient_cols_.size())) {}

    LieAlgebra source_;
    Subspace relations_;
    std::vector<std::size_t> quotient_cols_;
    Matrix kappa_;
    std::map<std::pair<std::size_t, std::size_t>, Vector> table_;
    Subspace square_;
};

inline TensorSquare build_tensor_square(const LieAlgebra& L) {
    if (!is_nilpotent(L))
        throw ValidationError("build_tensor_square: '" + L.name() + "' is not nilpotent");
    const std::size_t n = L.dim();

    const Subspace W = defining_relations(L);
    Subspace Winf = bracket_consistency_relations(L, W);

    // kappa must vanish on the relation space, otherwise the induced map
    // l (x) l' -> [l, l'] is not well-defined on the quotient
    for (std::size_t r = 0; r < Winf.dim(); ++r)
        if (!lietensor::is_zero(kappa_ambient(L, Winf.basis().row(r))))
            throw CrossCheckError("tensor square of '" + L.name() +
                                  "': kappa does not vanish on the relation space");

    TensorSquare T(L, std::move(Winf));
    const std::size_t q = T.quotient_dim();
    if (q + T.relations_.dim() != n * n)
        throw CrossCheckError("tensor square: quotient dimension bookkeeping failed");

    // kappa on the quotient basis; columns are brackets of the basis pairs
    T.kappa_ = Matrix(n, q);
    std::vector<Vector> kcol(q);
    for (std::size_t t = 0; t < q; ++t) {
        const auto [i, j] = T.quotient_pair(t);
        kcol[t] = L.bracket_basis(i, j);
        for (std::size_t k = 0; k < n; ++k)
            T.kappa_(k, t) = kcol[t][k];
    }

    // bracket table: [cls_s, cls_t] = class of kappa_s (x) kappa_t.
    // Entries vanish unless both kappa columns are nonzero.
    std::vector<std::size_t> nz;
    for (std::size_t t = 0; t < q; ++t)
        if (!lietensor::is_zero(kcol[t]))
            nz.push_back(t);
    for (std::size_t s : nz)
        for (std::size_t t : nz) {
            Vector cls = T.class_of(tensor_expand(kcol[s], kcol[t]));
            if (!lietensor::is_zero(cls))
                T.table_.insert({{s, t}, std::move(cls)});
        }

    // antisymmetry on the quotient, including the diagonal
    for (std::size_t s : nz) {
        if (!lietensor::is_zero(T.bracket_entry(s, s)))
            throw CrossCheckError("tensor square of '" + L.name() +
                                  "': bracket table has a nonzero diagonal entry");
        for (std::size_t t : nz) {
            Vector sum = T.bracket_entry(s, t);
            const Vector w = T.bracket_entry(t, s);
            for (std::size_t p = 0; p < q; ++p)
                sum[p] += w[p];
            if (!lietensor::is_zero(sum))
                throw CrossCheckError("tensor square of '" + L.name() +
                                      "': bracket table is not antisymmetric");
        }
    }
    // Jacobi on the quotient basis. Triples with any vanishing kappa
    // column are identically zero, so nz x nz x nz is exhaustive.
    for (std::size_t a : nz)
        for (std::size_t b : nz)
            for (std::size_t c : nz) {
                Vector s = T.bracket_on(T.bracket_entry(a, b), unit_vector(q, c));
                const Vector t1 = T.bracket_on(T.bracket_entry(b, c), unit_vector(q, a));
                const Vector t2 = T.bracket_on(T.bracket_entry(c, a), unit_vector(q, b));
                for (std::size_t p = 0; p < q; ++p)
                    s[p] += t1[p] + t2[p];
                if (!lietensor::is_zero(s))
                    throw CrossCheckError("tensor square of '" + L.name() +
                                          "': Jacobi fails on the quotient");
            }

    // square submodule: polarized diagonal classes
    {
        RowReducer red(q);
        for (std::size_t i = 0; i < n; ++i)
            red.insert(T.class_of(tensor_expand(unit_vector(n, i), unit_vector(n, i))));
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                Vector v = tensor_expand(unit_vector(n, i), unit_vector(n, j));
                const Vector w = tensor_expand(unit_vector(n, j), unit_vector(n, i));
                for (std::size_t p = 0; p < n * n; ++p)
                    v[p] += w[p];
                red.insert(T.class_of(std::move(v)));
            }
        T.square_ = Subspace::span_of(red.to_matrix());
    }

    // the square submodule is central and kappa kills it
    for (std::size_t r = 0; r < T.square_.dim(); ++r) {
        const auto row = T.square_.basis().row(r);
        for (std::size_t t = 0; t < q; ++t)
            if (!lietensor::is_zero(T.bracket_on(row, unit_vector(q, t))))
                throw CrossCheckError("tensor square of '" + L.name() +
                                      "': square submodule is not central");
        if (!lietensor::is_zero(T.kappa_.apply(row)))
            throw CrossCheckError("tensor square of '" + L.name() +
                                  "': kappa does not vanish on the square submodule");
    }

    // kappa maps the quotient onto L^2
    if (rank(T.kappa_) != derived_subalgebra(L).dim())
        throw CrossCheckError("tensor square of '" + L.name() +
                              "': kappa is not onto the derived subalgebra");

    return T;
}

/// dim Gamma(A(d)) = d(d+1)/2 for the abelian algebra of dimension d.
inline std::size_t gamma_dim(std::size_t d) { return d * (d + 1) / 2; }

/// dim ker of the map induced by kappa on the exterior quotient
/// (L ^ L = L (x) L / L [] L): computed as exterior dim minus the rank of
/// kappa restricted to a complement of the square submodule.
inline std::size_t schur_via_exterior(const TensorSquare& T) {
    const auto comp = T.square_submodule().complement_columns();
    Matrix induced(T.source().dim(), comp.size());
    for (std::size_t c = 0; c < comp.size(); ++c)
        for (std::size_t r = 0; r < T.source().dim(); ++r)
            induced(r, c) = T.kappa()(r, comp[c]);
    return comp.size() - rank(induced);
}

/// Exact-sequence oracle for the tensor square dimension:
/// gamma(n - m) + dim M(L) + m, with m = dim L^2.
inline std::size_t tensor_square_dim_formula(const LieAlgebra& L) {
    if (!is_nilpotent(L))
        throw ValidationError("tensor_square_dim_formula: '" + L.name() + "' is not nilpotent");
    const std::size_t m = derived_subalgebra(L).dim();
    return gamma_dim(L.dim() - m) + schur_multiplier_dim(L) + m;
}

/// Dimension of the cross term M (x) N for direct summands acting
/// trivially on each other: dim(M/M^2) * dim(N/N^2).
inline std::size_t trivial_action_tensor_dim(const LieAlgebra& M, const LieAlgebra& N) {
    const std::size_t am = M.dim() - derived_subalgebra(M).dim();
    const std::size_t an = N.dim() - derived_subalgebra(N).dim();
    return am * an;
}

} // namespace lietensor
