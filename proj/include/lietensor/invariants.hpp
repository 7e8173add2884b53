#pragma once

#include <cstddef>
#include <string>

#include "lietensor/tensor_square.hpp"

namespace lietensor {

/// All computed invariants of one nilpotent algebra. bound_value and
/// rocco_value are recomputed from n and m; the main bound applies to
/// non-abelian algebras, so bound_satisfied is vacuously true and
/// equality_case false when m = 0.
struct InvariantReport {
    std::size_t n = 0;                    // dim L
    std::size_t m = 0;                    // dim L^2
    std::size_t dim_center = 0;           // dim Z(L)
    std::size_t nilpotency_class = 0;
    std::size_t dim_multiplier = 0;       // dim M(L)
    long long t_value = 0;
    std::size_t dim_tensor_square = 0;    // dim L (x) L
    std::size_t dim_exterior_square = 0;  // dim L ^ L
    std::size_t dim_square_submodule = 0; // dim L [] L
    long long bound_value = 0;            // (n-m)(n-1)+2
    long long rocco_value = 0;            // n(n-m)
    bool bound_satisfied = false;
    bool equality_case = false;
    std::string classification;
};

/// Full analysis with every internal cross-check enabled: the constructed
/// quotient dimension must match the closed-form oracle, the square
/// submodule must match gamma(n-m), and the homology and exterior routes
/// to dim M(L) must agree. Any mismatch throws CrossCheckError.
inline InvariantReport analyze(const LieAlgebra& L) {
    if (!is_nilpotent(L))
        throw ValidationError("analyze: '" + L.name() + "' is not nilpotent");
    InvariantReport rep;
    rep.n = L.dim();
    rep.m = derived_subalgebra(L).dim();
    rep.dim_center = center(L).dim();
    rep.nilpotency_class = nilpotency_class(L);

    const SchurData sd = schur_data(L);
    rep.dim_multiplier = sd.dim_multiplier;
    rep.t_value = sd.t_value;

    const TensorSquare T = build_tensor_square(L);
    rep.dim_tensor_square = T.quotient_dim();
    rep.dim_square_submodule = T.square_submodule().dim();
    rep.dim_exterior_square = T.exterior_dim();

    const std::size_t formula = gamma_dim(rep.n - rep.m) + rep.dim_multiplier + rep.m;
    if (rep.dim_tensor_square != formula)
        throw CrossCheckError("analyze('" + L.name() + "'): constructed dim L(x)L = " +
                              std::to_string(rep.dim_tensor_square) +
                              " but the exact-sequence formula gives " + std::to_string(formula));
    if (rep.dim_square_submodule != gamma_dim(rep.n - rep.m))
        throw CrossCheckError("analyze('" + L.name() + "'): dim L[]L = " +
                              std::to_string(rep.dim_square_submodule) + " != gamma(n-m) = " +
                              std::to_string(gamma_dim(rep.n - rep.m)));
    if (schur_via_exterior(T) != rep.dim_multiplier)
        throw CrossCheckError("analyze('" + L.name() +
                              "'): exterior and homology routes to dim M(L) disagree");
    if (rep.dim_tensor_square != rep.dim_exterior_square + rep.dim_square_submodule)
        throw CrossCheckError("analyze('" + L.name() + "'): tensor/exterior/square bookkeeping");

    const auto n = static_cast<long long>(rep.n);
    const auto m = static_cast<long long>(rep.m);
    rep.bound_value = (n - m) * (n - 1) + 2;
    rep.rocco_value = n * (n - m);
    rep.bound_satisfied =
        rep.m == 0 || static_cast<long long>(rep.dim_tensor_square) <= rep.bound_value;
    rep.equality_case =
        rep.m >= 1 && static_cast<long long>(rep.dim_tensor_square) == rep.bound_value;
    rep.classification = classify_by_t(L);
    return rep;
}

struct BoundCheck {
    bool satisfied;
    long long slack; // bound - dim L(x)L; negative would be a counterexample
};

/// dim(L (x) L) <= (n-m)(n-1)+2 for nilpotent non-abelian L.
inline BoundCheck check_bound_mt(const LieAlgebra& L) {
    if (!is_nilpotent(L))
        throw ValidationError("check_bound_mt: '" + L.name() + "' is not nilpotent");
    const std::size_t m = derived_subalgebra(L).dim();
    if (m == 0)
        throw ValidationError("check_bound_mt: '" + L.name() +
                              "' is abelian; the bound assumes a non-abelian algebra");
    const auto n = static_cast<long long>(L.dim());
    const long long bound = (n - static_cast<long long>(m)) * (n - 1) + 2;
    const long long dim = static_cast<long long>(build_tensor_square(L).quotient_dim());
    return {dim <= bound, bound - dim};
}

/// For m = 1: equality in the main bound holds iff L = H(1) + A(n-3).
/// Evaluates both the dimension route (dim L(x)L = bound) and the
/// structural route (dim Z(L) = n-2 and L^2 <= Z(L)); they must agree.
inline bool check_equality_case_m1(const LieAlgebra& L) {
    if (!is_nilpotent(L))
        throw ValidationError("check_equality_case_m1: '" + L.name() + "' is not nilpotent");
    const Ideal der = derived_subalgebra(L);
    if (der.dim() != 1)
        throw ValidationError("check_equality_case_m1: '" + L.name() + "' has dim L^2 = " +
                              std::to_string(der.dim()) + ", expected 1");
    const auto n = static_cast<long long>(L.dim());
    const long long bound = (n - 1) * (n - 1) + 2;
    const bool by_dimension =
        static_cast<long long>(build_tensor_square(L).quotient_dim()) == bound;

    const Ideal z = center(L);
    const bool by_structure = static_cast<long long>(z.dim()) == n - 2 &&
                              z.space().contains_subspace(der.space());
    if (by_dimension != by_structure)
        throw CrossCheckError("check_equality_case_m1('" + L.name() +
                              "'): dimension and structural routes disagree");
    return by_dimension;
}

struct RoccoComparison {
    long long developed_bound; // (n-m)(n-1)+2
    long long rocco_bound;     // n(n-m)
    bool first_branch;         // dim <= (n-m)(n-1)+1
    bool second_branch;        // dim = (n-m)(n-1)+2 and that value < n(n-m)
    bool holds;                // the stated disjunction
    bool strict;               // developed_bound < rocco_bound
};

/// The closing comparison with the older bound, for n >= 4 and m >= 2:
/// either dim(L(x)L) <= (n-m)(n-1)+1, or it equals (n-m)(n-1)+2 and that
/// value is strictly below n(n-m). Reports which branch held.
inline RoccoComparison compare_rocco(const LieAlgebra& L) {
    if (!is_nilpotent(L))
        throw ValidationError("compare_rocco: '" + L.name() + "' is not nilpotent");
    const auto m = static_cast<long long>(derived_subalgebra(L).dim());
    const auto n = static_cast<long long>(L.dim());
    if (m < 2 || n < 4)
        throw ValidationError("compare_rocco: '" + L.name() +
                              "' needs n >= 4 and m >= 2 (got n = " + std::to_string(n) +
                              ", m = " + std::to_string(m) + ")");
    RoccoComparison r{};
    r.developed_bound = (n - m) * (n - 1) + 2;
    r.rocco_bound = n * (n - m);
    const long long dim = static_cast<long long>(build_tensor_square(L).quotient_dim());
    r.first_branch = dim <= r.developed_bound - 1;
    r.second_branch = dim == r.developed_bound && r.developed_bound < r.rocco_bound;
    r.holds = r.first_branch || r.second_branch;
    r.strict = r.developed_bound < r.rocco_bound;
    return r;
}

/// Exactness consequence for an ideal N <= L^2 cap Z(L):
/// dim(L(x)L) <= dim(L/N (x) L/N) + dim N * dim(L/L^2).
inline bool check_exact_sequence_i(const LieAlgebra& L, const Ideal& N) {
    if (!is_nilpotent(L))
        throw ValidationError("check_exact_sequence_i: '" + L.name() + "' is not nilpotent");
    const Ideal der = derived_subalgebra(L);
    const Ideal z = center(L);
    const Subspace central_derived = subspace_intersection(der.space(), z.space());
    if (!central_derived.contains_subspace(N.space()))
        throw ValidationError("check_exact_sequence_i: N is not contained in L^2 cap Z(L)");
    const std::size_t lhs = build_tensor_square(L).quotient_dim();
    const std::size_t quotient_dim = build_tensor_square(quotient(L, N)).quotient_dim();
    const std::size_t rhs = quotient_dim + N.dim() * (L.dim() - der.dim());
    return lhs <= rhs;
}

/// Direct-sum dimension law:
/// dim((M+N)(x)(M+N)) = dim(M(x)M) + dim(N(x)N) + 2 dim(M (x) N).
inline bool check_direct_sum_law(const LieAlgebra& M, const LieAlgebra& N) {
    const std::size_t lhs = build_tensor_square(direct_sum(M, N)).quotient_dim();
    const std::size_t rhs = build_tensor_square(M).quotient_dim() +
                            build_tensor_square(N).quotient_dim() +
                            2 * trivial_action_tensor_dim(M, N);
    return lhs == rhs;
}

} // namespace lietensor
