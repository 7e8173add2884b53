#include <catch2/catch_amalgamated.hpp>

#include "lietensor/catalog.hpp"
#include "lietensor/homology.hpp"

using namespace lietensor;

TEST_CASE("chain basis indexing is a bijection", "[homology]") {
    const ChainBasis cb(5);
    CHECK(cb.dim2() == 10);
    CHECK(cb.dim3() == 10);
    for (std::size_t t = 0; t < cb.dim2(); ++t) {
        const auto [i, j] = cb.pair_at(t);
        CHECK(i < j);
        CHECK(cb.pair_index(i, j) == t);
    }
    std::size_t prev = 0;
    for (std::size_t t = 0; t < cb.dim3(); ++t) {
        const auto [i, j, k] = cb.triple_at(t);
        CHECK((i < j && j < k));
        if (t > 0)
            CHECK(prev < i * 25 + j * 5 + k); // lexicographic
        prev = i * 25 + j * 5 + k;
    }
}

TEST_CASE("boundary d2", "[homology]") {
    CHECK(boundary_d2(LieAlgebra::abelian(4)).is_zero());
    CHECK(rank(boundary_d2(LieAlgebra::heisenberg(1))) == 1);
    CHECK(rank(boundary_d2(standard_filiform(4))) == 2);
}

TEST_CASE("boundary d3", "[homology]") {
    CHECK(boundary_d3(LieAlgebra::abelian(4)).is_zero());
    // every triple of H(1) contains the central e3 twice after bracketing
    CHECK(boundary_d3(LieAlgebra::heisenberg(1)).is_zero());
    // filiform4: images span {e2^e4, e3^e4}
    const Matrix d3 = boundary_d3(standard_filiform(4));
    CHECK(rank(d3) == 2);
}

TEST_CASE("d2 compose d3 vanishes on the catalog", "[homology]") {
    for (const auto& entry : builtin_catalog()) {
        const SchurData s = schur_data(entry.algebra);
        CHECK((s.d2 * s.d3).is_zero());
    }
}

TEST_CASE("Schur multiplier dimensions", "[homology]") {
    CHECK(schur_multiplier_dim(LieAlgebra::heisenberg(1)) == 2);
    CHECK(schur_multiplier_dim(LieAlgebra::heisenberg(2)) == 5);  // 2m^2-m-1
    CHECK(schur_multiplier_dim(LieAlgebra::heisenberg(3)) == 14);
    for (std::size_t n = 1; n <= 6; ++n)
        CHECK(schur_multiplier_dim(LieAlgebra::abelian(n)) == n * (n - 1) / 2);
    CHECK(schur_multiplier_dim(standard_filiform(4)) == 2);
    CHECK(schur_multiplier_dim(standard_filiform(5)) == 3);
    CHECK(schur_multiplier_dim(l5_8()) == 6);
}

TEST_CASE("multiplier of an abelian direct sum", "[homology]") {
    for (std::size_t p = 1; p <= 3; ++p)
        for (std::size_t q = 1; q <= 3; ++q) {
            const auto s = p + q;
            CHECK(schur_multiplier_dim(
                      direct_sum(LieAlgebra::abelian(p), LieAlgebra::abelian(q))) ==
                  s * (s - 1) / 2);
        }
}

TEST_CASE("t invariant", "[homology]") {
    CHECK(t_invariant(LieAlgebra::abelian(4)) == 0);
    CHECK(t_invariant(LieAlgebra::heisenberg(1)) == 1);
    CHECK(t_invariant(direct_sum(LieAlgebra::heisenberg(1), LieAlgebra::abelian(1))) == 2);
    CHECK(t_invariant(direct_sum(LieAlgebra::heisenberg(1), LieAlgebra::abelian(2))) == 3);
    for (const auto& entry : builtin_catalog())
        CHECK(t_invariant(entry.algebra) >= 0);
}

TEST_CASE("classification by t", "[homology]") {
    CHECK(classify_by_t(LieAlgebra::abelian(7)) == "A(7)");
    CHECK(classify_by_t(LieAlgebra::heisenberg(1)) == "H(1)");
    CHECK(classify_by_t(direct_sum(LieAlgebra::heisenberg(1), LieAlgebra::abelian(1))) ==
          "H(1)+A(1)");
    CHECK(classify_by_t(direct_sum(LieAlgebra::heisenberg(1), LieAlgebra::abelian(2))) ==
          "H(1)+A(2)");
    CHECK(classify_by_t(LieAlgebra::heisenberg(2)) == "unclassified(5)");
    CHECK(classify_by_t(standard_filiform(4)) == "unclassified(4)");

    const LieAlgebra so3 = LieAlgebra::from_structure_constants(
        "so3", 3, {{1, 2, 3, Rational(1)}, {1, 3, 2, Rational(1)}, {2, 3, 1, Rational(1)}});
    CHECK_THROWS_AS(classify_by_t(so3), ValidationError);
}
