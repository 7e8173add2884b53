#include <catch2/catch_amalgamated.hpp>

#include "lietensor/algebra_io.hpp"
#include "lietensor/catalog.hpp"

using namespace lietensor;

namespace {

const char* h1_text = R"json({
  "format": 1,
  "name": "H(1)",
  "dim": 3,
  "brackets": [
    {"i": 1, "j": 2, "terms": [{"k": 3, "c": "1"}]}
  ]
})json";

}

TEST_CASE("parse a Heisenberg file", "[io]") {
    const LieAlgebra L = parse_algebra_text(h1_text);
    CHECK(L == LieAlgebra::heisenberg(1));
    CHECK(L.name() == "H(1)");
}

TEST_CASE("parse an abelian file", "[io]") {
    const LieAlgebra L =
        parse_algebra_text(R"json({"format":1,"name":"A(2)","dim":2,"brackets":[]})json");
    CHECK(L == LieAlgebra::abelian(2));
}

TEST_CASE("parse errors carry positions and reasons", "[io]") {
    // invalid rational
    CHECK_THROWS_AS(parse_algebra_text(R"json({"format":1,"name":"x","dim":3,
        "brackets":[{"i":1,"j":2,"terms":[{"k":3,"c":"1/0"}]}]})json"),
                    ValidationError);
    // malformed json
    CHECK_THROWS_AS(parse_algebra_text("{"), ValidationError);
    try {
        parse_algebra_text("{\"format\": 1,");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("parse error") != std::string::npos);
    }
    // missing fields
    CHECK_THROWS_AS(parse_algebra_text(R"json({"format":1,"dim":2,"brackets":[]})json"),
                    ValidationError);
    CHECK_THROWS_AS(parse_algebra_text(R"json({"name":"x","dim":2,"brackets":[]})json"),
                    ValidationError);
    // wrong version
    CHECK_THROWS_AS(
        parse_algebra_text(R"json({"format":2,"name":"x","dim":2,"brackets":[]})json"),
        ValidationError);
    // coefficient must be a string
    CHECK_THROWS_AS(parse_algebra_text(R"json({"format":1,"name":"x","dim":3,
        "brackets":[{"i":1,"j":2,"terms":[{"k":3,"c":1}]}]})json"),
                    ValidationError);
    // indices must satisfy i < j
    CHECK_THROWS_AS(parse_algebra_text(R"json({"format":1,"name":"x","dim":3,
        "brackets":[{"i":2,"j":1,"terms":[{"k":3,"c":"1"}]}]})json"),
                    ValidationError);
    // duplicate (i,j,k)
    CHECK_THROWS_AS(parse_algebra_text(R"json({"format":1,"name":"x","dim":3,
        "brackets":[{"i":1,"j":2,"terms":[{"k":3,"c":"1"},{"k":3,"c":"2"}]}]})json"),
                    ValidationError);
    // Jacobi violation surfaces through parsing
    CHECK_THROWS_AS(parse_algebra_text(R"json({"format":1,"name":"x","dim":3,
        "brackets":[{"i":1,"j":2,"terms":[{"k":3,"c":"1"}]},
                    {"i":1,"j":3,"terms":[{"k":1,"c":"1"}]}]})json"),
                    ValidationError);
}

TEST_CASE("serialization is canonical and byte-stable", "[io]") {
    const LieAlgebra L = *builtin_algebra("H(1)+A(2)");
    const std::string a = algebra_to_text(L);
    const std::string b = algebra_to_text(L);
    CHECK(a == b);
    CHECK(a.back() == '\n');
    CHECK(a.find("\"format\": 1") != std::string::npos);
}

TEST_CASE("round trip reproduces the algebra exactly", "[io]") {
    for (const auto& entry : builtin_catalog()) {
        const std::string text = algebra_to_text(entry.algebra);
        const LieAlgebra back = parse_algebra_text(text);
        CHECK(back == entry.algebra);
        CHECK(back.name() == entry.algebra.name());
        CHECK(algebra_to_text(back) == text);
    }
}

TEST_CASE("rational coefficients round trip", "[io]") {
    const LieAlgebra L =
        LieAlgebra::from_structure_constants("scaled", 3, {{1, 2, 3, Rational(-7, 2)}});
    const LieAlgebra back = parse_algebra_text(algebra_to_text(L));
    CHECK(back == L);
    CHECK(back.bracket_basis(0, 1)[2] == Rational(-7, 2));
}

TEST_CASE("file io", "[io]") {
    const std::string path = "io_test_algebra.json";
    write_algebra_file(LieAlgebra::heisenberg(2), path);
    CHECK(read_algebra_file(path) == LieAlgebra::heisenberg(2));
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_algebra_file("does-not-exist.json"), ValidationError);
}

TEST_CASE("machine report text is stable and complete", "[io]") {
    const InvariantReport r = analyze(LieAlgebra::heisenberg(1));
    const std::string text = report_machine_text(r);
    CHECK(text == report_machine_text(analyze(LieAlgebra::heisenberg(1))));
    for (const char* key :
         {"n=", "m=", "dim_center=", "nilpotency_class=", "dim_multiplier=", "t_value=",
          "dim_tensor_square=", "dim_exterior_square=", "dim_square_submodule=",
          "bound_value=", "rocco_value=", "bound_satisfied=", "equality_case=",
          "classification="})
        CHECK(text.find(key) != std::string::npos);
}
