#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "lietensor/algebra_io.hpp"
#include "lietensor/catalog.hpp"

#ifndef LIETENSOR_CLI_PATH
#error "LIETENSOR_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output; // stdout only
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(LIETENSOR_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    f << text;
}

} // namespace

TEST_CASE("builtin emits a canonical parseable file", "[cli]") {
    const RunResult r = run_cli("builtin \"H(2)\"");
    CHECK(r.exit_code == 0);
    const lietensor::LieAlgebra L = lietensor::parse_algebra_text(r.output);
    CHECK(L == lietensor::LieAlgebra::heisenberg(2));
}

TEST_CASE("builtin round trip is byte-stable", "[cli]") {
    for (const char* name : {"A(4)", "H(1)", "H(1)+A(2)", "filiform4", "filiform5", "L5_8"}) {
        const RunResult a = run_cli("builtin \"" + std::string(name) + "\"");
        const RunResult b = run_cli("builtin \"" + std::string(name) + "\"");
        CHECK(a.exit_code == 0);
        CHECK(a.output == b.output);
        // matches the library serialization of the same constructor
        CHECK(a.output ==
              lietensor::algebra_to_text(*lietensor::builtin_algebra(name)));
    }
}

TEST_CASE("builtin rejects unknown names with the valid list", "[cli]") {
    const std::string cmd =
        std::string(LIETENSOR_CLI_PATH) + " builtin \"Q(1)\" 2>cli_err.txt";
    const int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 1);
    std::ifstream err("cli_err.txt");
    std::string text((std::istreambuf_iterator<char>(err)), std::istreambuf_iterator<char>());
    CHECK(text.find("filiform4") != std::string::npos);
    std::remove("cli_err.txt");
}

TEST_CASE("analyze a generated file", "[cli]") {
    REQUIRE(run_cli("builtin \"H(1)\" --out cli_h1.json").exit_code == 0);
    const RunResult r = run_cli("analyze cli_h1.json --format machine");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("dim_tensor_square=6\n") != std::string::npos);
    CHECK(r.output.find("equality_case=true\n") != std::string::npos);
    CHECK(r.output.find("classification=H(1)\n") != std::string::npos);

    const RunResult text = run_cli("analyze cli_h1.json");
    CHECK(text.exit_code == 0);
    CHECK(text.output.find("H(1)") != std::string::npos);
    std::remove("cli_h1.json");
}

TEST_CASE("analyze an abelian file", "[cli]") {
    REQUIRE(run_cli("builtin \"A(3)\" --out cli_a3.json").exit_code == 0);
    const RunResult r = run_cli("analyze cli_a3.json --format machine");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("dim_tensor_square=9\n") != std::string::npos);
    CHECK(r.output.find("t_value=0\n") != std::string::npos);
    CHECK(r.output.find("classification=A(3)\n") != std::string::npos);
    std::remove("cli_a3.json");
}

TEST_CASE("analyze machine output is byte-stable", "[cli]") {
    REQUIRE(run_cli("builtin \"filiform4\" --out cli_f4.json").exit_code == 0);
    const RunResult a = run_cli("analyze cli_f4.json --format machine");
    const RunResult b = run_cli("analyze cli_f4.json --format machine");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("dim_tensor_square=7\n") != std::string::npos);
    std::remove("cli_f4.json");
}

TEST_CASE("analyze exit codes distinguish input errors", "[cli]") {
    // missing file
    CHECK(run_cli("analyze no-such-file.json").exit_code == 1);
    // malformed rational
    write_file("cli_bad.json",
               R"({"format":1,"name":"x","dim":3,
                   "brackets":[{"i":1,"j":2,"terms":[{"k":3,"c":"1/0"}]}]})");
    CHECK(run_cli("analyze cli_bad.json").exit_code == 1);
    // non-nilpotent algebra: valid file, rejected by the analysis
    write_file("cli_aff.json",
               R"({"format":1,"name":"aff","dim":2,
                   "brackets":[{"i":1,"j":2,"terms":[{"k":2,"c":"1"}]}]})");
    CHECK(run_cli("analyze cli_aff.json").exit_code == 1);
    // usage error
    CHECK(run_cli("analyze").exit_code == 1);
    CHECK(run_cli("frobnicate").exit_code == 1);
    std::remove("cli_bad.json");
    std::remove("cli_aff.json");
}

TEST_CASE("catalog passes and reports per entry", "[cli]") {
    const RunResult r = run_cli("catalog");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("[PASS] H(1)\n") == std::string::npos); // line carries numbers too
    CHECK(r.output.find("[PASS] H(1) ") != std::string::npos);
    CHECK(r.output.find("summary: 15/15 entries passed") != std::string::npos);
}

TEST_CASE("catalog --only filters", "[cli]") {
    const RunResult r = run_cli("catalog --only \"H(2)\" --format machine");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("entry=H(2) passed=true") != std::string::npos);
    CHECK(r.output.find("summary total=1 passed=1") != std::string::npos);
    CHECK(run_cli("catalog --only \"nope\"").exit_code == 1);
}

TEST_CASE("catalog machine format is byte-stable", "[cli]") {
    const RunResult a = run_cli("catalog --format machine");
    const RunResult b = run_cli("catalog --format machine");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("classification=") != std::string::npos);
}
