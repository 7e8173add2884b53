// Command-line front end: analyze structure-constant files, verify the
// built-in catalog, and emit canonical algebra files.
//
// Exit codes: 0 success, 1 invalid input or usage, 2 a mathematical
// cross-check failed.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lietensor/lietensor.hpp"

namespace {

using namespace lietensor;

int cmd_analyze(const std::string& path, const std::string& format) {
    const LieAlgebra L = read_algebra_file(path);
    if (!is_nilpotent(L)) {
        std::cerr << "error: '" << L.name()
                  << "' is not nilpotent: the lower central series stabilizes at dimension "
                  << lower_central_series(L).back().dim()
                  << "; the analysis applies to nilpotent algebras only\n";
        return 1;
    }
    const InvariantReport rep = analyze(L);
    if (format == "machine")
        std::cout << report_machine_text(rep);
    else
        std::cout << report_table_text(L.name(), rep);
    return 0;
}

void print_catalog_text(const CatalogResult& res) {
    std::cout << (res.all_passed ? "[PASS] " : "[FAIL] ") << res.name;
    if (res.report) {
        const InvariantReport& r = *res.report;
        std::cout << "  n=" << r.n << " m=" << r.m << " t=" << r.t_value
                  << " dim L(x)L=" << r.dim_tensor_square;
        if (r.m >= 1) // the bound concerns non-abelian algebras
            std::cout << " bound=" << r.bound_value << (r.equality_case ? " (equality)" : "");
    }
    std::cout << "\n";
    for (const auto& c : res.checks)
        if (!c.passed)
            std::cout << "       failed: " << c.check << " -- " << c.detail << "\n";
}

void print_catalog_machine(const CatalogResult& res) {
    std::cout << "entry=" << res.name << " passed=" << (res.all_passed ? "true" : "false");
    if (res.report) {
        const InvariantReport& r = *res.report;
        std::cout << " n=" << r.n << " m=" << r.m << " dim_center=" << r.dim_center
                  << " nilpotency_class=" << r.nilpotency_class
                  << " dim_multiplier=" << r.dim_multiplier << " t_value=" << r.t_value
                  << " dim_tensor_square=" << r.dim_tensor_square
                  << " dim_exterior_square=" << r.dim_exterior_square
                  << " dim_square_submodule=" << r.dim_square_submodule
                  << " bound_value=" << r.bound_value << " rocco_value=" << r.rocco_value
                  << " bound_satisfied=" << (r.bound_satisfied ? "true" : "false")
                  << " equality_case=" << (r.equality_case ? "true" : "false")
                  << " classification=" << r.classification;
    }
    std::cout << "\n";
}

int cmd_catalog(const std::string& only, const std::string& format) {
    std::vector<CatalogEntry> entries = builtin_catalog();
    if (!only.empty()) {
        std::erase_if(entries, [&](const CatalogEntry& e) { return e.name != only; });
        if (entries.empty()) {
            std::cerr << "error: no catalog entry named '" << only << "'\n";
            return 1;
        }
    }
    const auto results = run_catalog(entries);
    std::size_t passed = 0;
    for (const auto& res : results) {
        if (format == "machine")
            print_catalog_machine(res);
        else
            print_catalog_text(res);
        passed += res.all_passed ? 1 : 0;
    }
    if (format == "machine")
        std::cout << "summary total=" << results.size() << " passed=" << passed << "\n";
    else
        std::cout << "summary: " << passed << "/" << results.size() << " entries passed\n";
    return passed == results.size() ? 0 : 2;
}

int cmd_builtin(const std::string& name, const std::string& out) {
    const std::optional<LieAlgebra> L = builtin_algebra(name);
    if (!L) {
        std::cerr << "error: unknown builtin '" << name << "'; valid names: "
                  << builtin_name_help() << "\n";
        return 1;
    }
    if (out.empty())
        std::cout << algebra_to_text(*L);
    else
        write_algebra_file(*L, out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of nilpotent Lie algebras: tensor square, "
                 "Schur multiplier, and the (n-m)(n-1)+2 bound"};
    app.require_subcommand(1);

    std::string path, format = "text", only, name, out;
    const auto format_check = CLI::IsMember({"text", "machine"});

    auto* analyze_cmd = app.add_subcommand("analyze", "analyze one algebra file");
    analyze_cmd->add_option("file", path, "algebra file (JSON)")->required();
    analyze_cmd->add_option("--format", format, "output format")->check(format_check);

    auto* catalog_cmd = app.add_subcommand("catalog", "verify the built-in catalog");
    catalog_cmd->add_option("--only", only, "restrict to one entry by name");
    catalog_cmd->add_option("--format", format, "output format")->check(format_check);

    auto* builtin_cmd =
        app.add_subcommand("builtin", "write a named algebra as a canonical file");
    builtin_cmd->add_option("name", name, "builtin name, e.g. H(2) or H(1)+A(3)")->required();
    builtin_cmd->add_option("--out", out, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*analyze_cmd)
            return cmd_analyze(path, format);
        if (*catalog_cmd)
            return cmd_catalog(only, format);
        return cmd_builtin(name, out);
    } catch (const CrossCheckError& e) {
        std::cerr << "cross-check failure: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
