#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lietensor/invariants.hpp"

namespace lietensor {

// Algebra files are a small self-describing JSON document:
//
//   {
//     "format": 1,
//     "name": "H(1)",
//     "dim": 3,
//     "brackets": [
//       {"i": 1, "j": 2, "terms": [{"k": 3, "c": "1"}]}
//     ]
//   }
//
// Indices are 1-based with i < j; coefficients are exact rationals
// written as "p" or "p/q". Serialization is canonical (brackets sorted by
// (i,j), terms by k, two-space indent), so the same algebra always
// produces identical bytes.

inline constexpr int algebra_format_version = 1;

namespace detail {

inline const nlohmann::json& require_field(const nlohmann::json& obj, const char* key,
                                           const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end())
        throw ValidationError("algebra file: missing field '" + std::string(key) + "' in " +
                              where);
    return *it;
}

inline std::size_t require_index(const nlohmann::json& v, const char* key,
                                 const std::string& where) {
    if (!v.is_number_unsigned())
        throw ValidationError("algebra file: field '" + std::string(key) + "' in " + where +
                              " must be a positive integer");
    return v.get<std::size_t>();
}

} // namespace detail

inline LieAlgebra parse_algebra_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("algebra file: ") + e.what());
    }
    if (!doc.is_object())
        throw ValidationError("algebra file: top level must be an object");
    const auto& format = detail::require_field(doc, "format", "the top-level object");
    if (!format.is_number_integer() || format.get<int>() != algebra_format_version)
        throw ValidationError("algebra file: unsupported format version (expected " +
                              std::to_string(algebra_format_version) + ")");
    const auto& name = detail::require_field(doc, "name", "the top-level object");
    if (!name.is_string())
        throw ValidationError("algebra file: 'name' must be a string");
    const std::size_t dim =
        detail::require_index(detail::require_field(doc, "dim", "the top-level object"), "dim",
                              "the top-level object");
    const auto& brackets = detail::require_field(doc, "brackets", "the top-level object");
    if (!brackets.is_array())
        throw ValidationError("algebra file: 'brackets' must be an array");

    std::vector<LieAlgebra::BracketTerm> terms;
    std::size_t bi = 0;
    for (const auto& b : brackets) {
        const std::string where = "brackets[" + std::to_string(bi++) + "]";
        if (!b.is_object())
            throw ValidationError("algebra file: " + where + " must be an object");
        const std::size_t i = detail::require_index(detail::require_field(b, "i", where), "i", where);
        const std::size_t j = detail::require_index(detail::require_field(b, "j", where), "j", where);
        const auto& terms_json = detail::require_field(b, "terms", where);
        if (!terms_json.is_array())
            throw ValidationError("algebra file: " + where + ".terms must be an array");
        std::size_t ti = 0;
        for (const auto& t : terms_json) {
            const std::string twhere = where + ".terms[" + std::to_string(ti++) + "]";
            if (!t.is_object())
                throw ValidationError("algebra file: " + twhere + " must be an object");
            const std::size_t k =
                detail::require_index(detail::require_field(t, "k", twhere), "k", twhere);
            const auto& c = detail::require_field(t, "c", twhere);
            if (!c.is_string())
                throw ValidationError("algebra file: " + twhere +
                                      ".c must be a rational written as a string");
            terms.push_back({i, j, k, parse_rational(c.get<std::string>())});
        }
    }
    return LieAlgebra::from_structure_constants(name.get<std::string>(), dim, terms);
}

inline std::string algebra_to_text(const LieAlgebra& L) {
    nlohmann::ordered_json doc;
    doc["format"] = algebra_format_version;
    doc["name"] = L.name();
    doc["dim"] = L.dim();
    doc["brackets"] = nlohmann::ordered_json::array();
    // structure_terms() is sorted by (i,j,k); group consecutive (i,j)
    nlohmann::ordered_json* current = nullptr;
    std::size_t cur_i = 0, cur_j = 0;
    for (const auto& t : L.structure_terms()) {
        if (current == nullptr || t.i != cur_i || t.j != cur_j) {
            nlohmann::ordered_json b;
            b["i"] = t.i;
            b["j"] = t.j;
            b["terms"] = nlohmann::ordered_json::array();
            doc["brackets"].push_back(std::move(b));
            current = &doc["brackets"].back();
            cur_i = t.i;
            cur_j = t.j;
        }
        nlohmann::ordered_json term;
        term["k"] = t.k;
        term["c"] = to_string(t.c);
        (*current)["terms"].push_back(std::move(term));
    }
    return doc.dump(2) + "\n";
}

inline LieAlgebra read_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open algebra file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra_text(buf.str());
}

inline void write_algebra_file(const LieAlgebra& L, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw ValidationError("cannot write algebra file '" + path + "'");
    out << algebra_to_text(L);
}

/// Stable machine-readable key=value rendering, one field per line, in
/// declaration order of InvariantReport.
inline std::string report_machine_text(const InvariantReport& r) {
    std::ostringstream os;
    os << "n=" << r.n << "\n"
       << "m=" << r.m << "\n"
       << "dim_center=" << r.dim_center << "\n"
       << "nilpotency_class=" << r.nilpotency_class << "\n"
       << "dim_multiplier=" << r.dim_multiplier << "\n"
       << "t_value=" << r.t_value << "\n"
       << "dim_tensor_square=" << r.dim_tensor_square << "\n"
       << "dim_exterior_square=" << r.dim_exterior_square << "\n"
       << "dim_square_submodule=" << r.dim_square_submodule << "\n"
       << "bound_value=" << r.bound_value << "\n"
       << "rocco_value=" << r.rocco_value << "\n"
       << "bound_satisfied=" << (r.bound_satisfied ? "true" : "false") << "\n"
       << "equality_case=" << (r.equality_case ? "true" : "false") << "\n"
       << "classification=" << r.classification << "\n";
    return os.str();
}

inline std::string report_table_text(const std::string& name, const InvariantReport& r) {
    std::ostringstream os;
    os << "algebra: " << name << "\n"
       << "  dim L                  n   = " << r.n << "\n"
       << "  dim L^2                m   = " << r.m << "\n"
       << "  dim Z(L)                   = " << r.dim_center << "\n"
       << "  nilpotency class           = " << r.nilpotency_class << "\n"
       << "  dim M(L)                   = " << r.dim_multiplier << "\n"
       << "  t(L)                       = " << r.t_value << "\n"
       << "  dim L(x)L                  = " << r.dim_tensor_square << "\n"
       << "  dim L^L                    = " << r.dim_exterior_square << "\n"
       << "  dim L[]L                   = " << r.dim_square_submodule << "\n"
       << "  bound (n-m)(n-1)+2         = " << r.bound_value
       << (r.bound_satisfied ? "  (satisfied" : "  (VIOLATED")
       << (r.equality_case ? ", equality)" : ")") << "\n"
       << "  previous bound n(n-m)      = " << r.rocco_value << "\n"
       << "  classification             = " << r.classification << "\n";
    return os.str();
}

} // namespace lietensor
