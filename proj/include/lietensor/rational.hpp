#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "lietensor/errors.hpp"

namespace lietensor {

using Integer  = boost::multiprecision::cpp_int;

/// Exact rational scalar. Stored reduced with a positive denominator;
/// numerator() / denominator() expose the canonical representation.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Formats as "p" for integers and "p/q" otherwise. No decimals anywhere.
inline std::string to_string(const Rational& r) {
    const Integer den = denominator(r);
    if (den == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + den.str();
}

/// Parses "p" or "p/q" with an optional leading minus on p; q must be a
/// positive integer. Anything else (including "1/0") is rejected.
inline Rational parse_rational(std::string_view text) {
    const auto fail = [&] {
        throw ValidationError("invalid rational '" + std::string(text) +
                              "': expected \"p\" or \"p/q\" with q > 0");
    };
    const auto digits = [](std::string_view s) {
        if (s.empty())
            return false;
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    std::string_view num = text, den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!num.empty() && num.front() == '-')
        num.remove_prefix(1);
    if (!digits(num))
        fail();
    Integer p(std::string(text.substr(0, text.find('/'))));
    if (den.empty() && text.find('/') == std::string_view::npos)
        return Rational(p);
    if (!digits(den))
        fail();
    Integer q((std::string(den)));
    if (q == 0)
        fail();
    return Rational(p, q);
}

} // namespace lietensor
