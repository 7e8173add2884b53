#pragma once

#include <stdexcept>
#include <string>

namespace lietensor {

/// Invalid input: malformed files, bad structure constants, violated
/// preconditions. A CLI front end maps this to exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A mathematical self-check failed (two independent routes disagreed,
/// or a construction invariant did not hold). This is never caused by
/// user input alone; it signals a bug. CLI exit code 2.
class CrossCheckError : public std::logic_error {
public:
    explicit CrossCheckError(const std::string& what) : std::logic_error(what) {}
};

} // namespace lietensor
