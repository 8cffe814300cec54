#pragma once

#include <stdexcept>
#include <string>

namespace opchain {

// Checked mathematical failure with a stable machine-readable code
// ("NotAComplex", "Inconsistent", "BadOperad", ...). Input/usage problems
// use std::invalid_argument instead.
struct MathError : std::runtime_error {
    std::string code;
    MathError(std::string c, const std::string& what)
        : std::runtime_error(c + ": " + what), code(std::move(c)) {}
};

} // namespace opchain
