// errors.hpp — exception taxonomy shared across the library
#pragma once

#include <stdexcept>
#include <string>

namespace mub {

// Bad arguments or malformed values: dimension mismatch, non-unit vectors,
// invalid moduli, out-of-range indices.
struct InvalidInput : std::invalid_argument {
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// Requested object lies outside the supported closed set (e.g. complete MUB
// construction for a dimension not in the supported list).
struct Unsupported : std::invalid_argument {
    explicit Unsupported(const std::string& what) : std::invalid_argument(what) {}
};

// An iterative numerical routine failed to reach its tolerance.
struct NumericalFailure : std::runtime_error {
    NumericalFailure(const std::string& what, double residual)
        : std::runtime_error(what), residual(residual) {}
    double residual = 0.0;
};

// The input violates the orthogonal-or-unbiased hypothesis, so the requested
// check does not apply to it.
struct NotApplicable : std::runtime_error {
    explicit NotApplicable(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mub
