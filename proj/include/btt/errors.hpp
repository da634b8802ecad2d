#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace btt {

// Dimension mismatch between operands (matrix/vector shapes).
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Attempt to invert a singular matrix.
struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rejection sampling exhausted its attempt budget.
struct SamplingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed serialized input; `line` is 1-based.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

// Invalid code construction (non-primitive polynomial, g does not divide x^n+1, ...).
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Segmentation scheme cannot be built (empty chosen column subset, bad depth).
struct SchemeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace btt
