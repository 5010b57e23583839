// Error types shared across the pathbound library.

#pragma once

#include <stdexcept>
#include <string>

namespace pathbound {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed inputs: bad node ids, dimension mismatches, empty families.
struct StructuralError : Error {
    using Error::Error;
};

// Arguments outside a function's mathematical domain (t < 0, u outside (0,1), ...).
struct DomainError : Error {
    using Error::Error;
};

// A configurable cap was exceeded (path count, basis count, submatrix enumeration).
struct ResourceError : Error {
    using Error::Error;
};

// A documented precondition does not hold (shape out of [1,2], infeasible witness, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// No feasible basis / unreachable sink.
struct InfeasibleError : Error {
    using Error::Error;
};

// Singular matrix where an invertible one is required.
struct SingularMatrixError : Error {
    using Error::Error;
};

// Graph file syntax errors; carries the 1-based line number.
struct ParseError : Error {
    ParseError(int line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line_number(line) {}
    int line_number;
};

} // namespace pathbound
