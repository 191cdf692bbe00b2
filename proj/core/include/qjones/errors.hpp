#pragma once

#include <stdexcept>
#include <string>

namespace qjones {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Exact division failed; the quotient would not be a Laurent polynomial.
struct InexactDivisionError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

// A truncated series is too short for the requested operation.
struct TruncationError : Error {
    using Error::Error;
};

// Prefactor exponents are incompatible (sum would leave the canonical form)
// or a fractional prefactor was passed where an integral one is required.
struct PrefactorError : Error {
    using Error::Error;
};

struct DiagramError : Error {
    using Error::Error;
};

// A table or sequence does not cover the requested index range.
struct CoverageError : Error {
    using Error::Error;
};

struct InputError : Error {
    using Error::Error;
};

}  // namespace qjones
