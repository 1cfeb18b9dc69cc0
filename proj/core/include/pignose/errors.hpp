#pragma once

#include <stdexcept>
#include <string>

namespace pignose {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Checked 64-bit coefficient arithmetic overflowed. Results are never wrapped.
struct OverflowError : Error {
    using Error::Error;
};

// divide_exact: no exact quotient exists. Signals a formula bug, not bad input.
struct NotDivisibleError : Error {
    using Error::Error;
};

// Enumeration requested beyond the configured size limit.
struct LimitExceededError : Error {
    using Error::Error;
};

// Matching operation applied to a matching whose ground set is not [2n].
struct BadGroundError : Error {
    using Error::Error;
};

// Tableau violates one of the filling conditions.
struct InvalidTableauError : Error {
    using Error::Error;
};

// Labeled path violates a height or index-bound rule.
struct InvalidPathError : Error {
    using Error::Error;
};

// Operator truncation window too small for the requested power.
struct TruncationError : Error {
    using Error::Error;
};

// Series reversion requires zero constant term and unit linear coefficient.
struct BadLowestTermsError : Error {
    using Error::Error;
};

// Operation requires a signed permutation with positive first entry.
struct PrecondFirstNegativeError : Error {
    using Error::Error;
};

// An intermediate object failed a structural property that the construction
// guarantees; indicates an implementation bug rather than bad input.
struct StructureViolationError : Error {
    using Error::Error;
};

// Text input could not be parsed; position is a 0-based byte offset.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at offset " + std::to_string(position) + ")"), pos(position) {}
    std::size_t pos;
};

}  // namespace pignose
