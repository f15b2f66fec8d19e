#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qgalois {

// Base type for every error raised by the engine.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// q = 0 or some lambda_ij = 0.
struct ZeroParameterError : Error {
    using Error::Error;
};

// q^(2 d_i) = 1 for some i; balanced q-arithmetic degenerates there.
struct RootOfUnityError : Error {
    using Error::Error;
};

// A q-integer denominator vanished (v = 0 or v^2 = 1).
struct DegenerateParameterError : Error {
    using Error::Error;
};

// Rank outside the family's supported range.
struct UnsupportedRankError : Error {
    using Error::Error;
};

// Generator index out of range, or i = j where distinct indices are required.
struct IndexError : Error {
    using Error::Error;
};

// A bilinear functional was evaluated outside its validity domain.
struct OutsideDomainError : Error {
    using Error::Error;
};

// A truncation cap excludes an element the computation needs.
struct CapTooSmallError : Error {
    using Error::Error;
};

// Expression-level failure; position is the byte offset of the offending token.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos) : Error(what), position(pos) {}
};

struct UnknownGeneratorError : ParseError {
    using ParseError::ParseError;
};

struct IndexOutOfRankError : ParseError {
    using ParseError::ParseError;
};

}  // namespace qgalois
