#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vstring {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text input. Carries the offending token and its character
// offset in the input so front ends can point at it.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::string token, std::size_t offset)
        : Error(message + " (token '" + token + "' at offset " + std::to_string(offset) + ")"),
          token_(std::move(token)),
          offset_(offset) {}

    const std::string& token() const noexcept { return token_; }
    std::size_t offset() const noexcept { return offset_; }

private:
    std::string token_;
    std::size_t offset_;
};

// Structurally invalid value: duplicate endpoints, out-of-range positions,
// inapplicable moves, color mismatches.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Operands live in index groups of different rank.
class DimensionError : public Error {
public:
    using Error::Error;
};

// A word that should have the form W a^{(uv)^-w} W^-1^{uv} does not.
// Raised loudly because it would falsify a structural property of the invariant.
class NormalFormError : public Error {
public:
    using Error::Error;
};

}  // namespace vstring
