#pragma once

#include <stdexcept>
#include <string>

namespace polymat {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed polynomial or document text. `position` is a byte offset into the
// offending string (0-based), or std::string::npos when not applicable.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position = std::string::npos)
        : Error(msg), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Operands declared over different rings (variable set or monomial order differ).
class RingMismatchError : public Error {
public:
    using Error::Error;
};

// Matrix shapes incompatible with the requested operation.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Input outside an operation's domain (division by zero, substitution value
// involving the substituted variable, a divisor that is not linear, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Exact division requested but the dividend is not a multiple of the divisor.
class DivisionError : public DomainError {
public:
    using DomainError::DomainError;
};

// A factorization hypothesis failed; the message carries the certificate.
class HypothesisError : public Error {
public:
    using Error::Error;
};

// The unimodular-completion search exhausted its budget.
class CompletionError : public Error {
public:
    using Error::Error;
};

// An internal invariant that post-verification guards was violated.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace polymat
