#pragma once

#include <stdexcept>
#include <string>

namespace wehrl {

// Base of every error raised by the library. Derived types name the failure
// class so callers (and the CLI exit-code mapping) can dispatch on it.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input violates a type invariant (non-Hermitian, wrong norm, size mismatch).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Density matrix with an eigenvalue below -1e-10.
class PositivityError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Spectrum too degenerate for the literal eigenvalue sum.
class DegeneracyError : public Error {
public:
    using Error::Error;
};

// Bad run parameters (sample counts, step sizes).
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace wehrl
