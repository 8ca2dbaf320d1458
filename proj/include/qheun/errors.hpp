#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qheun {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input errors (exit code 2 in the CLI).
struct InputError : Error {
    using Error::Error;
};

struct SyntaxError : InputError {
    std::size_t offset;
    SyntaxError(const std::string& msg, std::size_t off)
        : InputError(msg + " at byte " + std::to_string(off)), offset(off) {}
};

struct UnknownParameter : InputError {
    std::string name;
    explicit UnknownParameter(const std::string& n)
        : InputError("unknown parameter '" + n + "'"), name(n) {}
};

// Domain errors (exit code 3 in the CLI).
struct DomainError : Error {
    using Error::Error;
};

struct ZeroDenominator : DomainError {
    ZeroDenominator() : DomainError("denominator is identically zero") {}
};

struct DivergesAtZero : DomainError {
    using DomainError::DomainError;
};

struct NotDivisible : DomainError {
    using DomainError::DomainError;
};

struct InvariantViolation : DomainError {
    using DomainError::DomainError;
};

struct SubstitutionSingular : DomainError {
    using DomainError::DomainError;
};

struct DegenerateEquation : DomainError {
    using DomainError::DomainError;
};

struct Resonance : DomainError {
    int index;
    Resonance(const std::string& msg, int m) : DomainError(msg), index(m) {}
};

struct UnboundParameter : DomainError {
    using DomainError::DomainError;
};

struct LimitDiverges : DomainError {
    using DomainError::DomainError;
};

struct AllZero : DomainError {
    AllZero() : DomainError("every limit coefficient vanishes") {}
};

struct Unclassifiable : DomainError {
    using DomainError::DomainError;
};

struct IrregularAtZero : DomainError {
    using DomainError::DomainError;
};

struct ConstraintViolation : DomainError {
    using DomainError::DomainError;
};

}  // namespace qheun
