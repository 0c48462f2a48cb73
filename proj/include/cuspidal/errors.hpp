#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

// Exception hierarchy. The three branches map onto the CLI exit codes:
// DomainError (bad input, exit 1), CertificationFailed (a mathematical
// check did not hold, exit 2), InternalError (broken library invariant,
// exit 3).

namespace cuspidal {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// -- input problems ---------------------------------------------------------

class DomainError : public Error {
public:
    using Error::Error;
};

class EmptyInput : public DomainError {
public:
    EmptyInput() : DomainError("empty input sequence") {}
};

class InvalidNotation : public DomainError {
public:
    using DomainError::DomainError;
};

class PaddingAmbiguous : public DomainError {
public:
    using DomainError::DomainError;
};

class IndexOutOfRange : public DomainError {
public:
    using DomainError::DomainError;
};

class SyntaxError : public DomainError {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : DomainError(what + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class NonvanishingAtZero : public DomainError {
public:
    using DomainError::DomainError;
};

class DegreeTooSmall : public DomainError {
public:
    using DomainError::DomainError;
};

class DegenerateProjection : public DomainError {
public:
    using DomainError::DomainError;
};

class TooFewCusps : public DomainError {
public:
    using DomainError::DomainError;
};

class UnsupportedFamily : public DomainError {
public:
    using DomainError::DomainError;
};

class UnsupportedFormat : public DomainError {
public:
    using DomainError::DomainError;
};

class ZeroConstantTerm : public DomainError {
public:
    ZeroConstantTerm() : DomainError("series has zero constant term") {}
};

// Raised when a series computation would need coefficients beyond the
// stored precision. Resolution drivers catch it and retry with more terms.
class PrecisionExhausted : public Error {
public:
    using Error::Error;
    PrecisionExhausted() : Error("power series precision exhausted") {}
};

// -- certification ----------------------------------------------------------

class CertificationFailed : public Error {
public:
    CertificationFailed(const std::string& check, const std::string& detail)
        : Error("certification check '" + check + "' failed: " + detail),
          check_(check) {}
    const std::string& check() const { return check_; }

private:
    std::string check_;
};

// -- broken invariants ------------------------------------------------------

class InternalError : public Error {
public:
    using Error::Error;
};

// Exact division produced a remainder where none is ever expected.
class DivisibilityFailed : public InternalError {
public:
    using InternalError::InternalError;
};

}  // namespace cuspidal
