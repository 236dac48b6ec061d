#pragma once

#include <stdexcept>
#include <string>

namespace ggt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the arguments of an operation does not hold.
class DomainError : public Error {
public:
    using Error::Error;
};

/// An enumeration or search would exceed its configured resource bound.
class BoundExceeded : public Error {
public:
    using Error::Error;
};

/// A bounded search finished without finding a solution.
class SearchExhausted : public Error {
public:
    using Error::Error;
};

/// Checked integer arithmetic overflowed.
class Overflow : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed (a verified claim did not hold).
class VerificationFailure : public Error {
public:
    using Error::Error;
};

} // namespace ggt
