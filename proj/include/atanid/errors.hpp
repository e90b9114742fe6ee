#pragma once

#include <stdexcept>
#include <string>

namespace atanid {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// A rational kernel was evaluated at one of its poles.
class PoleError : public Error {
public:
    using Error::Error;
};

/// Derivative order outside the range an evaluator accepts.
class OrderError : public Error {
public:
    using Error::Error;
};

/// Digit expansions that cannot be compared (e.g. opposite signs).
class ComparisonError : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The computed reference value disagrees with the embedded constant.
/// Only an arithmetic bug can cause this.
class ReferenceIntegrityError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace atanid
