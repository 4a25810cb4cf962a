#pragma once

#include <stdexcept>
#include <string>

namespace hqg {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Shape mismatch between linear maps or between a map and a vector.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Raised by invert() on a singular matrix (e.g. a non-bijective antipode).
class SingularMatrixError : public Error {
public:
    using Error::Error;
};

/// Structural validation failure (Latin square, identity law, axiom suite, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Malformed input text or JSON.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A documented operation precondition does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace hqg
