#pragma once

#include <stdexcept>
#include <string>

namespace fcgen {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input document (function library, dataset line, config, artifact).
class FormatError : public Error {
public:
    using Error::Error;
};

/// A value object violates one of its invariants.
class InvariantError : public Error {
public:
    using Error::Error;
};

/// Inconsistent or out-of-range configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A metric or algorithm received input it is not defined on.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Raised when a generation stage gives up on the current example.
class GenerationFailure : public Error {
public:
    using Error::Error;
};

}  // namespace fcgen
