#pragma once

#include <stdexcept>
#include <string>

namespace morsenorm {

/// Base class of every error raised by the library. The message is the
/// short diagnostic ("empty complex", "unknown simplex [2]", ...).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a document cannot be parsed or fails semantic checks.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace morsenorm
