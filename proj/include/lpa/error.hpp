#pragma once

#include <stdexcept>
#include <string>

namespace lpa {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or semantically invalid input document.
class ParseError : public Error {
public:
    using Error::Error;
};

/// An argument violates an operation's precondition (unknown vertex,
/// invalid hereditary set, inadmissible pair, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An exhaustive enumeration would exceed its configured cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// The request is well-formed but outside what the library decides
/// (factorization over Q beyond degree 3, unsupported intersection shapes).
class Unsupported : public Error {
public:
    using Error::Error;
};

}  // namespace lpa
