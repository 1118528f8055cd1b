#ifndef EPIST_ERRORS_HPP
#define EPIST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace epist {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two values from different alphabets were combined.
class AlphabetMismatch : public Error {
public:
    explicit AlphabetMismatch(const std::string& what) : Error(what) {}
};

/// An operation was called outside its stated precondition
/// (bad input rather than an internal defect).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// A cross-checked identity failed. This signals a bug, never bad input.
class TheoryViolation : public Error {
public:
    explicit TheoryViolation(const std::string& what) : Error(what) {}
};

/// An iteration or materialization cap was exceeded.
class LimitExceeded : public Error {
public:
    explicit LimitExceeded(const std::string& what) : Error(what) {}
};

/// Malformed textual input (morphism or word syntax).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace epist

#endif
