#pragma once

#include <stdexcept>
#include <string>

namespace famint {

/// Base class for all library errors; the CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent input (mismatched ground sets, bad literals, ...).
class InvalidInput : public Error {
public:
    explicit InvalidInput(const std::string& what) : Error(what) {}
};

/// A function whose range report is unbounded or undefined on the domain.
class InvalidFunction : public Error {
public:
    explicit InvalidFunction(const std::string& what) : Error(what) {}
};

/// An operation was called before its stated precondition was established.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// A construction that would produce the trivial (everywhere-zero) measure.
class NonTrivialityError : public Error {
public:
    explicit NonTrivialityError(const std::string& what) : Error(what) {}
};

}  // namespace famint
