#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nilcx {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input data violates a mathematical requirement (Jacobi, J^2 = -I, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An operation was called on data that does not satisfy its precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Malformed .alg text; carries a 1-based location.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace nilcx
