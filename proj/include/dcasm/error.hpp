#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dcasm {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what)
        , line_(line)
        , column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Input is valid but violates a semantic constraint (arity clash, bad #una, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Enumeration refused because the instance exceeds the desk-scale bounds.
class GuardrailError : public Error {
public:
    using Error::Error;
};

// A set of atoms/equalities that is not the diagram of any DCA-interpretation.
class ClosureError : public Error {
public:
    using Error::Error;
};

} // namespace dcasm
