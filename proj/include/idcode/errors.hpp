#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace idcode {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidOrder : public Error {
public:
    using Error::Error;
};

/// A code set was used with a graph it does not belong to.
class OwnershipMismatch : public Error {
public:
    using Error::Error;
};

class InvalidPair : public Error {
public:
    using Error::Error;
};

class IndexClash : public Error {
public:
    using Error::Error;
};

/// No construction exists for the requested orders (twins or a trivial factor).
class NoConstruction : public Error {
public:
    using Error::Error;
};

/// A construction failed its own verification. Never expected to fire.
class ConstructionBug : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace idcode
