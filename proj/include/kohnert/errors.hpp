#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kohnert {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A position was listed as both a plain and a ghost cell.
class OverlapError : public Error {
public:
    using Error::Error;
};

// Row or column index outside the positive quadrant.
class PositionError : public Error {
public:
    using Error::Error;
};

// An operation that is only defined for ghost-free diagrams got ghosts.
class GhostSeedError : public Error {
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

class CapExceeded : public Error {
public:
    explicit CapExceeded(std::size_t cap)
        : Error("closure exceeded node cap of " + std::to_string(cap)), cap_(cap) {}

    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
};

// The move relation fed to a poset contained a cycle.
class CycleError : public Error {
public:
    using Error::Error;
};

class ArityError : public Error {
public:
    using Error::Error;
};

} // namespace kohnert
