#pragma once

#include <stdexcept>
#include <string>

namespace hmx {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes are incompatible with the requested operation.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// An index argument is out of range or violates an ordering precondition.
class IndexError : public Error {
public:
    using Error::Error;
};

/// A precondition on values (not shapes) was violated.
class DomainError : public Error {
public:
    using Error::Error;
};

/// An iterative solver failed to converge or hit a defective input.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// A linear system required to be nonsingular is (numerically) singular.
class SingularSystemError : public Error {
public:
    SingularSystemError(const std::string& what, double magnitude)
        : Error(what), magnitude_(magnitude) {}
    /// |det| (or smallest pivot) observed when the system was rejected.
    double magnitude() const noexcept { return magnitude_; }

private:
    double magnitude_;
};

/// Completion of a lifted decomposition failed.
class LiftError : public Error {
public:
    LiftError(const std::string& what, int rank) : Error(what), rank_(rank) {}
    int numerical_rank() const noexcept { return rank_; }

private:
    int rank_;
};

/// Malformed serialized input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t offset)
        : Error(what + " (line " + std::to_string(line) + ", offset " +
                std::to_string(offset) + ")"),
          line_(line), offset_(offset) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t line_;
    std::size_t offset_;
};

}  // namespace hmx
