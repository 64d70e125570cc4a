#ifndef MPBN_ERROR_HPP
#define MPBN_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mpbn {

/// Base class of all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed `.bnet` text; `line()` is 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An explicit-state exploration exceeded its configured bound.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

}  // namespace mpbn

#endif  // MPBN_ERROR_HPP
