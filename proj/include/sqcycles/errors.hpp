#pragma once

#include <stdexcept>
#include <string>

namespace sqcycles {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Precondition violated by the caller (bad modulus, non-coprime input, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A result does not fit in 64 bits.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Input exceeds a configured resource limit, e.g. the oracle memory cap.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

/// Malformed external input (fixture or b-file), carries the offending line.
class ParseError : public Error {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& what)
        : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An internal consistency check failed; indicates a bug, never bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace sqcycles
