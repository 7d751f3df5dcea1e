#pragma once

#include <stdexcept>
#include <string>

namespace cotk {

/// Base class of every error thrown by the toolkit.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed operation input: bad co-set, uniformity mismatch, index out of range.
struct InputError : Error {
    using Error::Error;
};

/// Construction parameters violate a precondition (non-prime p, divisibility, ...).
struct ParamError : Error {
    using Error::Error;
};

/// Instance exceeds a hard size guard.
struct SizeError : Error {
    using Error::Error;
};

/// Edge-list parsing failure. Carries the 1-based line and column of the
/// offending token.
struct ParseError : Error {
    int line = 0;
    int column = 0;

    ParseError(const std::string& what, int line_, int column_)
        : Error(what + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

} // namespace cotk
