#pragma once

#include <stdexcept>
#include <string>

namespace mcd {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rank/level out of range, degree out of range, and similar argument errors.
class InvalidParameters : public Error {
public:
    using Error::Error;
};

/// The query is only defined for odd m (torsion machinery, diameter crossings).
class UnsupportedRegime : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its contract, e.g. forced arcs of a
/// non-crossing pair or a torsion pair built from a non-Ptolemy set.
class PreconditionViolation : public Error {
public:
    using Error::Error;
};

/// Malformed arc literal or set document. `token()` names the offending input.
class ParseError : public Error {
public:
    ParseError(const std::string &message, std::string token)
        : Error(message), token_(std::move(token)) {}

    const std::string &token() const noexcept { return token_; }

private:
    std::string token_;
};

}  // namespace mcd
