#pragma once

#include <stdexcept>
#include <string>

namespace czlattice {

// All library failures derive from Error so callers can catch one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// q - q^-1 vanished exactly; the undeformed limit is the caller's problem.
struct DegenerateQ : Error {
    using Error::Error;
};

// Operands were built over different phase rings.
struct RingMismatch : Error {
    using Error::Error;
};

// A requested phase (half/quarter power, imaginary unit, ...) is not an
// integer power of the session's primitive root.
struct PhaseNotRepresentable : Error {
    using Error::Error;
};

struct SizeMismatch : Error {
    using Error::Error;
};

struct SizeTooSmall : Error {
    using Error::Error;
};

struct NotHermitian : Error {
    using Error::Error;
};

struct NonCoprimeFlux : Error {
    using Error::Error;
};

// Ordered-product moves must all live on the same quantum line.
struct MixedLines : Error {
    using Error::Error;
};

struct WindowUnderflow : Error {
    using Error::Error;
};

// DSL parse failure with position info baked into the message.
struct SyntaxError : Error {
    int line;
    int col;
    SyntaxError(int line_, int col_, const std::string& what_)
        : Error("syntax error at " + std::to_string(line_) + ":" + std::to_string(col_) + ": " + what_),
          line(line_), col(col_) {}
};

struct UnknownName : Error {
    using Error::Error;
};

struct EvaluationError : Error {
    using Error::Error;
};

} // namespace czlattice
