#pragma once

#include <stdexcept>
#include <string>

namespace stratadiv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two expressions from different fibered powers were combined.
struct AmbientError : Error {
    using Error::Error;
};

// substitute_interior was called on an expression that still carries
// point classes (K or D generators).
struct NotPushedForwardError : Error {
    using Error::Error;
};

// pushforward_last requires its input in rewriting normal form.
struct NotReducedError : Error {
    using Error::Error;
};

// chern_invert requires constant term 1.
struct NotUnitalError : Error {
    using Error::Error;
};

struct InputError : Error {
    using Error::Error;
};

// A counting record produced a non-integral quotient; the record is bad.
struct ModelError : Error {
    using Error::Error;
};

struct SolverError : Error {
    using Error::Error;
};

struct StateError : Error {
    using Error::Error;
};

} // namespace stratadiv
