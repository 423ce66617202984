#pragma once

#include <stdexcept>
#include <string>

namespace priorforge {

// Input-side failures: the request itself is bad (CLI exit code 2).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidSurface : InputError {
    using InputError::InputError;
};

struct NegativeLength : InputError {
    using InputError::InputError;
};

struct UnsupportedRank : InputError {
    using InputError::InputError;
};

struct InputOutOfRange : InputError {
    using InputError::InputError;
};

struct C2BelowThreshold : InputError {
    long long threshold;
    C2BelowThreshold(const std::string& msg, long long thr)
        : InputError(msg), threshold(thr) {}
};

struct NonIntegralParameter : InputError {
    using InputError::InputError;
};

struct DivisorSumMismatch : InputError {
    using InputError::InputError;
};

// A lattice/Chern arithmetic assertion failed; signals a bug, not bad input.
struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace priorforge
