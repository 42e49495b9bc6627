#pragma once

#include <stdexcept>

namespace moo {

/// Base class for every error the library raises.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Inputs whose sizes do not line up (vector lengths, Jacobian shape, ...).
struct DimensionError : Error {
    using Error::Error;
};

/// Inputs violating a documented precondition: non-finite entries, weights off
/// the simplex, nadir violations, invalid configuration values.
struct ValidationError : Error {
    using Error::Error;
};

/// Non-finite values produced while iterating. Aborts the run instead of
/// propagating NaN.
struct NumericError : Error {
    using Error::Error;
};

}  // namespace moo
