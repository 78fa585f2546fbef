#pragma once

#include <stdexcept>
#include <string>

namespace bellkit {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands have incompatible dimensions.
struct DimensionError : Error {
    using Error::Error;
};

/// A matrix required to be Hermitian is not (entrywise tolerance).
struct NotHermitianError : Error {
    using Error::Error;
};

/// An observable required to square to the identity does not.
struct NotDichotomicError : Error {
    using Error::Error;
};

/// A response-function table lacks an entry for the requested label/point.
struct UnknownObservableError : Error {
    using Error::Error;
};

/// A hidden-variable model violates its structural constraints
/// (weight normalization, value set, incomplete table).
struct ModelError : Error {
    using Error::Error;
};

/// Exhaustive search was requested on an instance beyond the search budget.
struct InstanceTooLargeError : Error {
    using Error::Error;
};

/// A formula was evaluated under an assignment missing one of its atoms.
struct UnboundAtomError : Error {
    using Error::Error;
};

/// Malformed textual input (observable spec strings, JSON documents).
struct ParseError : Error {
    using Error::Error;
};

}  // namespace bellkit
