#pragma once

#include <stdexcept>
#include <string>

namespace radrank {

/// Operands with incompatible dimensions.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An argument outside the operation's domain (unknown prime, empty tuple, ...).
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A configured enumeration bound was exceeded.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The model does not satisfy a precondition of the requested computation.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The model is too degenerate for a structural correspondence to hold.
struct StructureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input file; the message carries a field path or parse position.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace radrank
