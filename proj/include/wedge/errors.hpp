#pragma once

#include <stdexcept>
#include <string>

namespace wedge {

/// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Skew difference requested with an inner shape not contained in the outer.
struct ContainmentError : Error {
    using Error::Error;
};

/// A combinatorial operator was applied outside its domain.
struct DomainError : Error {
    using Error::Error;
};

/// The bosonic representation has no action for this element.
struct UnsupportedElement : Error {
    using Error::Error;
};

/// Loop-element size does not match the requested embedding period.
struct SizeMismatch : Error {
    using Error::Error;
};

/// Too few variables for the requested polynomial identity check.
struct InsufficientVariables : Error {
    using Error::Error;
};

/// Malformed textual or JSON input; message carries position context.
struct ParseError : Error {
    using Error::Error;
};

/// Exact integer arithmetic left the representable range.
struct OverflowError : Error {
    using Error::Error;
};

} // namespace wedge
