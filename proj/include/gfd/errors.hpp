#ifndef GFD_ERRORS_HPP
#define GFD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gfd {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed expression text. `position` is the character offset of the
/// first offending token.
struct ParseError : Error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& msg)
        : Error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

/// Evaluation outside a function's domain (ln of a non-positive value,
/// fractional power of a non-positive base, division by zero, unbound
/// variable, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Positivity/monotonicity precondition of an operator not met.
struct PositivityError : Error {
    using Error::Error;
};

/// Invalid finite-difference step, or a step that leaves the domain.
struct StepError : Error {
    using Error::Error;
};

/// Fractional order outside the range an operator supports.
struct AlphaError : Error {
    using Error::Error;
};

/// Invalid evaluation grid (too few steps, empty, non-positive points).
struct GridError : Error {
    using Error::Error;
};

/// A representing weight is undefined because f'(t) = 0.
struct SingularError : Error {
    using Error::Error;
};

/// A weight with the wrong t-dependence class for the requested check.
struct WeightClassError : Error {
    using Error::Error;
};

/// A witness search scanned the whole interval without finding one.
struct NoWitnessError : Error {
    using Error::Error;
};

/// Inconsistent problem parameters (a = 0, tau <= 0, ...).
struct ParameterError : Error {
    using Error::Error;
};

/// A numeric trajectory left the representable range.
struct BlowupError : Error {
    using Error::Error;
};

}  // namespace gfd

#endif
