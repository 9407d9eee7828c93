#pragma once

#include <stdexcept>
#include <string>

namespace ecfan {

// Error taxonomy. Everything derives from Error so callers can catch the
// whole family; the CLI maps subtypes onto its exit codes (invalid input
// vs. numerical failure).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid input: malformed scenarios, bad grids, unparsable numbers.
struct InputError : Error {
    using Error::Error;
};
struct ParseError : InputError {
    using InputError::InputError;
};
struct GridTooLarge : InputError {
    using InputError::InputError;
};
struct ModeMismatch : InputError {
    using InputError::InputError;
};

// Numerical / domain failures.
struct NumericalError : Error {
    using Error::Error;
};
struct DivisionByZero : NumericalError {
    using NumericalError::NumericalError;
};
struct NegativeRadicand : NumericalError {
    using NumericalError::NumericalError;
};
struct NotRepresentable : NumericalError {
    using NumericalError::NumericalError;
};
struct Overflow : NumericalError {
    using NumericalError::NumericalError;
};
struct ExactnessUnavailable : NumericalError {
    using NumericalError::NumericalError;
};
struct DomainError : NumericalError {
    using NumericalError::NumericalError;
};
struct DegenerateSpeeds : NumericalError {
    using NumericalError::NumericalError;
};
struct DegenerateCoefficient : NumericalError {
    using NumericalError::NumericalError;
};
struct NoSignChange : NumericalError {
    using NumericalError::NumericalError;
};
struct SubsolutionViolated : NumericalError {
    using NumericalError::NumericalError;
};
struct NoSnap : NumericalError {
    using NumericalError::NumericalError;
};
struct NotRarefactionConnectable : NumericalError {
    using NumericalError::NumericalError;
};
struct UnsupportedTransverse : NumericalError {
    using NumericalError::NumericalError;
};

}  // namespace ecfan
