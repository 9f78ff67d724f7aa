// Exception types shared across the library. Each maps to one failure
// class surfaced by the CLI exit codes (config = 2, numerical = 3).
#pragma once

#include <stdexcept>
#include <string>

namespace hybridcr {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A constructor or operation received structurally invalid input
// (bad dimension, asymmetric entries, invalid hyperparameter).
struct InvalidArgument : Error {
    using Error::Error;
};

struct DimMismatch : Error {
    using Error::Error;
};

// A matrix that must be inverted is singular at the working tolerance.
struct SingularBlock : Error {
    using Error::Error;
};

// Bloch vector too close to the sphere surface for SLD information.
struct PureStateBoundary : Error {
    using Error::Error;
};

// Bloch vector outside the unit ball.
struct NonPhysical : Error {
    using Error::Error;
};

// Evaluation point outside a model's declared parameter domain.
struct DomainViolation : Error {
    using Error::Error;
};

// Doubling quadrature nodes moved the result too much; the integrand is
// not resolved by the supplied rule.
struct QuadratureDivergence : Error {
    using Error::Error;
};

// An outcome probability vanished while its derivative did not.
struct ZeroProbabilityOutcome : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct NumericalError : Error {
    using Error::Error;
};

}  // namespace hybridcr
