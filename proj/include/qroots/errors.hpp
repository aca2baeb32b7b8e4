#pragma once

#include <stdexcept>
#include <string>

namespace qroots {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Inversion of a zero quaternion.
struct ZeroDivisorError : Error {
    ZeroDivisorError() : Error("quaternion inverse of zero") {}
};

/// An operation was asked to work on the identically-zero polynomial.
struct ZeroPolynomialError : Error {
    ZeroPolynomialError() : Error("polynomial is identically zero") {}
};

/// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

/// Input polynomial unusable by the root finder (zero leading coefficient,
/// degree zero).
struct DegenerateInputError : Error {
    using Error::Error;
};

/// The simultaneous iteration ran out of its iteration budget.
struct NoConvergenceError : Error {
    int iterations;
    double worst_residual;

    NoConvergenceError(int iterations_, double worst_residual_)
        : Error("root iteration did not converge after " +
                std::to_string(iterations_) +
                " iterations (worst residual " +
                std::to_string(worst_residual_) + ")"),
          iterations(iterations_),
          worst_residual(worst_residual_) {}
};

/// A reported root fails its own defining equation; signals
/// misclassification or ill-conditioning.
struct ResidualTooLargeError : Error {
    double residual;
    double bound;

    ResidualTooLargeError(const std::string& what_, double residual_, double bound_)
        : Error(what_ + " (residual " + std::to_string(residual_) +
                " exceeds bound " + std::to_string(bound_) + ")"),
          residual(residual_),
          bound(bound_) {}
};

/// A documented precondition of an operation does not hold.
struct PreconditionError : Error {
    using Error::Error;
};

}  // namespace qroots
