#pragma once

#include <stdexcept>
#include <string>

namespace pertcrit {

/// Base class of every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (CLI exit code 2).
struct InvalidInput : Error {
    using Error::Error;
};

struct NotHermitian : InvalidInput {
    explicit NotHermitian(const std::string& what, double defect = 0.0)
        : InvalidInput(what), defect(defect) {}
    double defect;
};

struct TooLarge : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct InsufficientData : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct InsufficientOrbitals : InvalidInput {
    using InvalidInput::InvalidInput;
};

/// A numerical procedure failed (CLI exit code 3).
struct NumericalError : Error {
    using Error::Error;
};

struct NoConvergence : NumericalError {
    explicit NoConvergence(const std::string& what, long iterations = 0)
        : NumericalError(what), iterations(iterations) {}
    long iterations;
};

/// A Sylvester divisor |alpha_i - beta_j| fell below tolerance: the
/// (1+eps)-shifted spectra collide.  Carries the conditioning diagnostics.
struct SpectraOverlap : NumericalError {
    SpectraOverlap(const std::string& what, double min_divisor, double tolerance)
        : NumericalError(what), min_divisor(min_divisor), tolerance(tolerance) {}
    double min_divisor;
    double tolerance;
};

struct Stagnation : NumericalError {
    explicit Stagnation(const std::string& what, long steps = 0)
        : NumericalError(what), steps(steps) {}
    long steps;
};

struct DivergedFromGuess : NumericalError {
    using NumericalError::NumericalError;
};

struct AmbiguousMatch : NumericalError {
    explicit AmbiguousMatch(const std::string& what, double theta = 0.0)
        : NumericalError(what), theta(theta) {}
    double theta;
};

struct SpectrumFailure : NumericalError {
    using NumericalError::NumericalError;
};

struct QuadratureNotConverged : NumericalError {
    using NumericalError::NumericalError;
};

struct ScfNotConverged : NumericalError {
    explicit ScfNotConverged(const std::string& what, double residual = 0.0)
        : NumericalError(what), residual(residual) {}
    double residual;
};

/// The full candidate set was examined without a ground-state hit.
struct Exhausted : Error {
    using Error::Error;
};

/// Candidate supply ran out but the solve is resumable with larger m
/// (CLI exit code 4).
struct NeedMoreCandidates : Error {
    NeedMoreCandidates(const std::string& what, int m_reached)
        : Error(what), m_reached(m_reached) {}
    int m_reached;
};

}  // namespace pertcrit
