#pragma once

#include <stdexcept>
#include <string>

namespace sextic {

/// Base of every failure the library reports. Numeric failures derive from
/// NumericError so callers can map them onto a single exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NumericError : public Error {
public:
    using Error::Error;
};

/// Rational root enumeration gave up: a coefficient could not be factored
/// within the configured budget, or the candidate count exceeded its cap.
class FactoringExhausted : public NumericError {
public:
    using NumericError::NumericError;
};

class NonConvergence : public NumericError {
public:
    using NumericError::NumericError;
};

class RepeatedRootSuspected : public NumericError {
public:
    using NumericError::NumericError;
};

class NotNearInteger : public NumericError {
public:
    NotNearInteger(const std::string& what, double worst_distance)
        : NumericError(what), worst_distance_(worst_distance) {}

    double worst_distance() const noexcept { return worst_distance_; }

private:
    double worst_distance_;
};

class PrecisionExhausted : public NumericError {
public:
    using NumericError::NumericError;
};

/// The sextic has a repeated root, so no resolvent criterion applies.
class DegenerateSextic : public NumericError {
public:
    using NumericError::NumericError;
};

class FitInconsistent : public NumericError {
public:
    using NumericError::NumericError;
};

class NoConsistentBranch : public NumericError {
public:
    using NumericError::NumericError;
};

class ZeroD : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace sextic
