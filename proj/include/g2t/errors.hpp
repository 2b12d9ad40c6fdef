#pragma once

#include <stdexcept>
#include <string>

namespace g2t {

// Base class for all library errors. Everything thrown on purpose derives
// from this, so callers can distinguish domain errors from genuine bugs.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameter vector violates 4*c_j not-an-integer (reports the index).
struct AdmissibilityError : Error {
    int index;
    explicit AdmissibilityError(int j, const std::string& what)
        : Error(what), index(j) {}
};

// Exponents do not sum to zero within tolerance.
struct SumError : Error {
    using Error::Error;
};

// Branch-point configuration unusable for the requested operation.
struct ConfigError : Error {
    using Error::Error;
};

// Coincident branch points (z_i = z_j or z_i in {0,1}).
struct DegenerateConfigError : Error {
    using Error::Error;
};

// Continuation path passes too close to a puncture.
struct SingularityError : Error {
    using Error::Error;
};

// A local exponent is (numerically) an integer; series recursion undefined.
struct ResonanceError : Error {
    using Error::Error;
};

// Series tail estimate exceeds the requested tolerance.
struct TruncationError : Error {
    using Error::Error;
};

// Quadrature could not reach the requested tolerance; carries best estimate.
struct ToleranceError : Error {
    double best_estimate;
    ToleranceError(const std::string& what, double best)
        : Error(what), best_estimate(best) {}
};

// Series argument outside the domain of convergence.
struct DivergenceError : Error {
    using Error::Error;
};

// Rigorous tail bound unattainable within the term budget.
struct TailBoundError : Error {
    using Error::Error;
};

// Gamma function evaluated at a non-positive integer.
struct PoleError : Error {
    using Error::Error;
};

// Cycle symbol outside the span the operation is defined on.
struct UnknownSymbolError : Error {
    using Error::Error;
};

// No candidate period-relation convention closes on the genus-0 layer.
struct ConventionError : Error {
    using Error::Error;
};

// Malformed configuration document.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace g2t
