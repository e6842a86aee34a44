#pragma once

#include <stdexcept>
#include <string>

namespace polytoep {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Numerics could not certify a result (root residuals too large, etc).
struct IllConditioned : Error {
    using Error::Error;
};

// Laurent expansion of p/q where q is identically zero.
struct ZeroDenominator : Error {
    using Error::Error;
};

// tilde() called with a declared order below the effective one.
struct OrderTooSmall : Error {
    using Error::Error;
};

// Sampled boundary winding and the zero count of the tilde transform disagree.
struct WindingDisagreement : Error {
    using Error::Error;
};

// Indicial data requested at an irregular singular point.
struct NotRegular : Error {
    using Error::Error;
};

// Frobenius recurrence hit a vanishing indicial value with nonzero right side.
struct ResonanceObstruction : Error {
    using Error::Error;
};

// Two independent routes to the same quantity produced different answers.
struct InternalInconsistency : Error {
    using Error::Error;
};

// Finite-section singular values neither decayed cleanly nor stayed bounded away.
struct ConvergenceAmbiguous : Error {
    using Error::Error;
};

// The n-fold-pattern construction requires w != 0.
struct WZeroExcluded : Error {
    using Error::Error;
};

// Malformed input text / JSON.
struct ParseError : Error {
    using Error::Error;
};

// Structurally well-formed input violating a precondition.
struct ValidationError : Error {
    using Error::Error;
};

}  // namespace polytoep
