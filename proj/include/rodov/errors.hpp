#pragma once

#include <stdexcept>
#include <string>

namespace rodov {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// piecewise
struct NonZeroMeanInput : Error { using Error::Error; };
struct IdenticallyZero : Error { using Error::Error; };
struct LevelOutOfRange : Error { using Error::Error; };

// spline construction
struct NegativeParameter : Error { using Error::Error; };
struct NotApplicable : Error { using Error::Error; };
struct NonPositiveLambda : Error { using Error::Error; };
struct InvalidParams : Error { using Error::Error; };
struct KOutOfRange : Error { using Error::Error; };

// matcher
struct Infeasible : Error { using Error::Error; };
struct NoBracket : Error { using Error::Error; };
struct MonotonicityViolation : Error { using Error::Error; };

// rearrangement
struct NegativeInput : Error { using Error::Error; };
struct TOutOfRange : Error { using Error::Error; };

// verification
struct HypothesisFailed : Error { using Error::Error; };
struct DerivativeUnavailable : Error { using Error::Error; };
struct EqualityPreconditionFailed : Error { using Error::Error; };
struct BadExponents : Error { using Error::Error; };

} // namespace rodov
