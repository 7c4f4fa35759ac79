#pragma once

#include <stdexcept>
#include <string>

namespace slspec {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// |D(z)^2 - 4| below the edge guard: Floquet multipliers collide.
struct BandEdgeError : Error {
    using Error::Error;
};

// Monodromy is a scalar matrix; eigenvectors are not determined by the
// off-diagonal formulas.
struct DegenerateMonodromyError : Error {
    using Error::Error;
};

// Floquet vector has (numerically) vanishing first component, so the
// m-function quotient pu'/u is ill-posed under the chosen normalization.
struct NormalizationError : Error {
    using Error::Error;
};

// The Floquet basis at the matching point is numerically dependent.
struct DependentSolutionsError : Error {
    using Error::Error;
};

// Weyl-disc radius stopped shrinking under the y-doubling schedule.
struct LimitCircleSuspectedError : Error {
    using Error::Error;
};

// Moebius denominator vanished while transporting m.
struct PoleCrossingError : Error {
    using Error::Error;
};

// Requested scaling parameter is outside the representable range of f~_x.
struct BracketError : Error {
    using Error::Error;
};

// range(t_1) exceeds range(t_2) on the represented window.
struct DomainExhaustionError : Error {
    using Error::Error;
};

// Weyl-solution logarithm could not be tracked continuously.
struct LogBranchError : Error {
    using Error::Error;
};

// A verification gate's precondition (e.g. reflectionless) failed.
struct PreconditionError : Error {
    using Error::Error;
};

// Bad run configuration (CLI).
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace slspec
