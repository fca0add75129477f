#pragma once

#include <stdexcept>
#include <string>

namespace critgroup {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Inversion requested for a matrix with determinant zero.
struct SingularMatrixError : Error {
    using Error::Error;
};

/// A fusion multiplicity solved from character data was not an integer.
struct NonIntegralFusionError : Error {
    using Error::Error;
};

/// A fusion multiplicity solved from character data was negative.
struct NegativeMultiplicityError : Error {
    using Error::Error;
};

/// A cardinality formula was applied to an infinite critical group.
struct KInfiniteError : Error {
    using Error::Error;
};

/// Chip-firing construction that requires a semisimple algebra.
struct NotSemisimpleError : Error {
    using Error::Error;
};

struct NotAvalancheFiniteError : Error {
    using Error::Error;
};

struct StepLimitExceededError : Error {
    using Error::Error;
};

/// Independently computed equivalent conditions disagreed; indicates
/// corrupted input data or an implementation bug.
struct EquivalenceViolationError : Error {
    using Error::Error;
};

/// Two exact routes to the same quantity disagreed.
struct InternalConsistencyError : Error {
    using Error::Error;
};

struct NotMMatrixError : Error {
    using Error::Error;
};

}  // namespace critgroup
