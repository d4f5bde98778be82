#pragma once

#include <stdexcept>
#include <string>

namespace trenddiff {

/// Base class for all library failures.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A precondition on an operation's arguments was violated.
struct invalid_parameter_error : error {
    using error::error;
};

/// Caller broke an inter-object contract (e.g. an exposing node that is not
/// adjacent to the exposed one).
struct contract_violation_error : error {
    using error::error;
};

/// Malformed or inconsistent external input: files, logs, mismatched grids.
struct input_error : error {
    using error::error;
};

/// Instance exceeds the limits of an exact algorithm.
struct size_error : error {
    using error::error;
};

/// A numeric validity condition failed (e.g. rho >= dt * sigma, or an
/// estimator that diverges on the given sample).
struct validity_error : error {
    using error::error;
};

} // namespace trenddiff
