#pragma once

#include <stdexcept>
#include <string>

namespace exotic {

// Malformed user input (bad marked partition, bad JSON, inconsistent constraints).
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An enumeration was asked for a rank above its configured bound.
struct BoundExceeded : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// A documented precondition on a mathematical object does not hold
// (non-strict marked partition, non-admissible point, non-torus centralizer).
struct PreconditionFailed : std::domain_error {
    using std::domain_error::domain_error;
};

// Internal arithmetic invariant broken; never caused by valid input.
struct InexactDivision : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace exotic
