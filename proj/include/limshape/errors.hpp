#pragma once
#include <stdexcept>
#include <string>

namespace limshape {

// Bad input: malformed parameters, violated preconditions. CLI exit 1.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input was fine but the computation could not complete. CLI exit 2.
struct ComputationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotStabilized : ComputationError {
    using ComputationError::ComputationError;
};

struct DimensionUnsupported : ComputationError {
    using ComputationError::ComputationError;
};

}  // namespace limshape
