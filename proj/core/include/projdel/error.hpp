#pragma once

#include <stdexcept>
#include <string>

namespace projdel {

/// Malformed input: bad JSON, unknown variable, dimension mismatch.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition does not hold (degree bound, zero polynomial,
/// nullification, singular matrix).
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// E_x0(P) is the zero polynomial: P nullifies above x0.
class NullifiedError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Branch matching could not be resolved even after adaptive resampling.
class TrackingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace projdel
