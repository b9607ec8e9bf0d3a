#pragma once

#include <stdexcept>
#include <string>

namespace qde {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotHermitianError : Error { using Error::Error; };
struct DimMismatchError : Error { using Error::Error; };
struct NonSymmetricPointError : Error { using Error::Error; };
struct ValidityViolationError : Error { using Error::Error; };
struct GeometryOutOfRangeError : Error { using Error::Error; };
struct QuadratureNonConvergenceError : Error { using Error::Error; };
struct StepNonConvergenceError : Error { using Error::Error; };
struct InvariantBreachError : Error { using Error::Error; };
struct ConditionViolationError : Error { using Error::Error; };
struct DivisionByZeroRateError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

}  // namespace qde
