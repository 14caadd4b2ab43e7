#pragma once

#include <stdexcept>
#include <string>

namespace rdts {

/// Bad user input: malformed files, schema violations, inconsistent traces.
/// The CLI maps this to exit code 2.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Structurally valid input that admits no answer (all points at one
/// temperature, Stokes signal at the noise floor, diverging iteration).
/// The CLI maps this to exit code 3.
struct DegenerateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Ratio outside the invertible domain of the calibration curve.
struct InvalidRatioError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace rdts
