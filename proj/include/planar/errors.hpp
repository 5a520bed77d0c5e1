#pragma once

#include <stdexcept>

namespace planar {

// Bad arguments: mixed number systems, malformed text, invalid parameters.
// The CLI maps this to exit code 2.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Inverse (or division) requested for a non-invertible element.
struct NonInvertibleError : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace planar
