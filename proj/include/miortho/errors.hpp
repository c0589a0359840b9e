#pragma once

#include <stdexcept>
#include <string>

namespace miortho {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact algebra
struct NonExactDivision : Error {
    using Error::Error;
};
struct SizeCapExceeded : Error {
    using Error::Error;
};

// classical families
struct UnsupportedFamily : Error {
    using Error::Error;
};

// multi-index combinatorics
struct MismatchedExtra : Error {
    using Error::Error;
};
struct UnsupportedRange : Error {
    using Error::Error;
};

// deformed construction
struct NonPolynomialResult : Error {
    using Error::Error;
};
struct DegenerateParameters : Error {
    using Error::Error;
};

// numeric roots
struct PrecisionExhausted : Error {
    using Error::Error;
};
struct DegenerateInput : Error {
    using Error::Error;
};
struct PairingFailure : Error {
    using Error::Error;
};

// spectral
struct ZeroCollision : Error {
    using Error::Error;
};
struct SimpleZeroViolation : Error {
    using Error::Error;
};
struct ConvergenceFailure : Error {
    using Error::Error;
};

// driver
struct InvalidSpec : Error {
    using Error::Error;
};

} // namespace miortho
