#pragma once

#include <stdexcept>
#include <string>

namespace bicsim {

// Invalid configuration, parameters or input contracts. CLI exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Failure inside a numerical backend (eigensolver, integrator). CLI exit code 3.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Physically invalid regime: out-of-band probe, band-edge wave vector. CLI exit code 4.
struct RegimeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace bicsim
