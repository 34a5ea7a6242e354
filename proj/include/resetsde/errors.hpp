#pragma once

#include <stdexcept>
#include <string>

namespace resetsde {

// Invalid user configuration (bad parameter values, malformed descriptors).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of a closed form, e.g. the MGF
// evaluated at |s| >= sqrt(2r).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A closed form exists only for a restricted parameter set (x_R = 0, ...).
class UnsupportedCase : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Quadrature/series non-convergence, mass drift, singular systems.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace resetsde
