#pragma once

#include <functional>
#include <string>
#include <variant>

#include "resetsde/errors.hpp"
#include "resetsde/rng.hpp"

namespace resetsde {

/// Resets at the epochs of a Poisson process with constant rate.
/// rate == 0 is the no-reset limit (plain Brownian motion).
struct HomogeneousPoisson {
    double rate = 1.0;
};

/// Poisson process with power-law intensity rate * (t + 1)^exponent.
struct NonhomogeneousPoisson {
    double rate = 1.0;
    double exponent = 0.0;
};

struct ExponentialLaw {
    double rate = 1.0;
};

struct DeterministicLaw {
    double period = 1.0;
};

/// Pareto(scale, shape): P(T > u) = (scale / u)^shape for u >= scale.
struct ParetoLaw {
    double scale = 1.0;
    double shape = 1.5;
};

/// User-supplied inter-reset sampler. Not serializable.
struct CustomLaw {
    std::string name;
    std::function<double(RngStream&)> sample;
};

using InterResetLaw = std::variant<ExponentialLaw, DeterministicLaw, ParetoLaw, CustomLaw>;

/// Renewal resetting: gaps between consecutive resets are i.i.d. draws.
struct Renewal {
    InterResetLaw law;
};

using ResetClock = std::variant<HomogeneousPoisson, NonhomogeneousPoisson, Renewal>;

/// Brownian motion with diffusivity D, started at x0 and reset to x_reset at
/// the epochs of `clock`.
struct ProcessSpec {
    double diffusivity = 0.5;
    double x0 = 0.0;
    double x_reset = 0.0;
    ResetClock clock = HomogeneousPoisson{};
};

/// A ProcessSpec whose invariants have been checked. Only validate_spec
/// constructs one.
class ValidatedSpec {
public:
    const ProcessSpec& spec() const { return spec_; }
    operator const ProcessSpec&() const { return spec_; }

private:
    explicit ValidatedSpec(ProcessSpec spec) : spec_(std::move(spec)) {}
    ProcessSpec spec_;
    friend ValidatedSpec validate_spec(const ProcessSpec& spec);
};

/// Throws ConfigError naming the offending field.
ValidatedSpec validate_spec(const ProcessSpec& spec);

/// Spatial map between a spec and its unit-diffusivity (D = 1/2) image.
/// X^(D)_t = scale * X^(1/2)_t path by path, with scale = sqrt(2D).
struct UnitScaling {
    ProcessSpec unit;
    double scale = 1.0;

    double to_user(double x_unit) const { return scale * x_unit; }
    double to_unit(double x_user) const { return x_user / scale; }
};

UnitScaling rescale_to_unit(const ProcessSpec& spec);

/// Rate r of a clock that is homogeneous Poisson, including the
/// nonhomogeneous clock with exponent exactly 0. Throws UnsupportedCase
/// otherwise.
double homogeneous_rate(const ResetClock& clock);

/// Short type tag used in JSON and diagnostics: "poisson", "npp", "renewal".
std::string clock_type_name(const ResetClock& clock);

}  // namespace resetsde
