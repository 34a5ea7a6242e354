#include "resetsde/core.hpp"

#include <cmath>

#include "resetsde/detail/overloaded.hpp"

namespace resetsde {
namespace {

using detail::overloaded;

void require(bool ok, const std::string& message) {
    if (!ok) throw ConfigError(message);
}

void validate_rate(double rate, const char* field) {
    require(std::isfinite(rate), std::string(field) + " must be finite");
    require(rate >= 0.0, std::string(field) + " must be non-negative");
}

void validate_law(const InterResetLaw& law) {
    std::visit(overloaded{
                   [](const ExponentialLaw& l) {
                       require(std::isfinite(l.rate) && l.rate > 0.0,
                               "clock.renewal_law.rate must be positive");
                   },
                   [](const DeterministicLaw& l) {
                       require(std::isfinite(l.period) && l.period > 0.0,
                               "clock.renewal_law.period must be positive");
                   },
                   [](const ParetoLaw& l) {
                       require(std::isfinite(l.scale) && l.scale > 0.0,
                               "clock.renewal_law.scale must be positive");
                       require(std::isfinite(l.shape) && l.shape > 0.0,
                               "clock.renewal_law.shape must be positive");
                   },
                   [](const CustomLaw& l) {
                       require(static_cast<bool>(l.sample),
                               "clock.renewal_law: custom law has no sampler");
                   },
               },
               law);
}

}  // namespace

ValidatedSpec validate_spec(const ProcessSpec& spec) {
    require(std::isfinite(spec.diffusivity), "diffusivity must be finite");
    require(spec.diffusivity > 0.0, "diffusivity must be positive");
    require(std::isfinite(spec.x0), "x0 must be finite");
    require(std::isfinite(spec.x_reset), "xR must be finite");
    std::visit(overloaded{
                   [](const HomogeneousPoisson& c) { validate_rate(c.rate, "clock.r"); },
                   [](const NonhomogeneousPoisson& c) {
                       validate_rate(c.rate, "clock.r");
                       require(std::isfinite(c.exponent), "clock.p must be finite");
                   },
                   [](const Renewal& c) { validate_law(c.law); },
               },
               spec.clock);
    return ValidatedSpec(spec);
}

UnitScaling rescale_to_unit(const ProcessSpec& spec) {
    validate_spec(spec);
    UnitScaling map;
    map.scale = std::sqrt(2.0 * spec.diffusivity);
    map.unit = spec;
    map.unit.diffusivity = 0.5;
    map.unit.x0 = spec.x0 / map.scale;
    map.unit.x_reset = spec.x_reset / map.scale;
    return map;
}

double homogeneous_rate(const ResetClock& clock) {
    if (const auto* c = std::get_if<HomogeneousPoisson>(&clock)) return c->rate;
    if (const auto* c = std::get_if<NonhomogeneousPoisson>(&clock); c && c->exponent == 0.0)
        return c->rate;
    throw UnsupportedCase("closed form requires a homogeneous Poisson clock, got " +
                          clock_type_name(clock));
}

std::string clock_type_name(const ResetClock& clock) {
    return std::visit(overloaded{
                          [](const HomogeneousPoisson&) { return std::string("poisson"); },
                          [](const NonhomogeneousPoisson&) { return std::string("npp"); },
                          [](const Renewal&) { return std::string("renewal"); },
                      },
                      clock);
}

}  // namespace resetsde
