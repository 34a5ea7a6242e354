#include "resetsde/clocks.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "resetsde/detail/overloaded.hpp"

namespace resetsde {

using detail::overloaded;

double IntensityFunction::operator()(double t) const {
    return exponent == 0.0 ? rate : rate * std::pow(t + 1.0, exponent);
}

IntensityFunction intensity_of(const ResetClock& clock) {
    if (const auto* c = std::get_if<HomogeneousPoisson>(&clock)) return {c->rate, 0.0};
    if (const auto* c = std::get_if<NonhomogeneousPoisson>(&clock)) return {c->rate, c->exponent};
    throw UnsupportedCase("renewal clocks have no intensity function");
}

double cumulative_intensity(const IntensityFunction& f, double t) {
    if (t <= 0.0 || f.rate == 0.0) return 0.0;
    if (f.exponent == 0.0) return f.rate * t;
    const double q = f.exponent + 1.0;
    const double log_t1 = std::log1p(t);
    if (q == 0.0) return f.rate * log_t1;
    // ((t+1)^q - 1) / q stays accurate as q -> 0.
    return f.rate * std::expm1(q * log_t1) / q;
}

double inverse_cumulative_intensity(const IntensityFunction& f, double u) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (u <= 0.0) return 0.0;
    if (f.rate == 0.0) return inf;
    if (f.exponent == 0.0) return u / f.rate;
    const double q = f.exponent + 1.0;
    if (q == 0.0) return std::expm1(u / f.rate);
    const double arg = q * u / f.rate;
    if (arg <= -1.0) return inf;  // exceeds the finite total intensity r / |q|
    return std::expm1(std::log1p(arg) / q);
}

double sample_gap(const InterResetLaw& law, RngStream& rng) {
    return std::visit(overloaded{
                          [&](const ExponentialLaw& l) { return rng.exponential() / l.rate; },
                          [&](const DeterministicLaw& l) { return l.period; },
                          [&](const ParetoLaw& l) {
                              return l.scale * std::pow(rng.uniform(), -1.0 / l.shape);
                          },
                          [&](const CustomLaw& l) { return l.sample(rng); },
                      },
                      law);
}

namespace {

double checked_gap(const InterResetLaw& law, RngStream& rng) {
    const double gap = sample_gap(law, rng);
    if (!(gap > 0.0) || !std::isfinite(gap))
        throw NumericalError("renewal law produced a non-positive gap: " + std::to_string(gap));
    return gap;
}

}  // namespace

std::vector<double> sample_reset_times(const ResetClock& clock, double horizon, RngStream& rng) {
    if (!(horizon > 0.0)) throw ConfigError("horizon must be positive");
    std::vector<double> times;
    if (const auto* renewal = std::get_if<Renewal>(&clock)) {
        double t = checked_gap(renewal->law, rng);
        while (t <= horizon) {
            times.push_back(t);
            t += checked_gap(renewal->law, rng);
        }
        return times;
    }

    const IntensityFunction f = intensity_of(clock);
    const double total = cumulative_intensity(f, horizon);
    double u = rng.exponential();
    while (u <= total) {
        const double t = std::min(inverse_cumulative_intensity(f, u), horizon);
        // Inversion round-off can collapse two very close epochs.
        if (times.empty() || t > times.back()) times.push_back(t);
        u += rng.exponential();
    }
    return times;
}

std::optional<double> sample_last_reset(const ResetClock& clock, double t, RngStream& rng) {
    if (const auto* renewal = std::get_if<Renewal>(&clock)) {
        std::optional<double> last;
        double s = checked_gap(renewal->law, rng);
        while (s <= t) {
            last = s;
            s += checked_gap(renewal->law, rng);
        }
        return last;
    }
    // In the time change u = R(t) resets form a unit-rate Poisson process, so
    // the backward recurrence time from R(t) is Exp(1) truncated at R(t).
    const IntensityFunction f = intensity_of(clock);
    const double total = cumulative_intensity(f, t);
    const double back = rng.exponential();
    if (back >= total) return std::nullopt;
    return std::min(inverse_cumulative_intensity(f, total - back), t);
}

}  // namespace resetsde
