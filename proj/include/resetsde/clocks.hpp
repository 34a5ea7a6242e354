#pragma once

#include <optional>
#include <vector>

#include "resetsde/core.hpp"
#include "resetsde/rng.hpp"

namespace resetsde {

/// Power-law reset intensity r(t) = rate * (t + 1)^exponent.
struct IntensityFunction {
    double rate = 1.0;
    double exponent = 0.0;

    double operator()(double t) const;
};

/// Intensity of a Poisson clock: homogeneous clocks map to exponent 0.
/// Throws UnsupportedCase for renewal clocks.
IntensityFunction intensity_of(const ResetClock& clock);

/// R(t) = integral of r over [0, t], the mean number of resets up to t.
double cumulative_intensity(const IntensityFunction& f, double t);

/// Solves R(t) = u for t. Returns +inf when u >= R(inf), which is finite
/// for exponent < -1 and for rate 0.
double inverse_cumulative_intensity(const IntensityFunction& f, double u);

/// Reset epochs in (0, horizon], strictly increasing.
///
/// Poisson clocks are sampled exactly by mapping a unit-rate stream through
/// the inverse of R; renewal clocks accumulate i.i.d. gaps. Throws
/// NumericalError if a renewal law yields a non-positive gap.
std::vector<double> sample_reset_times(const ResetClock& clock, double horizon, RngStream& rng);

/// Time of the last reset in (0, t], or nullopt when no reset occurred.
/// Poisson clocks use the backward recurrence time directly; renewal clocks
/// run forward.
std::optional<double> sample_last_reset(const ResetClock& clock, double t, RngStream& rng);

/// One gap drawn from a renewal law.
double sample_gap(const InterResetLaw& law, RngStream& rng);

}  // namespace resetsde
