#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "resetsde/core.hpp"
#include "resetsde/rng.hpp"

namespace resetsde {

/// Grid Euler scheme: per step of length dt the particle resets with
/// probability r(t) dt (left-endpoint intensity), otherwise it takes a
/// Gaussian step of variance 2 D dt. `drift` adds a constant mu dt to
/// non-reset steps; it exists for checking the generalized Ito formula and
/// no closed form covers it.
struct EulerScheme {
    double dt = 1e-3;
    double drift = 0.0;
};

/// Event-driven scheme: reset epochs are sampled from the clock and the
/// Brownian part is sampled exactly between consecutive event/grid points.
struct ExactScheme {};

using Scheme = std::variant<EulerScheme, ExactScheme>;

struct SchemeConfig {
    Scheme scheme = ExactScheme{};
    double horizon = 1.0;
    /// Output times, ascending, starting at 0 and ending at or before the
    /// horizon. Empty selects the default: every dt step for Euler,
    /// `kDefaultExactPoints` uniform points for the exact scheme.
    std::vector<double> grid;

    static constexpr std::size_t kDefaultExactPoints = 1001;
};

/// Throws ConfigError for a non-positive horizon, a malformed grid, an Euler
/// step with r dt > 0.1 at t = 0, or an Euler run with a renewal clock.
void validate_config(const ProcessSpec& spec, const SchemeConfig& cfg);

/// Output grid the config resolves to.
std::vector<double> resolved_grid(const SchemeConfig& cfg);

struct Trajectory {
    std::vector<double> times;
    std::vector<double> positions;
    std::vector<double> reset_times;

    /// Position at a time that is exactly one of `times`; throws
    /// std::out_of_range otherwise.
    double position_at(double t) const;
};

struct Ensemble {
    ProcessSpec spec;
    SchemeConfig config;
    std::uint64_t seed = 0;
    std::vector<double> grid;  // common output grid shared by all trajectories
    std::vector<Trajectory> trajectories;
};

Trajectory simulate_euler(const ProcessSpec& spec, const SchemeConfig& cfg, RngStream& rng);

/// Reset epochs that fall between output points are inserted into the
/// trajectory with position exactly x_R.
Trajectory simulate_exact(const ProcessSpec& spec, const SchemeConfig& cfg, RngStream& rng);

/// Dispatches on cfg.scheme.
Trajectory simulate(const ProcessSpec& spec, const SchemeConfig& cfg, RngStream& rng);

/// Trajectory i is driven by RngStream(seed, i); the result does not depend
/// on `threads`. threads == 0 means hardware concurrency.
Ensemble run_ensemble(const ProcessSpec& spec, const SchemeConfig& cfg, std::size_t n,
                      std::uint64_t seed, unsigned threads = 1);

/// n i.i.d. draws of X_t using only the last reset epoch before t.
/// Sample i is driven by RngStream(seed, i).
std::vector<double> marginal_samples(const ProcessSpec& spec, double t, std::size_t n,
                                     std::uint64_t seed, unsigned threads = 1);

/// Positions at the final time of independent Euler runs to `t`; sample i
/// uses RngStream(seed, i). Memory is O(n), not O(n * steps).
std::vector<double> euler_marginal_samples(const ProcessSpec& spec, const EulerScheme& euler,
                                           double t, std::size_t n, std::uint64_t seed,
                                           unsigned threads = 1);

/// Runs body(i) for i in [0, n) over `threads` workers in contiguous blocks.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body);

/// Thread count from RESET_SDE_THREADS, defaulting to 1.
unsigned default_thread_count();

}  // namespace resetsde
