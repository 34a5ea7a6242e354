#include "resetsde/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "resetsde/clocks.hpp"

namespace resetsde {
namespace {

constexpr double kMaxEulerResetProbability = 0.1;

std::size_t euler_steps(double horizon, double dt) {
    return static_cast<std::size_t>(std::ceil(horizon / dt - 1e-9));
}

// Index of the Euler step that lands on grid time t; throws if t is off the
// dt lattice.
std::size_t euler_step_of(double t, double dt) {
    const double k = std::round(t / dt);
    if (std::abs(k * dt - t) > 1e-9 * std::max(1.0, t))
        throw ConfigError("Euler output time " + std::to_string(t) + " is not a multiple of dt");
    return static_cast<std::size_t>(k);
}

// Advances one Euler path and calls observe(step, time, position, reset)
// after every step. Step 0 (t = 0) is reported before the first move.
template <class Observer>
void euler_run(const ProcessSpec& spec, const EulerScheme& euler, std::size_t steps,
               RngStream& rng, Observer&& observe) {
    const bool poisson = !std::holds_alternative<Renewal>(spec.clock);
    if (!poisson) throw ConfigError("the Euler scheme supports Poisson clocks only");
    const auto intensity = intensity_of(spec.clock);
    const double dt = euler.dt;
    const double noise = std::sqrt(2.0 * spec.diffusivity * dt);
    double x = spec.x0;
    observe(std::size_t{0}, 0.0, x, false);
    for (std::size_t k = 0; k < steps; ++k) {
        const double t = static_cast<double>(k) * dt;
        const double reset_probability = intensity(t) * dt;
        if (reset_probability >= 1.0)
            throw NumericalError("Euler step too coarse for intensity: r(t) dt = " +
                                 std::to_string(reset_probability) + " at t = " +
                                 std::to_string(t));
        const bool reset = rng.uniform() < reset_probability;
        // Reset and diffusion are exclusive branches of one step.
        if (reset)
            x = spec.x_reset;
        else
            x += euler.drift * dt + noise * rng.normal();
        observe(k + 1, static_cast<double>(k + 1) * dt, x, reset);
    }
}

}  // namespace

void validate_config(const ProcessSpec& spec, const SchemeConfig& cfg) {
    validate_spec(spec);
    if (!(cfg.horizon > 0.0) || !std::isfinite(cfg.horizon))
        throw ConfigError("horizon must be positive");
    if (!cfg.grid.empty()) {
        if (cfg.grid.front() != 0.0) throw ConfigError("grid must start at t = 0");
        for (std::size_t i = 1; i < cfg.grid.size(); ++i)
            if (!(cfg.grid[i] > cfg.grid[i - 1]))
                throw ConfigError("grid must be strictly increasing");
        if (cfg.grid.back() > cfg.horizon * (1.0 + 1e-12))
            throw ConfigError("grid extends beyond the horizon");
    }
    if (const auto* euler = std::get_if<EulerScheme>(&cfg.scheme)) {
        if (!(euler->dt > 0.0) || !std::isfinite(euler->dt))
            throw ConfigError("dt must be positive");
        if (!std::isfinite(euler->drift)) throw ConfigError("drift must be finite");
        if (std::holds_alternative<Renewal>(spec.clock))
            throw ConfigError("the Euler scheme supports Poisson clocks only; use the exact scheme");
        const double rate = intensity_of(spec.clock)(0.0);
        if (rate * euler->dt > kMaxEulerResetProbability * (1.0 + 1e-12))
            throw ConfigError("Euler scheme requires r*dt <= 0.1, got " +
                              std::to_string(rate * euler->dt));
        for (double t : cfg.grid) euler_step_of(t, euler->dt);
    }
}

std::vector<double> resolved_grid(const SchemeConfig& cfg) {
    if (!cfg.grid.empty()) return cfg.grid;
    std::vector<double> grid;
    if (const auto* euler = std::get_if<EulerScheme>(&cfg.scheme)) {
        const std::size_t steps = euler_steps(cfg.horizon, euler->dt);
        grid.reserve(steps + 1);
        for (std::size_t k = 0; k <= steps; ++k) grid.push_back(static_cast<double>(k) * euler->dt);
    } else {
        const std::size_t points = SchemeConfig::kDefaultExactPoints;
        grid.reserve(points);
        for (std::size_t k = 0; k < points; ++k)
            grid.push_back(cfg.horizon * static_cast<double>(k) / static_cast<double>(points - 1));
    }
    return grid;
}

double Trajectory::position_at(double t) const {
    const auto it = std::lower_bound(times.begin(), times.end(), t);
    if (it == times.end() || *it != t)
        throw std::out_of_range("trajectory has no point at t = " + std::to_string(t));
    return positions[static_cast<std::size_t>(it - times.begin())];
}

Trajectory simulate_euler(const ProcessSpec& spec, const SchemeConfig& cfg, RngStream& rng) {
    validate_config(spec, cfg);
    const auto* euler = std::get_if<EulerScheme>(&cfg.scheme);
    if (euler == nullptr) throw ConfigError("simulate_euler needs an Euler scheme config");

    Trajectory traj;
    if (cfg.grid.empty()) {
        const std::size_t steps = euler_steps(cfg.horizon, euler->dt);
        traj.times.reserve(steps + 1);
        traj.positions.reserve(steps + 1);
        euler_run(spec, *euler, steps, rng, [&](std::size_t, double t, double x, bool reset) {
            traj.times.push_back(t);
            traj.positions.push_back(x);
            if (reset) traj.reset_times.push_back(t);
        });
        return traj;
    }

    std::vector<std::size_t> record;
    record.reserve(cfg.grid.size());
    for (double t : cfg.grid) record.push_back(euler_step_of(t, euler->dt));
    std::size_t next = 0;
    traj.times = cfg.grid;
    traj.positions.reserve(cfg.grid.size());
    euler_run(spec, *euler, record.back(), rng, [&](std::size_t step, double t, double x, bool reset) {
        if (reset) traj.reset_times.push_back(t);
        if (next < record.size() && record[next] == step) {
            traj.positions.push_back(x);
            ++next;
        }
    });
    return traj;
}

Trajectory simulate_exact(const ProcessSpec& spec, const SchemeConfig& cfg, RngStream& rng) {
    validate_config(spec, cfg);
    if (!std::holds_alternative<ExactScheme>(cfg.scheme))
        throw ConfigError("simulate_exact needs an exact scheme config");

    const std::vector<double> grid = resolved_grid(cfg);
    Trajectory traj;
    traj.reset_times = sample_reset_times(spec.clock, cfg.horizon, rng);
    traj.times.reserve(grid.size() + traj.reset_times.size());
    traj.positions.reserve(grid.size() + traj.reset_times.size());

    const double sigma = std::sqrt(2.0 * spec.diffusivity);
    double x = spec.x0;
    double last_t = 0.0;
    auto reset = traj.reset_times.cbegin();
    for (double t : grid) {
        for (; reset != traj.reset_times.cend() && *reset <= t; ++reset) {
            x = spec.x_reset;
            last_t = *reset;
            if (*reset < t) {
                traj.times.push_back(*reset);
                traj.positions.push_back(x);
            }
        }
        if (t > last_t) x += sigma * std::sqrt(t - last_t) * rng.normal();
        last_t = t;
        traj.times.push_back(t);
        traj.positions.push_back(x);
    }
    return traj;
}

Trajectory simulate(const ProcessSpec& spec, const SchemeConfig& cfg, RngStream& rng) {
    if (std::holds_alternative<EulerScheme>(cfg.scheme)) return simulate_euler(spec, cfg, rng);
    return simulate_exact(spec, cfg, rng);
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    const std::size_t block = (n + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
        const std::size_t begin = w * block;
        const std::size_t end = std::min(n, begin + block);
        workers.emplace_back([&, begin, end] {
            try {
                for (std::size_t i = begin; i < end; ++i) body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    workers.clear();
    if (failure) std::rethrow_exception(failure);
}

unsigned default_thread_count() {
    if (const char* env = std::getenv("RESET_SDE_THREADS")) {
        char* end = nullptr;
        const long value = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && value >= 0) return static_cast<unsigned>(value);
    }
    return 1;
}

Ensemble run_ensemble(const ProcessSpec& spec, const SchemeConfig& cfg, std::size_t n,
                      std::uint64_t seed, unsigned threads) {
    validate_config(spec, cfg);
    if (n == 0) throw ConfigError("ensemble size must be at least 1");
    Ensemble ensemble{spec, cfg, seed, resolved_grid(cfg), std::vector<Trajectory>(n)};
    parallel_for(n, threads, [&](std::size_t i) {
        RngStream rng(seed, i);
        ensemble.trajectories[i] = simulate(spec, cfg, rng);
    });
    return ensemble;
}

std::vector<double> marginal_samples(const ProcessSpec& spec, double t, std::size_t n,
                                     std::uint64_t seed, unsigned threads) {
    validate_spec(spec);
    if (!(t > 0.0)) throw ConfigError("marginal time must be positive");
    if (n == 0) throw ConfigError("sample count must be at least 1");
    const double sigma = std::sqrt(2.0 * spec.diffusivity);
    std::vector<double> out(n);
    parallel_for(n, threads, [&](std::size_t i) {
        RngStream rng(seed, i);
        const auto last = sample_last_reset(spec.clock, t, rng);
        const double origin = last ? spec.x_reset : spec.x0;
        const double elapsed = last ? t - *last : t;
        out[i] = origin + sigma * std::sqrt(elapsed) * rng.normal();
    });
    return out;
}

std::vector<double> euler_marginal_samples(const ProcessSpec& spec, const EulerScheme& euler,
                                           double t, std::size_t n, std::uint64_t seed,
                                           unsigned threads) {
    SchemeConfig cfg{euler, t, {}};
    validate_config(spec, cfg);
    if (n == 0) throw ConfigError("sample count must be at least 1");
    const std::size_t steps = euler_steps(t, euler.dt);
    std::vector<double> out(n);
    parallel_for(n, threads, [&](std::size_t i) {
        RngStream rng(seed, i);
        double final_x = spec.x0;
        euler_run(spec, euler, steps, rng,
                  [&](std::size_t, double, double x, bool) { final_x = x; });
        out[i] = final_x;
    });
    return out;
}

}  // namespace resetsde
