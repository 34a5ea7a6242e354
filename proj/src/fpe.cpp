#include "resetsde/fpe.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "resetsde/analytic.hpp"

namespace resetsde::fpe {
namespace {

// Tridiagonal matrix with rows (lower[i], diag[i], upper[i]).
struct Tridiagonal {
    std::vector<double> lower, diag, upper;
};

// Thomas algorithm; `rhs` is overwritten with the solution.
void solve_tridiagonal(const Tridiagonal& m, std::vector<double>& rhs) {
    const std::size_t n = m.diag.size();
    std::vector<double> c(n);
    double pivot = m.diag[0];
    if (pivot == 0.0) throw NumericalError("singular tridiagonal system");
    c[0] = m.upper[0] / pivot;
    rhs[0] /= pivot;
    for (std::size_t i = 1; i < n; ++i) {
        pivot = m.diag[i] - m.lower[i] * c[i - 1];
        if (pivot == 0.0 || !std::isfinite(pivot)) throw NumericalError("singular tridiagonal system");
        c[i] = m.upper[i] / pivot;
        rhs[i] = (rhs[i] - m.lower[i] * rhs[i - 1]) / pivot;
    }
    for (std::size_t i = n - 1; i-- > 0;) rhs[i] -= c[i] * rhs[i + 1];
}

// Matrix of D * Laplacian - rate * I.
Tridiagonal diffusion_operator(const FpeGrid& grid, double diffusivity, double rate) {
    const std::size_t n = grid.n;
    const double k = diffusivity / (grid.h * grid.h);
    Tridiagonal op{std::vector<double>(n, k), std::vector<double>(n, -2.0 * k - rate),
                   std::vector<double>(n, k)};
    op.lower[0] = 0.0;
    op.upper[n - 1] = 0.0;
    if (grid.boundary == Boundary::reflecting) {
        op.diag[0] = -k - rate;
        op.diag[n - 1] = -k - rate;
    }
    return op;
}

std::vector<double> multiply(const Tridiagonal& m, const std::vector<double>& v) {
    const std::size_t n = v.size();
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        double value = m.diag[i] * v[i];
        if (i > 0) value += m.lower[i] * v[i - 1];
        if (i + 1 < n) value += m.upper[i] * v[i + 1];
        out[i] = value;
    }
    return out;
}

// I + factor * op
Tridiagonal shifted(const Tridiagonal& op, double factor) {
    Tridiagonal out = op;
    for (std::size_t i = 0; i < op.diag.size(); ++i) {
        out.lower[i] *= factor;
        out.upper[i] *= factor;
        out.diag[i] = 1.0 + factor * op.diag[i];
    }
    return out;
}

double nodal_mass(const std::vector<double>& p, double h) {
    return h * std::accumulate(p.begin(), p.end(), 0.0);
}

double standard_scale(const ProcessSpec& spec, double rate, double t_final) {
    // With resetting the spread saturates; the unreset Gaussian part carries
    // weight e^{-rt} and is negligible after a few reset times.
    const double horizon = rate > 0.0 ? std::min(t_final, 4.0 / rate) : t_final;
    double scale = horizon > 0.0 ? std::sqrt(2.0 * spec.diffusivity * horizon) : 0.0;
    if (rate > 0.0) scale = std::max(scale, std::sqrt(spec.diffusivity / rate));
    return scale;
}

DensityCurve to_curve(const FpeGrid& grid, std::vector<double> values, double t) {
    return DensityCurve{grid.xs(), std::move(values), t, Provenance::fpe};
}

DensityCurve evolve(const ProcessSpec& spec, const FpeGrid& grid, double t_final,
                    double source_strength) {
    validate_grid(spec, grid, t_final);
    const double rate = homogeneous_rate(spec.clock);
    if (t_final == 0.0) return to_curve(grid, discrete_delta(grid, spec.x0), 0.0);
    if (!(t_final > 0.0)) throw ConfigError("t_final must be non-negative");

    const Tridiagonal op = diffusion_operator(grid, spec.diffusivity, rate);
    std::vector<double> source = discrete_delta(grid, spec.x_reset);
    for (double& s : source) s *= source_strength;

    std::vector<double> p = discrete_delta(grid, spec.x0);
    const std::size_t steps = std::max<std::size_t>(
        static_cast<std::size_t>(std::ceil(t_final / grid.dt - 1e-9)), 2);
    const double dt = t_final / static_cast<double>(steps);

    const auto check_mass = [&](double t) {
        const double mass = nodal_mass(p, grid.h);
        if (std::abs(mass - 1.0) > 1e-3) {
            std::ostringstream msg;
            msg << "Fokker-Planck mass drifted to " << mass << " at t = " << t
                << " (boundary too close or grid too coarse)";
            throw NumericalError(msg.str());
        }
    };

    // Rannacher start-up: two steps as four backward-Euler half steps.
    const Tridiagonal implicit_half = shifted(op, -0.5 * dt);
    for (int half = 0; half < 4; ++half) {
        for (std::size_t i = 0; i < p.size(); ++i) p[i] += 0.5 * dt * source[i];
        solve_tridiagonal(implicit_half, p);
    }
    check_mass(2.0 * dt);

    const Tridiagonal explicit_half = shifted(op, 0.5 * dt);
    for (std::size_t step = 2; step < steps; ++step) {
        std::vector<double> rhs = multiply(explicit_half, p);
        for (std::size_t i = 0; i < p.size(); ++i) rhs[i] += dt * source[i];
        solve_tridiagonal(implicit_half, rhs);
        p = std::move(rhs);
        check_mass(static_cast<double>(step + 1) * dt);
    }
    return to_curve(grid, std::move(p), t_final);
}

}  // namespace

std::vector<double> FpeGrid::xs() const {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = x(i);
    return out;
}

FpeGrid default_grid(const ProcessSpec& spec, double t_final, double h, double dt) {
    validate_spec(spec);
    const double rate = homogeneous_rate(spec.clock);
    double scale = standard_scale(spec, rate, t_final);
    if (scale == 0.0) scale = std::sqrt(spec.diffusivity);  // no time and no resetting
    const double reach = 8.0 * scale;
    const double lo = std::min(spec.x0, spec.x_reset) - reach;
    const double hi = std::max(spec.x0, spec.x_reset) + reach;
    FpeGrid grid;
    grid.h = h;
    grid.dt = dt;
    grid.n = static_cast<std::size_t>(std::ceil((hi - lo) / h)) + 1;
    grid.x_lo = lo;
    grid.boundary = Boundary::reflecting;
    return grid;
}

void validate_grid(const ProcessSpec& spec, const FpeGrid& grid, double t_final) {
    validate_spec(spec);
    if (!(grid.h > 0.0) || grid.n < 3) throw ConfigError("grid needs h > 0 and at least 3 nodes");
    if (!(grid.dt > 0.0)) throw ConfigError("dt must be positive");
    if (grid.dt > grid.h) throw ConfigError("accuracy requires dt <= h");
    const double rate = homogeneous_rate(spec.clock);
    const double margin = 5.0 * standard_scale(spec, rate, t_final);
    for (const auto& [name, x] : {std::pair{"x0", spec.x0}, std::pair{"xR", spec.x_reset}}) {
        if (x - grid.x_lo < margin || grid.x_hi() - x < margin) {
            std::ostringstream msg;
            msg << name << " = " << x << " is closer than 5 standard scales (" << margin
                << ") to the grid boundary [" << grid.x_lo << ", " << grid.x_hi() << "]";
            throw ConfigError(msg.str());
        }
    }
}

std::vector<double> discrete_delta(const FpeGrid& grid, double x) {
    std::vector<double> out(grid.n, 0.0);
    const double position = (x - grid.x_lo) / grid.h;
    if (position < 0.0 || position > static_cast<double>(grid.n - 1))
        throw ConfigError("delta location outside the grid");
    auto left = static_cast<std::size_t>(std::floor(position));
    if (left == grid.n - 1) left = grid.n - 2;
    const double frac = position - static_cast<double>(left);
    out[left] = (1.0 - frac) / grid.h;
    out[left + 1] += frac / grid.h;
    return out;
}

double inner_product(const std::vector<double>& a, const std::vector<double>& b, double h) {
    if (a.size() != b.size()) throw ConfigError("inner product of mismatched grid functions");
    return h * std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

DensityCurve solve_fpe_evans(const ProcessSpec& spec, const FpeGrid& grid, double t_final) {
    const double rate = homogeneous_rate(validate_spec(spec).spec().clock);
    return evolve(spec, grid, t_final, rate);
}

DensityCurve solve_fpe_delta_fl(const ProcessSpec& spec, const FpeGrid& grid, double t_final) {
    const double rate = homogeneous_rate(validate_spec(spec).spec().clock);
    const double coefficient =
        rate > 0.0 ? 2.0 * std::sqrt(rate * spec.diffusivity) *
                         analytic::stationary_pdf(spec, spec.x_reset)
                   : 0.0;
    return evolve(spec, grid, t_final, coefficient);
}

DensityCurve stationary_fpe(const ProcessSpec& spec, const FpeGrid& grid) {
    validate_grid(spec, grid, 0.0);
    const double rate = homogeneous_rate(spec.clock);
    if (!(rate > 0.0))
        throw NumericalError("stationary system is singular without resetting (r = 0)");
    // -(D L - r I) p = r delta
    Tridiagonal op = diffusion_operator(grid, spec.diffusivity, rate);
    for (std::size_t i = 0; i < grid.n; ++i) {
        op.lower[i] = -op.lower[i];
        op.diag[i] = -op.diag[i];
        op.upper[i] = -op.upper[i];
    }
    std::vector<double> p = discrete_delta(grid, spec.x_reset);
    for (double& v : p) v *= rate;
    solve_tridiagonal(op, p);
    const double mass = nodal_mass(p, grid.h);
    if (!(mass > 0.0) || !std::isfinite(mass)) throw NumericalError("stationary solve failed");
    for (double& v : p) v /= mass;
    return to_curve(grid, std::move(p), INFINITY);
}

std::vector<double> second_difference(const std::vector<double>& values, const FpeGrid& grid) {
    if (values.size() != grid.n) throw ConfigError("grid function size does not match the grid");
    return multiply(diffusion_operator(grid, 1.0, 0.0), values);
}

std::vector<double> apply_generator(const std::vector<double>& g, const FpeGrid& grid,
                                    const ProcessSpec& spec) {
    validate_spec(spec);
    const double rate = homogeneous_rate(spec.clock);
    std::vector<double> out = second_difference(g, grid);
    const std::vector<double> delta = discrete_delta(grid, spec.x_reset);
    const double g_reset = inner_product(delta, g, grid.h);  // linear interpolation
    for (std::size_t i = 0; i < g.size(); ++i)
        out[i] = spec.diffusivity * out[i] + rate * (g_reset - g[i]);
    return out;
}

std::vector<double> apply_adjoint(const std::vector<double>& f, const FpeGrid& grid,
                                  const ProcessSpec& spec) {
    validate_spec(spec);
    const double rate = homogeneous_rate(spec.clock);
    std::vector<double> out = second_difference(f, grid);
    const std::vector<double> delta = discrete_delta(grid, spec.x_reset);
    const double mass = nodal_mass(f, grid.h);
    for (std::size_t i = 0; i < f.size(); ++i)
        out[i] = spec.diffusivity * out[i] + rate * (delta[i] * mass - f[i]);
    return out;
}

}  // namespace resetsde::fpe
