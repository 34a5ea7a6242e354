#include "resetsde/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "resetsde/analytic.hpp"
#include "resetsde/fpe.hpp"
#include "resetsde/quadrature.hpp"
#include "resetsde/simulate.hpp"
#include "resetsde/stats.hpp"

namespace resetsde::validation {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::size_t scaled(std::size_t n, const Options& options) {
    return std::max<std::size_t>(100, static_cast<std::size_t>(std::llround(n * options.sample_scale)));
}

CheckResult below(std::string name, double measured, double threshold, std::string detail = {}) {
    return {std::move(name), measured, threshold, "<", measured < threshold, std::move(detail)};
}

CheckResult above(std::string name, double measured, double threshold, std::string detail = {}) {
    return {std::move(name), measured, threshold, ">", measured > threshold, std::move(detail)};
}

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(6);
    s << v;
    return s.str();
}

ProcessSpec poisson_spec(double x0, double x_reset, double rate, double diffusivity = 0.5) {
    return ProcessSpec{diffusivity, x0, x_reset, HomogeneousPoisson{rate}};
}

ProcessSpec npp_spec(double rate, double exponent) {
    return ProcessSpec{0.5, 0.0, 0.0, NonhomogeneousPoisson{rate, exponent}};
}

// Final positions of independent exact-scheme trajectories on [0, t].
std::vector<double> exact_scheme_marginal(const ProcessSpec& spec, double t, std::size_t n,
                                          std::uint64_t seed, unsigned threads) {
    SchemeConfig cfg{ExactScheme{}, t, {0.0, t}};
    validate_config(spec, cfg);
    std::vector<double> out(n);
    parallel_for(n, threads, [&](std::size_t i) {
        RngStream rng(seed, i);
        out[i] = simulate_exact(spec, cfg, rng).positions.back();
    });
    return out;
}

// Integral of x^n p(x, t) over the real line.
double quadrature_moment(const ProcessSpec& spec, int n, double t) {
    const auto f = [&](double x) { return std::pow(x, n) * analytic::pdf(spec, x, t); };
    const double lo = std::min(spec.x0, spec.x_reset);
    const double hi = std::max(spec.x0, spec.x_reset);
    return integrate_pieces(f, {-INFINITY, lo, hi, INFINITY});
}

// n-th derivative at 0 by central differences, Richardson-extrapolated over
// three step sizes (error O(h^6)).
double richardson_derivative(const std::function<double(double)>& f, int n, double h) {
    const auto central = [&](double step) {
        double sum = 0.0;
        double binomial = 1.0;
        for (int k = 0; k <= n; ++k) {
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            sum += sign * binomial * f((0.5 * n - k) * step);
            binomial *= static_cast<double>(n - k) / (k + 1);
        }
        return sum / std::pow(step, n);
    };
    const double d1 = central(h);
    const double d2 = central(h / 2);
    const double d4 = central(h / 4);
    const double r1 = (4.0 * d2 - d1) / 3.0;
    const double r2 = (4.0 * d4 - d2) / 3.0;
    return (16.0 * r2 - r1) / 15.0;
}

std::vector<double> log_grid(double t_min, double t_max, std::size_t points) {
    std::vector<double> grid{0.0};
    const double a = std::log(t_min), b = std::log(t_max);
    for (std::size_t k = 0; k < points; ++k)
        grid.push_back(std::exp(a + (b - a) * static_cast<double>(k) / static_cast<double>(points - 1)));
    grid.back() = t_max;
    return grid;
}

SuiteResult suite_pdf_ks(const Options& o) {
    SuiteResult out{"pdf-ks", {}, 0.0};
    const auto start = Clock::now();
    const ProcessSpec spec = poisson_spec(0.0, 3.0, 1.0);
    const double t = 0.1;
    const auto samples = exact_scheme_marginal(spec, t, scaled(100000, o), o.seed, o.threads);
    const double ks = stats::ks_distance(samples, [&](double x) { return analytic::cdf(spec, x, t); });
    out.checks.push_back(below("KS(exact scheme, analytic pdf) x0=0 xR=3 r=1 t=0.1", ks, 0.01,
                               "n=" + std::to_string(samples.size())));
    out.checks.push_back(below("runtime seconds", seconds_since(start), 30.0));
    return out;
}

SuiteResult suite_mean(const Options& o) {
    SuiteResult out{"mean", {}, 0.0};
    const struct {
        double x0, x_reset, rate;
    } cases[] = {{0.0, 5.0, 1.0}, {1.0, -2.0, 0.5}, {-3.0, 0.0, 2.0}};
    std::uint64_t offset = 0;
    for (const auto& c : cases) {
        const ProcessSpec spec = poisson_spec(c.x0, c.x_reset, c.rate);
        for (double t : {0.1, 0.5, 1.5}) {
            const auto samples = marginal_samples(spec, t, scaled(100000, o), o.seed + 101 + offset++, o.threads);
            const auto est = stats::sample_mean(samples);
            const double expected = analytic::mean(spec, t);
            std::ostringstream name;
            name << "|MC mean - closed form| / SE, (x0,xR,r,t)=(" << c.x0 << "," << c.x_reset << ","
                 << c.rate << "," << t << ")";
            out.checks.push_back(below(name.str(), std::abs(est.mean - expected) / est.std_error, 3.0,
                                       "MC " + fmt(est.mean) + " vs " + fmt(expected)));
        }
    }
    return out;
}

SuiteResult suite_stationary(const Options& o) {
    SuiteResult out{"stationary", {}, 0.0};
    const double r = 1.0;
    const ProcessSpec spec = poisson_spec(0.0, 0.0, r);
    const auto samples = marginal_samples(spec, 20.0 / r, scaled(1000000, o), o.seed + 202, o.threads);
    const double var = stats::sample_variance(samples);
    out.checks.push_back(below("relative error of variance vs 1/r at t=20/r", std::abs(var * r - 1.0), 0.03,
                               "variance " + fmt(var)));
    const double ks = stats::ks_distance(samples, [&](double x) { return analytic::laplace_cdf(x, r, 0.0); });
    out.checks.push_back(below("KS vs Laplace(0, (2r)^-1/2) CDF", ks, 0.005));
    return out;
}

SuiteResult suite_moments(const Options& o) {
    SuiteResult out{"moments", {}, 0.0};
    const ProcessSpec spec = poisson_spec(1.0, 0.0, 1.0);
    const double t = 0.7;
    const auto samples = marginal_samples(spec, t, scaled(1000000, o), o.seed + 303, o.threads);
    const auto mgf_at = [&](double s) { return analytic::mgf(spec, s, t); };
    for (int n = 1; n <= 6; ++n) {
        const double closed = analytic::nth_moment(spec, n, t);
        const double quad = quadrature_moment(spec, n, t);
        const double deriv = richardson_derivative(mgf_at, n, 0.16);
        const double scale = std::max(std::abs(closed), 1e-300);
        out.checks.push_back(below("n=" + std::to_string(n) + " relative |closed - quadrature|",
                                   std::abs(closed - quad) / scale, 1e-6,
                                   "closed " + fmt(closed) + ", quadrature " + fmt(quad)));
        out.checks.push_back(below("n=" + std::to_string(n) + " relative |closed - MGF derivative|",
                                   std::abs(closed - deriv) / scale, 1e-4, "derivative " + fmt(deriv)));
        if (n <= 4) {
            std::vector<double> powers(samples.size());
            std::transform(samples.begin(), samples.end(), powers.begin(),
                           [n](double x) { return std::pow(x, n); });
            const auto est = stats::sample_mean(powers);
            out.checks.push_back(below("n=" + std::to_string(n) + " |MC - closed| / SE",
                                       std::abs(est.mean - closed) / est.std_error, 3.0,
                                       "MC " + fmt(est.mean)));
        }
    }
    return out;
}

SuiteResult suite_fpe(const Options&) {
    SuiteResult out{"fpe-agreement", {}, 0.0};
    const ProcessSpec spec = poisson_spec(0.0, 3.0, 1.0);
    for (double t : {0.1, 1.0}) {
        const auto grid = fpe::default_grid(spec, t, 1e-2, 1e-3);
        auto start = Clock::now();
        const auto evans = fpe::solve_fpe_evans(spec, grid, t);
        const double evans_seconds = seconds_since(start);
        start = Clock::now();
        const auto delta_fl = fpe::solve_fpe_delta_fl(spec, grid, t);
        const double delta_seconds = seconds_since(start);
        const auto exact = analytic::tabulate_pdf(spec, grid.xs(), t);
        const std::string at = " at t=" + fmt(t);
        out.checks.push_back(below("L1(evans, delta-fl)" + at, l1_distance(evans, delta_fl), 1e-3));
        out.checks.push_back(below("L1(evans, analytic)" + at, l1_distance(evans, exact), 1e-2));
        out.checks.push_back(below("L1(delta-fl, analytic)" + at, l1_distance(delta_fl, exact), 1e-2));
        out.checks.push_back(below("evans solve seconds" + at, evans_seconds, 60.0));
        out.checks.push_back(below("delta-fl solve seconds" + at, delta_seconds, 60.0));
    }
    const ProcessSpec centred = poisson_spec(0.0, 0.0, 1.0);
    const auto grid = fpe::default_grid(centred, 0.0, 1e-2, 1e-3);
    const auto start = Clock::now();
    const auto stationary = fpe::stationary_fpe(centred, grid);
    const double seconds = seconds_since(start);
    DensityCurve laplace{grid.xs(), {}, INFINITY, Provenance::analytic};
    for (double x : laplace.xs) laplace.values.push_back(analytic::stationary_pdf(centred, x));
    out.checks.push_back(below("Linf(stationary solve, Laplace)", linf_distance(stationary, laplace), 1e-3));
    out.checks.push_back(below("stationary solve seconds", seconds, 60.0));
    return out;
}

SuiteResult suite_dynkin(const Options& o) {
    SuiteResult out{"dynkin", {}, 0.0};
    const ProcessSpec spec = poisson_spec(1.0, 0.5, 1.0);

    // Discrete duality on random grid functions vanishing near the walls.
    {
        fpe::FpeGrid grid{-5.0, 0.01, 1001, 1e-3, fpe::Boundary::reflecting};
        RngStream rng(o.seed + 404, 0);
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<double> g(grid.n, 0.0), f(grid.n, 0.0);
            for (std::size_t i = 50; i + 50 < grid.n; ++i) {
                g[i] = 2.0 * rng.uniform() - 1.0;
                f[i] = 2.0 * rng.uniform() - 1.0;
            }
            const double lhs = fpe::inner_product(fpe::apply_generator(g, grid, spec), f, grid.h);
            const double rhs = fpe::inner_product(g, fpe::apply_adjoint(f, grid, spec), grid.h);
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
        }
        out.checks.push_back(below("max |<Ag,f> - <g,A*f>| / max(1,|<Ag,f>|), 20 random pairs", worst, 1e-8));
    }

    // d/dt E g(X_t) against E (A g)(X_t) for g(x) = x^2, using the discrete
    // generator interpolated at the samples.
    {
        fpe::FpeGrid grid{-15.0, 0.01, 3001, 1e-3, fpe::Boundary::reflecting};
        std::vector<double> g(grid.n);
        for (std::size_t i = 0; i < grid.n; ++i) g[i] = grid.x(i) * grid.x(i);
        const std::vector<double> ag = fpe::apply_generator(g, grid, spec);
        const auto ag_at = [&](double x) {
            const double pos = std::clamp((x - grid.x_lo) / grid.h, 1.0, static_cast<double>(grid.n - 3));
            const auto i = static_cast<std::size_t>(pos);
            const double frac = pos - static_cast<double>(i);
            return (1.0 - frac) * ag[i] + frac * ag[i + 1];
        };
        const double dt = 0.02;
        std::uint64_t offset = 0;
        for (double t : {0.25, 0.5, 1.0}) {
            SchemeConfig cfg{ExactScheme{}, t + dt, {0.0, t - dt, t, t + dt}};
            const auto ens = run_ensemble(spec, cfg, scaled(100000, o), o.seed + 505 + offset++, o.threads);
            std::vector<double> q;
            q.reserve(ens.trajectories.size());
            for (const auto& traj : ens.trajectories) {
                const double before = traj.position_at(t - dt);
                const double now = traj.position_at(t);
                const double after = traj.position_at(t + dt);
                q.push_back((after * after - before * before) / (2.0 * dt) - ag_at(now));
            }
            const auto est = stats::sample_mean(q);
            out.checks.push_back(below("Dynkin |d/dt E X^2 - E A(x^2)| / SE at t=" + fmt(t),
                                       std::abs(est.mean) / est.std_error, 3.0,
                                       "mean difference " + fmt(est.mean)));
        }
    }

    // dp/dt from the closed-form density against A* p.
    {
        const double t = 0.5;
        const auto grid = fpe::default_grid(spec, t, 1e-2, 1e-3);
        const auto xs = grid.xs();
        std::vector<double> p(grid.n), dpdt(grid.n);
        const double eps = 1e-4;
        for (std::size_t i = 0; i < grid.n; ++i) {
            p[i] = analytic::pdf(spec, xs[i], t);
            dpdt[i] = (analytic::pdf(spec, xs[i], t + eps) - analytic::pdf(spec, xs[i], t - eps)) / (2 * eps);
        }
        const auto adj = fpe::apply_adjoint(p, grid, spec);
        double l1 = 0.0;
        for (std::size_t i = 0; i < grid.n; ++i) l1 += grid.h * std::abs(dpdt[i] - adj[i]);
        out.checks.push_back(below("L1(dp/dt, A* p) at t=0.5", l1, 1e-2));
    }
    return out;
}

SuiteResult suite_msd(const Options& o) {
    SuiteResult out{"msd-exponents", {}, 0.0};
    const auto start = Clock::now();
    const double horizon = 100.0;
    const std::size_t n = scaled(10000, o);
    SchemeConfig cfg{ExactScheme{}, horizon, log_grid(0.1, horizon, 200)};
    const struct {
        double p, expected;
    } fits[] = {{-0.5, 0.5}, {-1.0, 1.0}, {-1.5, 1.0}, {0.0, 0.0}};
    std::uint64_t offset = 0;
    for (const auto& c : fits) {
        const ProcessSpec spec = npp_spec(1.0, c.p);
        const auto ens = run_ensemble(spec, cfg, n, o.seed + 606 + offset++, o.threads);
        const auto series = stats::empirical_msd(ens);
        const double mu = fit_power_law_exponent(series, stats::default_fit_window(series));
        // Second window for sensitivity, reported only.
        const double mu_mid = fit_power_law_exponent(series, {horizon / 20.0, horizon / 2.0});
        out.checks.push_back(below("|fitted exponent - " + fmt(c.expected) + "| for p=" + fmt(c.p),
                                   std::abs(mu - c.expected), 0.1,
                                   "fit [10,100]: " + fmt(mu) + ", fit [5,50]: " + fmt(mu_mid)));
    }
    {
        const ProcessSpec spec = npp_spec(1.0, 0.5);
        const auto ens = run_ensemble(spec, cfg, n, o.seed + 606 + offset++, o.threads);
        const auto series = stats::empirical_msd(ens);
        const double theory = analytic::npp_msd(spec, horizon);
        const double mc = series.msd.back();
        out.checks.push_back(below("p=0.5 relative |MSD(100) - numerical MSD integral|",
                                   std::abs(mc - theory) / theory, 0.10,
                                   "MC " + fmt(mc) + " vs " + fmt(theory)));
        const double mu = fit_power_law_exponent(series, stats::default_fit_window(series));
        out.checks.push_back(below("p=0.5 fitted exponent over last decade (decreasing MSD)", mu, 0.0));
        const auto tenth = std::lower_bound(series.ts.begin(), series.ts.end(), horizon / 10.0);
        const double early = series.msd[static_cast<std::size_t>(tenth - series.ts.begin())];
        out.checks.push_back(below("p=0.5 MSD(100) / MSD(10)", mc / early, 1.0));
    }
    out.checks.push_back(below("runtime seconds", seconds_since(start), 600.0));
    return out;
}

SuiteResult suite_npp_density(const Options& o) {
    SuiteResult out{"npp-density", {}, 0.0};
    {
        const ProcessSpec spec = npp_spec(1.0, -0.5);
        const double t = 5.0;
        const auto samples = marginal_samples(spec, t, scaled(100000, o), o.seed + 707, o.threads);
        // CDF from the tabulated density by cumulative trapezoid.
        const double reach = 12.0 * std::sqrt(t);
        const std::size_t points = 6001;
        std::vector<double> xs(points), cdf(points, 0.0);
        double prev = 0.0;
        for (std::size_t i = 0; i < points; ++i) {
            xs[i] = -reach + 2.0 * reach * static_cast<double>(i) / static_cast<double>(points - 1);
            const double value = analytic::npp_pdf(spec, xs[i], t);
            if (i > 0) cdf[i] = cdf[i - 1] + 0.5 * (value + prev) * (xs[i] - xs[i - 1]);
            prev = value;
        }
        const auto interp = [&](double x) {
            if (x <= xs.front()) return 0.0;
            if (x >= xs.back()) return cdf.back();
            const double pos = (x - xs.front()) / (xs[1] - xs[0]);
            const auto i = static_cast<std::size_t>(pos);
            const double frac = pos - static_cast<double>(i);
            return (1.0 - frac) * cdf[i] + frac * cdf[i + 1];
        };
        out.checks.push_back(below("KS(MC, npp_pdf) r=1 p=-0.5 t=5", stats::ks_distance(samples, interp), 0.02));
    }
    {
        double worst = 0.0;
        for (double rate : {0.5, 1.0, 2.0}) {
            const ProcessSpec npp = npp_spec(rate, 0.0);
            const ProcessSpec poisson = poisson_spec(0.0, 0.0, rate);
            for (double t : {0.1, 1.0, 5.0})
                for (double s = -3.0; s <= 3.0; s += 0.5)
                    worst = std::max(worst, std::abs(analytic::npp_char_fn(npp, s, t) -
                                                     analytic::char_fn(poisson, s, t)));
        }
        out.checks.push_back(below("max |npp_char_fn(p=0) - char_fn| on (r,s,t) grid", worst, 1e-8));
    }
    return out;
}

SuiteResult suite_scheme_convergence(const Options& o) {
    SuiteResult out{"scheme-convergence", {}, 0.0};
    const ProcessSpec spec = poisson_spec(0.0, 0.0, 1.0);
    const double t = 1.0;
    const std::size_t n = scaled(100000, o);
    const auto exact = exact_scheme_marginal(spec, t, n, o.seed + 808, o.threads);
    std::vector<double> ks;
    std::uint64_t offset = 0;
    for (double dt : {1e-1, 1e-2, 1e-3}) {
        const auto euler = euler_marginal_samples(spec, EulerScheme{dt, 0.0}, t, n, o.seed + 909 + offset++, o.threads);
        ks.push_back(stats::ks_two_sample(euler, exact));
    }
    const std::string values = "KS at dt=0.1,0.01,0.001: " + fmt(ks[0]) + ", " + fmt(ks[1]) + ", " + fmt(ks[2]);
    out.checks.push_back(above("KS(dt=0.1) - KS(dt=0.01)", ks[0] - ks[1], 0.0, values));
    out.checks.push_back(above("KS(dt=0.01) - KS(dt=0.001)", ks[1] - ks[2], 0.0, values));
    return out;
}

SuiteResult suite_properties(const Options&) {
    SuiteResult out{"properties", {}, 0.0};
    int failures = 0;
    // MGF domain.
    for (double r : {0.5, 1.0, 2.0}) {
        const ProcessSpec spec = poisson_spec(0.0, 1.0, r);
        for (double factor : {1.0, 1.5, -1.0}) {
            try {
                analytic::mgf(spec, factor * std::sqrt(2.0 * r), 1.0);
                ++failures;
            } catch (const DomainError&) {
            }
        }
    }
    out.checks.push_back(below("MGF calls at |s| >= sqrt(2r) not rejected", failures, 0.5));

    double worst_modulus = 0.0;
    for (double r : {0.0, 0.5, 2.0})
        for (double t : {0.0, 0.3, 3.0})
            for (double s = -20.0; s <= 20.0; s += 0.25)
                worst_modulus = std::max(worst_modulus,
                                         std::abs(analytic::char_fn(poisson_spec(1.0, -2.0, r), s, t)));
    out.checks.push_back(below("max |phi_t(s)| - 1", worst_modulus - 1.0, 1e-12));

    double worst_mass = 0.0;
    for (const auto& spec : {poisson_spec(0.0, 3.0, 1.0), poisson_spec(1.0, 0.0, 0.5),
                             poisson_spec(-2.0, 2.0, 4.0, 1.5)})
        for (double t : {0.05, 0.7, 5.0}) {
            const auto f = [&](double x) { return analytic::pdf(spec, x, t); };
            const double mass = integrate_pieces(
                f, {-INFINITY, std::min(spec.x0, spec.x_reset), std::max(spec.x0, spec.x_reset), INFINITY});
            worst_mass = std::max(worst_mass, std::abs(mass - 1.0));
        }
    out.checks.push_back(below("max |integral of pdf - 1|", worst_mass, 1e-4));

    double worst_odd = 0.0, worst_odd_quad = 0.0;
    for (double r : {0.5, 1.0, 3.0})
        for (double t : {0.2, 1.0, 4.0}) {
            const ProcessSpec spec = poisson_spec(0.0, 0.0, r);
            for (int n : {1, 3, 5}) {
                worst_odd = std::max(worst_odd, std::abs(analytic::nth_moment(spec, n, t)));
                const double absolute = 2.0 * integrate(
                    [&](double x) { return std::pow(x, n) * analytic::pdf(spec, x, t); }, 0.0, INFINITY);
                worst_odd_quad = std::max(worst_odd_quad, std::abs(quadrature_moment(spec, n, t)) / absolute);
            }
        }
    out.checks.push_back(below("max |odd moment| at x0=xR=0, closed form", worst_odd, 1e-12));
    out.checks.push_back(below("max |odd moment| / E|X|^n at x0=xR=0, quadrature", worst_odd_quad, 1e-8));

    double worst_brownian = 0.0;
    const ProcessSpec still = poisson_spec(0.7, 3.0, 0.0);
    for (double t : {0.1, 1.0}) {
        for (double s : {-2.0, 0.5, 3.0}) {
            const double bm_mgf = std::exp(s * 0.7 + 0.5 * t * s * s);
            worst_brownian = std::max(worst_brownian, std::abs(analytic::mgf(still, s, t) / bm_mgf - 1.0));
            const auto bm_cf = std::polar(std::exp(-0.5 * t * s * s), s * 0.7);
            worst_brownian = std::max(worst_brownian, std::abs(analytic::char_fn(still, s, t) - bm_cf));
        }
        for (double x : {-1.0, 0.7, 2.5})
            worst_brownian = std::max(worst_brownian,
                                      std::abs(analytic::pdf(still, x, t) - analytic::gaussian_pdf(x, 0.7, t)));
        worst_brownian = std::max(worst_brownian, std::abs(analytic::mean(still, t) - 0.7));
        worst_brownian = std::max(worst_brownian,
                                  std::abs(analytic::nth_moment(poisson_spec(0.7, 0.0, 0.0), 2, t) - (0.49 + t)));
    }
    out.checks.push_back(below("max deviation of r=0 formulas from Brownian motion", worst_brownian, 1e-12));
    return out;
}

const std::map<std::string, std::function<SuiteResult(const Options&)>>& registry() {
    static const std::map<std::string, std::function<SuiteResult(const Options&)>> suites = {
        {"pdf-ks", suite_pdf_ks},
        {"mean", suite_mean},
        {"stationary", suite_stationary},
        {"moments", suite_moments},
        {"fpe-agreement", suite_fpe},
        {"dynkin", suite_dynkin},
        {"msd-exponents", suite_msd},
        {"npp-density", suite_npp_density},
        {"scheme-convergence", suite_scheme_convergence},
        {"properties", suite_properties},
    };
    return suites;
}

}  // namespace

bool SuiteResult::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<std::string> suite_names() {
    return {"pdf-ks",  "mean",          "stationary",  "moments",            "fpe-agreement",
            "dynkin",  "msd-exponents", "npp-density", "scheme-convergence", "properties"};
}

std::vector<std::string> default_suites() {
    return {"pdf-ks", "moments", "msd-exponents", "fpe-agreement", "dynkin"};
}

SuiteResult run_suite(const std::string& name, const Options& options) {
    const auto it = registry().find(name);
    if (it == registry().end()) throw std::invalid_argument("unknown validation suite '" + name + "'");
    const auto start = Clock::now();
    SuiteResult result = it->second(options);
    result.seconds = seconds_since(start);
    return result;
}

nlohmann::json to_json(const SuiteResult& result) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : result.checks)
        checks.push_back({{"name", c.name},
                          {"measured", c.measured},
                          {"threshold", c.threshold},
                          {"relation", c.relation},
                          {"passed", c.passed},
                          {"detail", c.detail}});
    return {{"suite", result.suite}, {"passed", result.passed()}, {"seconds", result.seconds},
            {"checks", checks}};
}

}  // namespace resetsde::validation
