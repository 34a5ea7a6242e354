#include <doctest.h>

#include <cmath>

#include "resetsde/analytic.hpp"
#include "resetsde/simulate.hpp"
#include "resetsde/stats.hpp"

using namespace resetsde;

namespace {
ProcessSpec poisson(double x0, double xr, double r) { return {0.5, x0, xr, HomogeneousPoisson{r}}; }
}  // namespace

TEST_CASE("config validation") {
    const ProcessSpec spec = poisson(0, 0, 1);
    CHECK_NOTHROW(validate_config(spec, SchemeConfig{}));
    CHECK_THROWS_AS(validate_config(spec, SchemeConfig{ExactScheme{}, 0.0, {}}), ConfigError);
    CHECK_THROWS_AS(validate_config(spec, SchemeConfig{ExactScheme{}, 1.0, {0.0, 0.5, 0.5}}), ConfigError);
    CHECK_THROWS_AS(validate_config(spec, SchemeConfig{ExactScheme{}, 1.0, {0.1, 0.5}}), ConfigError);
    CHECK_THROWS_AS(validate_config(spec, SchemeConfig{ExactScheme{}, 1.0, {0.0, 2.0}}), ConfigError);
    CHECK_THROWS_AS(validate_config(spec, SchemeConfig{EulerScheme{0.0}, 1.0, {}}), ConfigError);
    CHECK_THROWS_AS(validate_config(poisson(0, 0, 20), SchemeConfig{EulerScheme{0.01}, 1.0, {}}), ConfigError);
    CHECK_NOTHROW(validate_config(spec, SchemeConfig{EulerScheme{0.1}, 1.0, {}}));
    CHECK_THROWS_AS(validate_config(spec, SchemeConfig{EulerScheme{0.1}, 1.0, {0.0, 0.25}}), ConfigError);
    const ProcessSpec renewal{0.5, 0, 0, Renewal{ExponentialLaw{1.0}}};
    CHECK_THROWS_AS(validate_config(renewal, SchemeConfig{EulerScheme{0.01}, 1.0, {}}), ConfigError);
    CHECK_NOTHROW(validate_config(renewal, SchemeConfig{ExactScheme{}, 1.0, {}}));
}

TEST_CASE("resolved grids") {
    CHECK(resolved_grid(SchemeConfig{ExactScheme{}, 2.0, {}}).size() == SchemeConfig::kDefaultExactPoints);
    const auto g = resolved_grid(SchemeConfig{EulerScheme{0.25}, 1.0, {}});
    REQUIRE(g.size() == 5);
    CHECK(g.back() == doctest::Approx(1.0));
}

TEST_CASE("exact trajectories include the grid and land on x_R at resets") {
    const ProcessSpec spec = poisson(1.0, 2.0, 3.0);
    const SchemeConfig cfg{ExactScheme{}, 2.0, {0.0, 0.5, 1.0, 2.0}};
    for (int i = 0; i < 50; ++i) {
        RngStream rng(3, i);
        const auto traj = simulate_exact(spec, cfg, rng);
        CHECK(traj.positions.front() == 1.0);
        for (double t : cfg.grid) CHECK_NOTHROW(traj.position_at(t));
        for (double tr : traj.reset_times) CHECK(traj.position_at(tr) == 2.0);
        CHECK_THROWS_AS(traj.position_at(0.123), std::out_of_range);
    }
}

TEST_CASE("ensembles do not depend on the thread count") {
    const ProcessSpec spec{0.5, 0.0, 1.0, NonhomogeneousPoisson{1.0, -0.5}};
    const SchemeConfig cfg{ExactScheme{}, 3.0, {}};
    const auto one = run_ensemble(spec, cfg, 64, 99, 1);
    const auto four = run_ensemble(spec, cfg, 64, 99, 4);
    for (std::size_t i = 0; i < 64; ++i) {
        CHECK(one.trajectories[i].positions == four.trajectories[i].positions);
        CHECK(one.trajectories[i].reset_times == four.trajectories[i].reset_times);
    }
    const auto m1 = marginal_samples(poisson(0, 0, 1), 1.0, 1000, 5, 1);
    const auto m3 = marginal_samples(poisson(0, 0, 1), 1.0, 1000, 5, 3);
    CHECK(m1 == m3);
    const auto e1 = euler_marginal_samples(poisson(0, 0, 1), EulerScheme{0.01}, 1.0, 500, 5, 1);
    const auto e2 = euler_marginal_samples(poisson(0, 0, 1), EulerScheme{0.01}, 1.0, 500, 5, 2);
    CHECK(e1 == e2);
}

TEST_CASE("without resets the ensemble is Brownian") {
    const ProcessSpec spec{2.0, 1.0, -5.0, HomogeneousPoisson{0.0}};
    const auto xs = marginal_samples(spec, 0.5, 50000, 6);
    const auto m = stats::sample_mean(xs);
    CHECK(std::abs(m.mean - 1.0) < 4.0 * m.std_error);
    CHECK(stats::sample_variance(xs) == doctest::Approx(2.0).epsilon(0.03));
}

TEST_CASE("exact trajectories and marginal fast path agree") {
    const ProcessSpec spec = poisson(0.0, 1.5, 2.0);
    const SchemeConfig cfg{ExactScheme{}, 0.7, {0.0, 0.7}};
    std::vector<double> paths;
    for (int i = 0; i < 20000; ++i) {
        RngStream rng(21, i);
        paths.push_back(simulate(spec, cfg, rng).positions.back());
    }
    const auto fast = marginal_samples(spec, 0.7, 20000, 22);
    CHECK(stats::ks_pvalue(stats::ks_two_sample(paths, fast), 10000.0) > 1e-3);
}

TEST_CASE("Euler drift follows the mean equation") {
    // dE X = mu dt + r (x_R - E X) dt.
    const double mu = 1.5, r = 2.0, x0 = 1.0, xr = -1.0, t = 1.0;
    const auto xs = euler_marginal_samples(poisson(x0, xr, r), EulerScheme{1e-3, mu}, t, 40000, 7);
    const double expected = xr + mu / r + (x0 - xr - mu / r) * std::exp(-r * t);
    const auto m = stats::sample_mean(xs);
    CHECK(std::abs(m.mean - expected) < 4.0 * m.std_error + 5e-3);
}

TEST_CASE("Euler mean without drift is close to the closed form") {
    const ProcessSpec spec = poisson(0.0, 5.0, 1.0);
    const auto xs = euler_marginal_samples(spec, EulerScheme{1e-3}, 0.5, 40000, 8);
    const auto m = stats::sample_mean(xs);
    CHECK(std::abs(m.mean - analytic::mean(spec, 0.5)) < 4.0 * m.std_error + 5e-3);
}

TEST_CASE("Euler fails loudly when the intensity outgrows the step") {
    const ProcessSpec spec{0.5, 0.0, 0.0, NonhomogeneousPoisson{1.0, 3.0}};
    RngStream rng(9, 0);
    CHECK_THROWS_AS(simulate_euler(spec, SchemeConfig{EulerScheme{0.09}, 10.0, {}}, rng), NumericalError);
}

TEST_CASE("renewal ensembles run on the exact scheme") {
    const ProcessSpec spec{0.5, 0.0, 0.0, Renewal{DeterministicLaw{0.5}}};
    const auto ens = run_ensemble(spec, SchemeConfig{ExactScheme{}, 2.0, {0.0, 1.0, 2.0}}, 10, 4);
    for (const auto& traj : ens.trajectories) {
        REQUIRE(traj.reset_times.size() == 4);
        CHECK(traj.position_at(1.0) == 0.0);
        CHECK(traj.position_at(2.0) == 0.0);
    }
}
