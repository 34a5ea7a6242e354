#include <doctest.h>

#include <cmath>

#include "resetsde/analytic.hpp"
#include "resetsde/simulate.hpp"
#include "resetsde/stats.hpp"

using namespace resetsde;

TEST_CASE("histogram integrates to one") {
    RngStream rng(1, 0);
    std::vector<double> xs(5000);
    for (double& x : xs) x = rng.normal();
    const auto curve = stats::histogram_density(xs);
    CHECK(curve.integral() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(curve.provenance == Provenance::histogram);
    CHECK(curve.values.front() == 0.0);
    const auto fixed = stats::histogram_density(xs, {50, std::pair{-5.0, 5.0}});
    CHECK(fixed.xs.size() == 52);
    const std::vector<double> same(200, 2.0);
    CHECK(stats::histogram_density(same).integral() == doctest::Approx(1.0));
    CHECK_THROWS_AS(stats::histogram_density(std::vector<double>(50, 1.0)), ConfigError);
    const auto cdf = stats::binned_cdf(xs, {10, {}});
    CHECK(cdf.cdf.back() == doctest::Approx(1.0));
}

TEST_CASE("KS statistics") {
    RngStream rng(2, 0);
    std::vector<double> u(20000), v(20000);
    for (double& x : u) x = rng.uniform();
    for (double& x : v) x = rng.uniform();
    const double d = stats::ks_distance(u, [](double x) { return std::clamp(x, 0.0, 1.0); });
    CHECK(d < 1.63 / std::sqrt(20000.0));
    CHECK(stats::ks_distance(u, [](double x) { return std::clamp(x * x, 0.0, 1.0); }) > 0.2);
    CHECK(stats::ks_two_sample(u, v) < 1.63 * std::sqrt(2.0 / 20000));
    CHECK(stats::ks_two_sample(std::vector<double>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10},
                               std::vector<double>{11, 12, 13, 14, 15, 16, 17, 18, 19, 20}) == 1.0);
    CHECK_THROWS_AS(stats::ks_distance(std::vector<double>{1, 2}, [](double) { return 0.5; }), ConfigError);
}

TEST_CASE("Kolmogorov tail probabilities") {
    // Classical critical values of the limiting distribution.
    CHECK(stats::ks_pvalue(1.358 / std::sqrt(1e8), 1e8) == doctest::Approx(0.05).epsilon(0.01));
    CHECK(stats::ks_pvalue(1.628 / std::sqrt(1e8), 1e8) == doctest::Approx(0.01).epsilon(0.02));
    CHECK(stats::ks_pvalue(0.0, 100) == 1.0);
    CHECK(stats::ks_pvalue(1.0, 100) < 1e-10);
}

TEST_CASE("power-law fit recovers exponents") {
    stats::MsdSeries s;
    for (int k = 0; k <= 100; ++k) {
        const double t = std::pow(10.0, 3.0 * k / 100.0 - 1.0);
        s.ts.push_back(t);
        s.msd.push_back(3.0 * std::pow(t, 0.7));
    }
    CHECK(stats::fit_power_law_exponent(s, {1.0, 100.0}) == doctest::Approx(0.7));
    CHECK(stats::default_fit_window(s).first == doctest::Approx(10.0));
    CHECK_THROWS_AS(stats::fit_power_law_exponent(s, {50.0, 60.0}), ConfigError);
    CHECK_THROWS_AS(stats::fit_power_law_exponent(s, {0.0, 60.0}), ConfigError);
}

TEST_CASE("empirical msd of a resetting ensemble") {
    const ProcessSpec spec{0.5, 0.0, 0.0, HomogeneousPoisson{1.0}};
    std::vector<double> grid;
    for (int k = 0; k <= 40; ++k) grid.push_back(0.1 * k);
    const auto ens = run_ensemble(spec, SchemeConfig{ExactScheme{}, 4.0, grid}, 20000, 3);
    const auto series = stats::empirical_msd(ens);
    CHECK(series.msd.front() == 0.0);
    CHECK(series.n_samples == 20000);
    for (std::size_t k = 1; k < grid.size(); k += 13) {
        const double expected = 1.0 - std::exp(-grid[k]);
        CHECK(std::abs(series.msd[k] - expected) < 5.0 * expected * std::sqrt(5.0 / 20000) + 1e-3);
    }
    REQUIRE(series.fitted_exponent);
    stats::MsdSeries exact = series;
    for (std::size_t k = 0; k < grid.size(); ++k) exact.msd[k] = 1.0 - std::exp(-grid[k]);
    CHECK(*series.fitted_exponent ==
          doctest::Approx(stats::fit_power_law_exponent(exact, series.fit_window)).epsilon(0.05));
}

TEST_CASE("empirical characteristic function and means") {
    const ProcessSpec spec{0.5, 0.0, 2.0, HomogeneousPoisson{1.0}};
    const auto xs = marginal_samples(spec, 0.5, 50000, 4);
    for (double s : {0.5, 2.0}) {
        const auto cf = stats::empirical_char_fn(xs, s);
        const auto exact = analytic::char_fn(spec, s, 0.5);
        CHECK(std::abs(cf.value.real() - exact.real()) < 4.0 * cf.se_real);
        CHECK(std::abs(cf.value.imag() - exact.imag()) < 4.0 * cf.se_imag);
    }
    const auto m = stats::sample_mean(std::vector<double>{1, 2, 3, 4});
    CHECK(m.mean == 2.5);
    CHECK(m.std_error == doctest::Approx(std::sqrt(5.0 / 3.0 / 4.0)));
    CHECK(stats::sample_variance(std::vector<double>{1, 2, 3, 4}) == doctest::Approx(5.0 / 3.0));
    CHECK(stats::analytic_cdf(spec, 2.0, 0.5) == doctest::Approx(analytic::cdf(spec, 2.0, 0.5)));
}
