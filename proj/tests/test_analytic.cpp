#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/hypergeometric_1F1.hpp>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "resetsde/analytic.hpp"

using namespace resetsde;
namespace an = resetsde::analytic;

namespace {
ProcessSpec poisson(double x0, double xr, double r, double d = 0.5) { return {d, x0, xr, HomogeneousPoisson{r}}; }
ProcessSpec npp(double r, double p) { return {0.5, 0.0, 0.0, NonhomogeneousPoisson{r, p}}; }

// Relative agreement, with an absolute floor for far-tail values where the
// closed form subtracts nearly equal terms.
bool close(double value, double ref, double rel, double abs) { return std::abs(value - ref) <= rel * std::abs(ref) + abs; }
}  // namespace

TEST_CASE("pdf agrees with the last-reset integral") {
    for (const auto& spec : {poisson(0, 3, 1), poisson(0, 5, 1), poisson(1, 0, 1), poisson(-1, 2, 0.3, 2.0)}) {
        for (double t : {0.02, 0.1, 0.7, 3.0}) {
            for (double x : {-4.0, -1.0, 0.0, 0.5, 2.0, 3.0, 6.0}) {
                const double ref = oracle::resetting_pdf(x, t, spec.diffusivity, spec.x0, spec.x_reset,
                                                         homogeneous_rate(spec.clock));
                CHECK(close(an::pdf(spec, x, t), ref, 1e-8, 1e-15));
            }
        }
    }
}

TEST_CASE("normal-Laplace convolution and its CDF") {
    for (double t : {0.01, 0.5, 4.0})
        for (double r : {0.2, 1.0, 30.0})
            for (double x : {-3.0, 0.0, 0.4, 5.0}) {
                CHECK(close(an::normal_laplace_conv(x, t, r, 0.4), oracle::normal_laplace(x, t, r, 0.4), 1e-9, 1e-16));
                boost::math::quadrature::exp_sinh<double> left_tail;
                const double cdf = left_tail.integrate(
                    [&](double u) { return oracle::normal_laplace(x - u, t, r, 0.4); }, 0.0, INFINITY);
                CHECK(close(an::normal_laplace_cdf(x, t, r, 0.4), cdf, 1e-7, 1e-16));
            }
    // Far tails stay finite where the naive product overflows.
    CHECK(std::isfinite(an::normal_laplace_conv(40.0, 0.001, 500.0, 0.0)));
    CHECK(an::normal_laplace_cdf(1e3, 1.0, 1.0, 0.0) == doctest::Approx(1.0));
    CHECK(an::normal_laplace_cdf(-1e3, 1.0, 1.0, 0.0) == doctest::Approx(0.0));
}

TEST_CASE("cdf is the integral of the pdf") {
    const ProcessSpec spec = poisson(0, 3, 1);
    for (double t : {0.1, 1.0})
        for (double x : {-1.0, 1.0, 3.0, 4.5}) {
            const double ref = oracle::simpson_pieces([&](double y) { return an::pdf(spec, y, t); },
                                                      {-30.0, std::min(x, 0.0), std::min(x, 3.0), x}, 1e-12);
            CHECK(an::cdf(spec, x, t) == doctest::Approx(ref).epsilon(1e-8));
        }
}

TEST_CASE("mgf and characteristic function") {
    for (const auto& spec : {poisson(0, 5, 1), poisson(1, -1, 2, 1.5)}) {
        const double r = homogeneous_rate(spec.clock);
        const double edge = std::sqrt(2 * r) / std::sqrt(2 * spec.diffusivity);
        for (double t : {0.1, 0.5, 1.5})
            for (double frac : {-0.9, -0.3, 0.0, 0.5, 0.95}) {
                const double s = frac * edge;
                CHECK(an::mgf(spec, s, t) ==
                      doctest::Approx(oracle::resetting_mgf(s, t, spec.diffusivity, spec.x0, spec.x_reset, r))
                          .epsilon(1e-9));
            }
        CHECK_THROWS_AS(an::mgf(spec, edge, 1.0), DomainError);
        CHECK_THROWS_AS(an::mgf(spec, -edge * 1.01, 1.0), DomainError);
    }
    // Characteristic function against direct quadrature of e^{isx} p.
    const ProcessSpec spec = poisson(0, 5, 1);
    for (double s : {0.3, 1.7}) {
        const double t = 0.5;
        const auto cosine = [&](double x) { return std::cos(s * x) * an::pdf(spec, x, t); };
        const auto sine = [&](double x) { return std::sin(s * x) * an::pdf(spec, x, t); };
        const std::vector<double> pts{-25.0, 0.0, 5.0, 30.0};
        const auto phi = an::char_fn(spec, s, t);
        CHECK(phi.real() == doctest::Approx(oracle::simpson_pieces(cosine, pts, 1e-12)).epsilon(1e-8));
        CHECK(phi.imag() == doctest::Approx(oracle::simpson_pieces(sine, pts, 1e-12)).epsilon(1e-8));
    }
    // No resetting: Brownian mgf for every s.
    CHECK(an::mgf(poisson(0.5, 0, 0), 10.0, 1.0) == doctest::Approx(std::exp(5.0 + 50.0)));
}

TEST_CASE("mean relaxes to the reset point") {
    const ProcessSpec spec = poisson(0, 5, 1);
    for (double t : {0.0, 0.1, 0.5, 1.5})
        CHECK(an::mean(spec, t) == doctest::Approx(5.0 - 5.0 * std::exp(-t)));
}

TEST_CASE("Kummer function against Boost") {
    for (double a : {-3.0, -2.5, -0.5, 0.0, 0.5, 1.0})
        for (double b : {0.5, 1.5})
            for (double c : {-8.0, -0.5, 0.0, 0.7, 3.0})
                CHECK(an::kummer_phi(a, b, c) ==
                      doctest::Approx(boost::math::hypergeometric_1F1(a, b, c)).epsilon(1e-10).scale(1e-14));
    CHECK_THROWS_AS(an::kummer_phi(1.0, -1.0, 1.0), DomainError);
}

TEST_CASE("moments") {
    for (int n = 0; n <= 6; ++n) {
        CHECK(an::gaussian_moment(n, 0.7, 0.4) ==
              doctest::Approx(oracle::simpson([&](double x) { return std::pow(x, n) * oracle::gauss(x, 0.7, 0.4); },
                                              -12.0, 12.0, 1e-13))
                  .epsilon(1e-9)
                  .scale(1e-12));
        const double r = 1.7;
        const double lambda = std::sqrt(2 * r);
        const double laplace = n % 2 ? 0.0 : std::tgamma(n + 1.0) / std::pow(lambda, n);
        CHECK(an::laplace_moment(n, r) == doctest::Approx(laplace));
    }
    const ProcessSpec spec = poisson(1, 0, 1);
    for (int n = 1; n <= 6; ++n) {
        const double ref = oracle::resetting_moment(n, 0.7, 0.5, 1.0, 0.0, 1.0, -40.0, 40.0);
        CHECK(an::nth_moment(spec, n, 0.7) == doctest::Approx(ref).epsilon(1e-7));
    }
    CHECK(an::nth_moment(spec, 3, 0.0) == 1.0);
    CHECK(an::nth_moment(poisson(0, 0, 1, 2.0), 2, 1.0) == doctest::Approx(4.0 * (1 - std::exp(-1.0))));
    CHECK_THROWS_AS(an::nth_moment(poisson(0, 1, 1), 2, 1.0), UnsupportedCase);
    CHECK_THROWS_AS(an::nth_moment(spec, -1, 1.0), ConfigError);
    const auto table = an::moment_table(spec, 4, 0.7);
    REQUIRE(table.values.size() == 5);
    CHECK(table.values[0] == doctest::Approx(1.0));
}

TEST_CASE("stationary density is Laplace") {
    const ProcessSpec spec = poisson(0, 1.0, 2.0, 0.5);
    CHECK(an::stationary_pdf(spec, 1.0) == doctest::Approx(1.0));  // lambda / 2 with lambda = 2
    CHECK(an::stationary_pdf(spec, 2.0) == doctest::Approx(std::exp(-2.0)));
    CHECK(an::pdf(spec, 1.7, 40.0) == doctest::Approx(an::stationary_pdf(spec, 1.7)).epsilon(1e-12));
    CHECK_THROWS_AS(an::stationary_pdf(poisson(0, 0, 0), 0.0), DomainError);
}

TEST_CASE("nonhomogeneous closed forms reduce to the homogeneous ones") {
    for (double r : {0.5, 2.0})
        for (double t : {0.3, 2.0})
            for (double x : {0.0, 0.4, -1.3}) CHECK(an::npp_pdf(npp(r, 0.0), x, t) == doctest::Approx(an::pdf(poisson(0, 0, r), x, t)).epsilon(1e-9));
    for (double t : {0.5, 5.0}) {
        CHECK(an::npp_msd(npp(1.0, 0.0), t) == doctest::Approx(1.0 - std::exp(-t)).epsilon(1e-9));
        const auto exact = an::npp_msd(npp(0.7, -1.0), t);
        const double rt = 0.7 * std::log1p(t);
        const auto quad = oracle::simpson(
            [&](double w) { return std::exp(0.7 * std::log1p(w) - rt); }, 0.0, t, 1e-13);
        CHECK(exact == doctest::Approx(quad).epsilon(1e-9));
    }
    CHECK_THROWS_AS(an::npp_pdf(ProcessSpec{0.5, 1.0, 0.0, NonhomogeneousPoisson{}}, 0.0, 1.0), UnsupportedCase);
}

TEST_CASE("nonhomogeneous density integrates to one and matches its msd") {
    for (double p : {-1.5, -0.5, 0.5}) {
        const ProcessSpec spec = npp(1.0, p);
        const double t = 5.0;
        const auto f = [&](double x) { return an::npp_pdf(spec, x, t); };
        const std::vector<double> pts{-25.0, -2.0, 0.0, 2.0, 25.0};
        CHECK(oracle::simpson_pieces(f, pts, 1e-9) == doctest::Approx(1.0).epsilon(1e-6));
        const auto g = [&](double x) { return x * x * an::npp_pdf(spec, x, t); };
        CHECK(oracle::simpson_pieces(g, pts, 1e-9) == doctest::Approx(an::npp_msd(spec, t)).epsilon(1e-6));
        const auto phi = an::npp_char_fn(spec, 0.8, t);
        const auto c = [&](double x) { return std::cos(0.8 * x) * an::npp_pdf(spec, x, t); };
        CHECK(phi.real() == doctest::Approx(oracle::simpson_pieces(c, pts, 1e-9)).epsilon(1e-6));
    }
}

TEST_CASE("regime classification") {
    const auto check = [](double p, double exponent, an::LimitLaw law) {
        const auto regime = an::classify_regime(p);
        CHECK(regime.exponent == doctest::Approx(exponent));
        CHECK(regime.law == law);
    };
    check(0.5, -0.5, an::LimitLaw::degenerate);
    check(0.0, 0.0, an::LimitLaw::laplace_stationary);
    check(-0.5, 0.5, an::LimitLaw::laplace_nonstationary);
    check(-1.0, 1.0, an::LimitLaw::laplace_nonstationary);
    check(-1.5, 1.0, an::LimitLaw::gaussian_laplace);
    CHECK(an::classify_regime(0.5).msd_vanishes);
    CHECK(an::to_string(an::LimitLaw::laplace_nonstationary) == "laplace-nonstationary");
}

TEST_CASE("rescaling to other diffusivities") {
    const ProcessSpec spec = poisson(0.5, -1.0, 1.3, 3.0);
    const double scale = std::sqrt(6.0);
    const ProcessSpec unit = poisson(0.5 / scale, -1.0 / scale, 1.3);
    CHECK(an::pdf(spec, 0.2, 0.8) == doctest::Approx(an::pdf(unit, 0.2 / scale, 0.8) / scale));
    CHECK(an::mgf(spec, 0.1, 0.8) == doctest::Approx(an::mgf(unit, 0.1 * scale, 0.8)));
}
