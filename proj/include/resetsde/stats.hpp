#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "resetsde/core.hpp"
#include "resetsde/curves.hpp"
#include "resetsde/simulate.hpp"

namespace resetsde::stats {

/// Histogram binning. With neither field set the bin width follows the
/// Freedman-Diaconis rule over the sample range.
struct BinSpec {
    std::optional<std::size_t> bins;
    std::optional<std::pair<double, double>> range;
};

/// Normalized histogram as a DensityCurve through the bin centres, padded
/// with a zero-valued point half a bin outside each end so that the
/// trapezoid integral equals the histogram mass (exactly 1 up to rounding).
/// Requires at least 100 samples.
DensityCurve histogram_density(std::span<const double> samples, const BinSpec& bins = {});

/// Bin edges and empirical CDF at those edges, from the same binning as
/// histogram_density.
struct BinnedCdf {
    std::vector<double> edges;
    std::vector<double> cdf;
};
BinnedCdf binned_cdf(std::span<const double> samples, const BinSpec& bins = {});

struct MsdSeries {
    std::vector<double> ts;
    std::vector<double> msd;
    std::size_t n_samples = 0;
    std::optional<double> fitted_exponent;
    std::pair<double, double> fit_window{0.0, 0.0};
};

/// Pointwise mean squared displacement about the mean: the analytic mean
/// for a homogeneous clock, x_R when x0 == x_R (any clock), the ensemble
/// mean otherwise. Throws ConfigError if a trajectory lacks a grid time.
MsdSeries empirical_msd(const Ensemble& ensemble);

/// Least-squares slope of log(msd) against log(t) over ts within
/// [window.first, window.second]. Needs at least 10 points, all positive.
double fit_power_law_exponent(const MsdSeries& series, std::pair<double, double> window);

/// Last decade of the series: [t_max / 10, t_max].
std::pair<double, double> default_fit_window(const MsdSeries& series);

/// sup_x |F_n(x) - cdf(x)|. Requires at least 10 samples.
double ks_distance(std::span<const double> samples, const std::function<double(double)>& cdf);

/// Two-sample statistic sup_x |F_a(x) - F_b(x)|.
double ks_two_sample(std::span<const double> a, std::span<const double> b);

/// Asymptotic Kolmogorov tail probability for statistic `d` at effective
/// sample size `n_eff` (n for one sample, n_a n_b / (n_a + n_b) for two).
double ks_pvalue(double d, double n_eff);

/// P(X_t <= x) for a homogeneous Poisson spec.
double analytic_cdf(const ProcessSpec& spec, double x, double t);

struct EmpiricalCf {
    std::complex<double> value;
    double se_real = 0.0;
    double se_imag = 0.0;
};

/// (1/n) sum exp(i s x_j) with per-component standard errors.
EmpiricalCf empirical_char_fn(std::span<const double> samples, double s);

struct MeanEstimate {
    double mean = 0.0;
    double std_error = 0.0;
};

MeanEstimate sample_mean(std::span<const double> values);

/// Sample variance with denominator n - 1.
double sample_variance(std::span<const double> values);

}  // namespace resetsde::stats
