#include "resetsde/stats.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "resetsde/analytic.hpp"

namespace resetsde::stats {
namespace {

constexpr std::size_t kMaxBins = 100000;

struct Binning {
    double lo = 0.0;
    double width = 1.0;
    std::size_t bins = 1;
};

double quantile_sorted(const std::vector<double>& sorted, double q) {
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto i = static_cast<std::size_t>(std::floor(pos));
    const double frac = pos - static_cast<double>(i);
    if (i + 1 >= sorted.size()) return sorted.back();
    return sorted[i] + frac * (sorted[i + 1] - sorted[i]);
}

Binning choose_binning(std::span<const double> samples, const BinSpec& spec) {
    if (samples.size() < 100) throw ConfigError("histogram needs at least 100 samples");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    double lo = sorted.front();
    double hi = sorted.back();
    if (spec.range) {
        lo = spec.range->first;
        hi = spec.range->second;
        if (!(hi > lo)) throw ConfigError("histogram range must satisfy lo < hi");
    }
    Binning b;
    if (hi == lo) {
        // Degenerate sample: one unit-width bin centred on the value.
        b.lo = lo - 0.5;
        b.width = 1.0;
        b.bins = 1;
        return b;
    }
    std::size_t bins = 0;
    if (spec.bins) {
        bins = *spec.bins;
    } else {
        const double iqr = quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25);
        const double n = static_cast<double>(sorted.size());
        if (iqr > 0.0) {
            const double width = 2.0 * iqr / std::cbrt(n);
            bins = static_cast<std::size_t>(std::ceil((hi - lo) / width));
        } else {
            bins = static_cast<std::size_t>(std::ceil(std::log2(n))) + 1;  // Sturges
        }
    }
    b.bins = std::clamp<std::size_t>(bins, 1, kMaxBins);
    b.lo = lo;
    b.width = (hi - lo) / static_cast<double>(b.bins);
    return b;
}

std::vector<double> bin_counts(std::span<const double> samples, const Binning& b,
                               double& in_range) {
    std::vector<double> counts(b.bins, 0.0);
    in_range = 0.0;
    const double hi = b.lo + b.width * static_cast<double>(b.bins);
    for (double x : samples) {
        if (x < b.lo || x > hi) continue;
        auto k = static_cast<std::size_t>((x - b.lo) / b.width);
        if (k >= b.bins) k = b.bins - 1;
        counts[k] += 1.0;
        in_range += 1.0;
    }
    if (in_range == 0.0) throw ConfigError("no samples inside the histogram range");
    return counts;
}

void require_min_samples(std::span<const double> samples, std::size_t n, const char* what) {
    if (samples.size() < n) {
        std::ostringstream msg;
        msg << what << " needs at least " << n << " samples, got " << samples.size();
        throw ConfigError(msg.str());
    }
}

}  // namespace

DensityCurve histogram_density(std::span<const double> samples, const BinSpec& bins) {
    const Binning b = choose_binning(samples, bins);
    double in_range = 0.0;
    const std::vector<double> counts = bin_counts(samples, b, in_range);
    DensityCurve curve;
    curve.provenance = Provenance::histogram;
    curve.xs.reserve(b.bins + 2);
    curve.values.reserve(b.bins + 2);
    curve.xs.push_back(b.lo - 0.5 * b.width);
    curve.values.push_back(0.0);
    for (std::size_t k = 0; k < b.bins; ++k) {
        curve.xs.push_back(b.lo + (static_cast<double>(k) + 0.5) * b.width);
        curve.values.push_back(counts[k] / (in_range * b.width));
    }
    curve.xs.push_back(b.lo + (static_cast<double>(b.bins) + 0.5) * b.width);
    curve.values.push_back(0.0);
    return curve;
}

BinnedCdf binned_cdf(std::span<const double> samples, const BinSpec& bins) {
    const Binning b = choose_binning(samples, bins);
    double in_range = 0.0;
    const std::vector<double> counts = bin_counts(samples, b, in_range);
    BinnedCdf out;
    out.edges.reserve(b.bins + 1);
    out.cdf.reserve(b.bins + 1);
    double cumulative = 0.0;
    out.edges.push_back(b.lo);
    out.cdf.push_back(0.0);
    for (std::size_t k = 0; k < b.bins; ++k) {
        cumulative += counts[k];
        out.edges.push_back(b.lo + static_cast<double>(k + 1) * b.width);
        out.cdf.push_back(cumulative / in_range);
    }
    return out;
}

MsdSeries empirical_msd(const Ensemble& ensemble) {
    if (ensemble.trajectories.empty()) throw ConfigError("empty ensemble");
    const auto& grid = ensemble.grid;
    const std::size_t m = grid.size();
    const std::size_t n = ensemble.trajectories.size();

    // Positions at the shared grid, row-major per trajectory.
    std::vector<double> on_grid(n * m);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& traj = ensemble.trajectories[i];
        std::size_t j = 0;
        for (std::size_t k = 0; k < m; ++k) {
            while (j < traj.times.size() && traj.times[j] < grid[k]) ++j;
            if (j == traj.times.size() || traj.times[j] != grid[k])
                throw ConfigError("trajectory " + std::to_string(i) +
                                  " does not share the ensemble time grid");
            on_grid[i * m + k] = traj.positions[j];
        }
    }

    const ProcessSpec& spec = ensemble.spec;
    const bool homogeneous = [&] {
        try {
            homogeneous_rate(spec.clock);
            return true;
        } catch (const UnsupportedCase&) {
            return false;
        }
    }();

    MsdSeries series;
    series.ts = grid;
    series.msd.assign(m, 0.0);
    series.n_samples = n;
    for (std::size_t k = 0; k < m; ++k) {
        double centre = spec.x_reset;
        if (spec.x0 != spec.x_reset) {
            if (homogeneous) {
                centre = analytic::mean(spec, grid[k]);
            } else {
                double sum = 0.0;
                for (std::size_t i = 0; i < n; ++i) sum += on_grid[i * m + k];
                centre = sum / static_cast<double>(n);
            }
        }
        double sum_sq = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = on_grid[i * m + k] - centre;
            sum_sq += d * d;
        }
        series.msd[k] = sum_sq / static_cast<double>(n);
    }
    if (grid.back() > 0.0) {
        series.fit_window = default_fit_window(series);
        try {
            series.fitted_exponent = fit_power_law_exponent(series, series.fit_window);
        } catch (const ConfigError&) {
            series.fitted_exponent.reset();
        }
    }
    return series;
}

std::pair<double, double> default_fit_window(const MsdSeries& series) {
    if (series.ts.empty()) throw ConfigError("empty MSD series");
    const double t_max = series.ts.back();
    return {t_max / 10.0, t_max};
}

double fit_power_law_exponent(const MsdSeries& series, std::pair<double, double> window) {
    const auto [lo, hi] = window;
    if (!(lo > 0.0) || !(hi > lo)) throw ConfigError("fit window must satisfy 0 < lo < hi");
    std::vector<double> lx, ly;
    const double slack = 1e-12 * hi;
    for (std::size_t k = 0; k < series.ts.size(); ++k) {
        const double t = series.ts[k];
        if (t < lo - slack || t > hi + slack) continue;
        if (!(series.msd[k] > 0.0))
            throw ConfigError("non-positive MSD value at t = " + std::to_string(t));
        lx.push_back(std::log(t));
        ly.push_back(std::log(series.msd[k]));
    }
    if (lx.size() < 10)
        throw ConfigError("fit window holds " + std::to_string(lx.size()) +
                          " points; at least 10 are required");
    const double n = static_cast<double>(lx.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    return sxy / sxx;
}

double ks_distance(std::span<const double> samples, const std::function<double(double)>& cdf) {
    require_min_samples(samples, 10, "KS distance");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = cdf(sorted[i]);
        const double below = static_cast<double>(i) / n;
        const double above = static_cast<double>(i + 1) / n;
        worst = std::max({worst, f - below, above - f});
    }
    return std::clamp(worst, 0.0, 1.0);
}

double ks_two_sample(std::span<const double> a, std::span<const double> b) {
    require_min_samples(a, 10, "KS distance");
    require_min_samples(b, 10, "KS distance");
    std::vector<double> sa(a.begin(), a.end());
    std::vector<double> sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    const double na = static_cast<double>(sa.size());
    const double nb = static_cast<double>(sb.size());
    std::size_t i = 0, j = 0;
    double worst = 0.0;
    while (i < sa.size() && j < sb.size()) {
        const double x = std::min(sa[i], sb[j]);
        while (i < sa.size() && sa[i] == x) ++i;
        while (j < sb.size() && sb[j] == x) ++j;
        worst = std::max(worst, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return worst;
}

double ks_pvalue(double d, double n_eff) {
    if (!(n_eff > 0.0)) throw ConfigError("effective sample size must be positive");
    const double root = std::sqrt(n_eff);
    const double lambda = (root + 0.12 + 0.11 / root) * d;
    if (lambda < 0.2) return 1.0;
    double sum = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += (k % 2 == 1 ? term : -term);
        if (term < 1e-16) break;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

double analytic_cdf(const ProcessSpec& spec, double x, double t) { return analytic::cdf(spec, x, t); }

EmpiricalCf empirical_char_fn(std::span<const double> samples, double s) {
    require_min_samples(samples, 100, "empirical characteristic function");
    const double n = static_cast<double>(samples.size());
    double sc = 0.0, ss = 0.0, sc2 = 0.0, ss2 = 0.0;
    for (double x : samples) {
        const double c = std::cos(s * x);
        const double si = std::sin(s * x);
        sc += c;
        ss += si;
        sc2 += c * c;
        ss2 += si * si;
    }
    EmpiricalCf out;
    out.value = {sc / n, ss / n};
    const double var_c = std::max(0.0, (sc2 - sc * sc / n) / (n - 1.0));
    const double var_s = std::max(0.0, (ss2 - ss * ss / n) / (n - 1.0));
    out.se_real = std::sqrt(var_c / n);
    out.se_imag = std::sqrt(var_s / n);
    return out;
}

MeanEstimate sample_mean(std::span<const double> values) {
    if (values.size() < 2) throw ConfigError("sample mean needs at least 2 values");
    const double n = static_cast<double>(values.size());
    double sum = 0.0;
    for (double v : values) sum += v;
    const double m = sum / n;
    double ss = 0.0;
    for (double v : values) ss += (v - m) * (v - m);
    return {m, std::sqrt(ss / (n - 1.0) / n)};
}

double sample_variance(std::span<const double> values) {
    if (values.size() < 2) throw ConfigError("sample variance needs at least 2 values");
    const double n = static_cast<double>(values.size());
    double sum = 0.0;
    for (double v : values) sum += v;
    const double m = sum / n;
    double ss = 0.0;
    for (double v : values) ss += (v - m) * (v - m);
    return ss / (n - 1.0);
}

}  // namespace resetsde::stats
