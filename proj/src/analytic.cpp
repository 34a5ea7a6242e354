#include "resetsde/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "resetsde/clocks.hpp"
#include "resetsde/quadrature.hpp"

namespace resetsde::analytic {
namespace {

constexpr double kInvSqrtPi = std::numbers::inv_sqrtpi;
constexpr double kInvSqrt2Pi = std::numbers::inv_sqrtpi / std::numbers::sqrt2;

// exp(a^2) erfc(a) for a >= 0.
double erfcx(double a) {
    if (a < 25.0) return std::exp(a * a) * std::erfc(a);
    // Asymptotic series; the first omitted term is below 1e-12 relative here.
    const double inv2a2 = 1.0 / (2.0 * a * a);
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= 5; ++k) {
        term *= -(2.0 * k - 1.0) * inv2a2;
        sum += term;
    }
    return sum * kInvSqrtPi / a;
}

// exp(exponent) * erfc(arg), where exponent - arg^2 = -y^2 / (2t) is known
// in closed form for the normal-Laplace terms.
double scaled_erfc_term(double exponent, double arg, double gauss_exponent) {
    if (arg > 0.0) return erfcx(arg) * std::exp(gauss_exponent);
    return std::exp(exponent) * std::erfc(arg);
}

struct NormalLaplaceTerms {
    double lower;  // e^{lambda^2 t/2 - lambda y} erfc((lambda t - y)/sqrt(2t))
    double upper;  // e^{lambda^2 t/2 + lambda y} erfc((lambda t + y)/sqrt(2t))
    double lambda;
};

NormalLaplaceTerms normal_laplace_terms(double x, double t, double r, double x_reset) {
    const double lambda = std::sqrt(2.0 * r);
    const double y = x - x_reset;
    const double root = std::sqrt(2.0 * t);
    const double half = 0.5 * lambda * lambda * t;
    const double gauss = -y * y / (2.0 * t);
    return {scaled_erfc_term(half - lambda * y, (lambda * t - y) / root, gauss),
            scaled_erfc_term(half + lambda * y, (lambda * t + y) / root, gauss), lambda};
}

struct UnitPoisson {
    UnitScaling map;
    double rate;
};

UnitPoisson unit_poisson(const ProcessSpec& spec) {
    UnitPoisson out{rescale_to_unit(spec), 0.0};
    out.rate = homogeneous_rate(spec.clock);
    return out;
}

void require_nonnegative_time(double t) {
    if (!(t >= 0.0)) throw ConfigError("time must be non-negative");
}

void require_positive_time(double t) {
    if (!(t > 0.0)) throw ConfigError("time must be positive");
}

void require_npp_origin(const ProcessSpec& spec) {
    if (spec.x0 != 0.0 || spec.x_reset != 0.0)
        throw UnsupportedCase("nonhomogeneous closed forms require x0 = xR = 0");
    if (std::holds_alternative<Renewal>(spec.clock))
        throw UnsupportedCase("nonhomogeneous closed forms require a Poisson clock");
}

// Break points for integrands concentrated within `width` of the right end
// of [0, length], in the reflected variable v = length - w.
std::vector<double> tail_breaks(double length, double width) {
    std::vector<double> points{0.0};
    for (double v = width; v < length; v *= 8.0) points.push_back(v);
    points.push_back(length);
    return points;
}

double gaussian_double_factorial_moment(int n, double t) {
    double value = 1.0;
    for (int k = n - 1; k > 1; k -= 2) value *= k;
    return value * std::pow(t, 0.5 * n);
}

}  // namespace

double gaussian_pdf(double x, double mean, double variance) {
    const double z = x - mean;
    return kInvSqrt2Pi / std::sqrt(variance) * std::exp(-z * z / (2.0 * variance));
}

double gaussian_cdf(double x, double mean, double variance) {
    return 0.5 * std::erfc(-(x - mean) / std::sqrt(2.0 * variance));
}

double mgf(const ProcessSpec& spec, double s, double t) {
    require_nonnegative_time(t);
    const auto [map, r] = unit_poisson(spec);
    const double su = s * map.scale;
    const double x0 = map.unit.x0;
    const double xr = map.unit.x_reset;
    if (r == 0.0) return std::exp(su * x0 + 0.5 * t * su * su);
    if (std::abs(su) >= std::sqrt(2.0 * r)) {
        std::ostringstream msg;
        msg << "MGF is defined only for |s| < sqrt(2r)/sqrt(2D) = "
            << std::sqrt(2.0 * r) / map.scale << ", got s = " << s;
        throw DomainError(msg.str());
    }
    const double decay = r - 0.5 * su * su;
    const double stationary = r * std::exp(su * xr) / decay;
    return stationary + (std::exp(su * x0) - stationary) * std::exp(-decay * t);
}

std::complex<double> char_fn(const ProcessSpec& spec, double s, double t) {
    require_nonnegative_time(t);
    const auto [map, r] = unit_poisson(spec);
    const double su = s * map.scale;
    const double decay = r + 0.5 * su * su;
    const std::complex<double> start = std::polar(1.0, su * map.unit.x0);
    if (r == 0.0) return start * std::exp(-decay * t);
    const std::complex<double> stationary = std::polar(r / decay, su * map.unit.x_reset);
    return stationary + (start - stationary) * std::exp(-decay * t);
}

double laplace_pdf(double x, double r, double x_reset) {
    return std::sqrt(0.5 * r) * std::exp(-std::sqrt(2.0 * r) * std::abs(x - x_reset));
}

double laplace_cdf(double x, double r, double x_reset) {
    const double z = std::sqrt(2.0 * r) * (x - x_reset);
    return z < 0.0 ? 0.5 * std::exp(z) : 1.0 - 0.5 * std::exp(-z);
}

double normal_laplace_conv(double x, double t, double r, double x_reset) {
    require_positive_time(t);
    const auto terms = normal_laplace_terms(x, t, r, x_reset);
    return 0.25 * terms.lambda * (terms.lower + terms.upper);
}

double normal_laplace_cdf(double x, double t, double r, double x_reset) {
    require_positive_time(t);
    const auto terms = normal_laplace_terms(x, t, r, x_reset);
    const double value = gaussian_cdf(x - x_reset, 0.0, t) - 0.25 * terms.lower + 0.25 * terms.upper;
    return std::clamp(value, 0.0, 1.0);
}

double pdf(const ProcessSpec& spec, double x, double t) {
    require_positive_time(t);
    const auto [map, r] = unit_poisson(spec);
    const double u = map.to_unit(x);
    const double x0 = map.unit.x0;
    const double xr = map.unit.x_reset;
    double value = 0.0;
    if (r == 0.0) {
        value = gaussian_pdf(u, x0, t);
    } else {
        value = laplace_pdf(u, r, xr) +
                std::exp(-r * t) * (gaussian_pdf(u, x0, t) - normal_laplace_conv(u, t, r, xr));
    }
    if (value < 0.0) {
        if (value < -1e-12) {
            std::ostringstream msg;
            msg << "pdf evaluated to " << value << " at x = " << x << ", t = " << t;
            throw NumericalError(msg.str());
        }
        value = 0.0;
    }
    return value / map.scale;
}

double cdf(const ProcessSpec& spec, double x, double t) {
    require_positive_time(t);
    const auto [map, r] = unit_poisson(spec);
    const double u = map.to_unit(x);
    const double x0 = map.unit.x0;
    const double xr = map.unit.x_reset;
    if (r == 0.0) return gaussian_cdf(u, x0, t);
    const double value =
        laplace_cdf(u, r, xr) +
        std::exp(-r * t) * (gaussian_cdf(u, x0, t) - normal_laplace_cdf(u, t, r, xr));
    return std::clamp(value, 0.0, 1.0);
}

double mean(const ProcessSpec& spec, double t) {
    require_nonnegative_time(t);
    const double r = homogeneous_rate(validate_spec(spec).spec().clock);
    return spec.x_reset + std::exp(-r * t) * (spec.x0 - spec.x_reset);
}

double laplace_moment(int n, double r) {
    if (n < 0) throw ConfigError("moment order must be non-negative");
    if (n % 2 == 1) return 0.0;
    if (!(r > 0.0)) throw ConfigError("Laplace moments need r > 0");
    return std::pow(2.0 * r, -0.5 * n) * std::tgamma(n + 1.0);
}

double kummer_phi(double a, double b, double c) {
    if (b <= 0.0 && b == std::floor(b))
        throw DomainError("Kummer function undefined for non-positive integer b");
    if (c == 0.0) return 1.0;
    const bool terminating = a <= 0.0 && a == std::floor(a);
    if (!terminating && c < 0.0) return std::exp(c) * kummer_phi(b - a, b, -c);

    constexpr int kMaxTerms = 500;
    constexpr double kRelTol = 1e-12;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 0; k < kMaxTerms; ++k) {
        term *= (a + k) / (b + k) * c / (k + 1.0);
        sum += term;
        if (term == 0.0 || std::abs(term) <= kRelTol * std::abs(sum)) return sum;
    }
    std::ostringstream msg;
    msg << "Kummer series 1F1(" << a << "; " << b << "; " << c << ") did not converge in "
        << kMaxTerms << " terms (last term " << term << ", partial sum " << sum << ")";
    throw NumericalError(msg.str());
}

double gaussian_moment(int n, double x0, double t) {
    if (n < 0) throw ConfigError("moment order must be non-negative");
    require_positive_time(t);
    if (x0 == 0.0) return n % 2 == 1 ? 0.0 : gaussian_double_factorial_moment(n, t);
    const double c = -x0 * x0 / (2.0 * t);
    if (n % 2 == 0)
        return std::pow(2.0 * t, 0.5 * n) * std::tgamma(0.5 * (n + 1)) * kInvSqrtPi *
               kummer_phi(-0.5 * n, 0.5, c);
    return x0 * std::pow(t, 0.5 * (n - 1)) * std::pow(2.0, 0.5 * (n + 1)) *
           std::tgamma(0.5 * n + 1.0) * kInvSqrtPi * kummer_phi(0.5 * (1 - n), 1.5, c);
}

double sum_moment(int n, double t, double r) {
    if (n < 0) throw ConfigError("moment order must be non-negative");
    if (n % 2 == 1) return 0.0;
    double total = 0.0;
    double binomial = 1.0;  // C(n, k)
    for (int k = 0; k <= n; ++k) {
        if (k % 2 == 0) total += binomial * gaussian_moment(k, 0.0, t) * laplace_moment(n - k, r);
        binomial *= static_cast<double>(n - k) / (k + 1);
    }
    return total;
}

double nth_moment(const ProcessSpec& spec, int n, double t) {
    if (n < 0) throw ConfigError("moment order must be non-negative");
    require_nonnegative_time(t);
    if (spec.x_reset != 0.0)
        throw UnsupportedCase("closed-form moments need xR = 0; integrate x^n * pdf for other xR");
    const auto [map, r] = unit_poisson(spec);
    const double x0 = map.unit.x0;
    if (t == 0.0) return std::pow(spec.x0, n);
    double value = 0.0;
    if (r == 0.0) {
        value = gaussian_moment(n, x0, t);
    } else {
        const double decay = std::exp(-r * t);
        value = laplace_moment(n, r) +
                decay * (gaussian_moment(n, x0, t) - sum_moment(n, t, r));
    }
    return std::pow(map.scale, n) * value;
}

double stationary_pdf(const ProcessSpec& spec, double x) {
    const auto [map, r] = unit_poisson(spec);
    if (!(r > 0.0)) throw DomainError("no stationary law without resetting (r = 0)");
    return laplace_pdf(map.to_unit(x), r, map.unit.x_reset) / map.scale;
}

std::complex<double> npp_char_fn(const ProcessSpec& spec, double s, double t) {
    require_npp_origin(spec);
    require_nonnegative_time(t);
    const auto map = rescale_to_unit(spec);
    const IntensityFunction f = intensity_of(spec.clock);
    const double su = s * map.scale;
    const double half_s2 = 0.5 * su * su;
    const double rt = cumulative_intensity(f, t);
    // Integrate in v = t - w; every exponent below is <= 0.
    const auto integrand = [&](double v) {
        const double w = t - v;
        return f(w) * std::exp(cumulative_intensity(f, w) - rt - v * half_s2);
    };
    const double width = 1.0 / std::max(f(t) + half_s2, 1.0 / std::max(t, 1e-300));
    const double value = std::exp(-rt - t * half_s2) + integrate_pieces(integrand, tail_breaks(t, width));
    return {value, 0.0};
}

double npp_pdf(const ProcessSpec& spec, double x, double t) {
    require_npp_origin(spec);
    require_positive_time(t);
    const auto map = rescale_to_unit(spec);
    const IntensityFunction f = intensity_of(spec.clock);
    const double u = map.to_unit(x);
    const double rt = cumulative_intensity(f, t);
    // omega = t - v^2 removes the (t - omega)^(-1/2) endpoint singularity.
    const auto integrand = [&](double v) {
        if (v == 0.0) return u == 0.0 ? 2.0 * kInvSqrt2Pi * f(t) : 0.0;
        const double v2 = v * v;
        const double omega = t - v2;
        return 2.0 * kInvSqrt2Pi * f(omega) *
               std::exp(cumulative_intensity(f, omega) - rt - u * u / (2.0 * v2));
    };
    const double root_t = std::sqrt(t);
    std::vector<double> points = tail_breaks(root_t, std::sqrt(1.0 / std::max(f(t), 1.0 / t)));
    if (std::abs(u) > 0.0 && std::abs(u) < root_t) points.push_back(std::abs(u));
    std::sort(points.begin(), points.end());
    const double value = std::exp(-rt) * gaussian_pdf(u, 0.0, t) + integrate_pieces(integrand, points);
    return value / map.scale;
}

double npp_msd(const ProcessSpec& spec, double t) {
    require_npp_origin(spec);
    require_nonnegative_time(t);
    const auto map = rescale_to_unit(spec);
    const IntensityFunction f = intensity_of(spec.clock);
    const double variance_scale = map.scale * map.scale;
    if (t == 0.0) return 0.0;
    if (f.exponent == -1.0) {
        const double r = f.rate;
        return variance_scale *
               ((t + 1.0) / (r + 1.0) - 1.0 / (std::pow(t + 1.0, r) * (r + 1.0)));
    }
    const double rt = cumulative_intensity(f, t);
    const auto integrand = [&](double v) { return std::exp(cumulative_intensity(f, t - v) - rt); };
    const double width = 1.0 / std::max(f(t), 1.0 / t);
    return variance_scale * integrate_pieces(integrand, tail_breaks(t, width));
}

std::string to_string(LimitLaw law) {
    switch (law) {
        case LimitLaw::degenerate: return "degenerate";
        case LimitLaw::laplace_stationary: return "laplace-stationary";
        case LimitLaw::laplace_nonstationary: return "laplace-nonstationary";
        case LimitLaw::gaussian_laplace: return "gaussian-laplace";
    }
    return "unknown";
}

Regime classify_regime(double p) {
    if (!std::isfinite(p)) throw ConfigError("p must be finite");
    if (p > 0.0) return {-p, LimitLaw::degenerate, true};
    if (p == 0.0) return {0.0, LimitLaw::laplace_stationary, false};
    if (p > -1.0) return {-p, LimitLaw::laplace_nonstationary, false};
    if (p == -1.0) return {1.0, LimitLaw::laplace_nonstationary, false};
    return {1.0, LimitLaw::gaussian_laplace, false};
}

DensityCurve tabulate_pdf(const ProcessSpec& spec, const std::vector<double>& xs, double t) {
    DensityCurve curve{xs, {}, t, Provenance::analytic};
    curve.values.reserve(xs.size());
    const bool homogeneous = std::holds_alternative<HomogeneousPoisson>(spec.clock) ||
                             (std::holds_alternative<NonhomogeneousPoisson>(spec.clock) &&
                              std::get<NonhomogeneousPoisson>(spec.clock).exponent == 0.0);
    for (double x : xs) curve.values.push_back(homogeneous ? pdf(spec, x, t) : npp_pdf(spec, x, t));
    return curve;
}

MomentTable moment_table(const ProcessSpec& spec, int n_max, double t) {
    MomentTable table{t, {}};
    for (int n = 0; n <= n_max; ++n) table.values.push_back(nth_moment(spec, n, t));
    return table;
}

}  // namespace resetsde::analytic
