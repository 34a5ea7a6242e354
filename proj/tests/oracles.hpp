#pragma once

// Test-only reference computations. None of these call into the library's
// closed forms or its quadrature, so agreement is a genuine cross-check.

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

namespace detail {

inline double simpson_step(const std::function<double(double)>& f, double a, double b, double fa,
                           double fm, double fb, double whole, double tol, int depth, int min_depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double diff = left + right - whole;
    if (depth <= 0 || (min_depth <= 0 && std::abs(diff) <= 15.0 * tol)) return left + right + diff / 15.0;
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, min_depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, min_depth - 1);
}

}  // namespace detail

/// Adaptive Simpson on a finite interval. The first `min_depth` levels are
/// always split so a narrow peak cannot hide between the initial samples.
inline double simpson(const std::function<double(double)>& f, double a, double b, double tol = 1e-12,
                      int depth = 50, int min_depth = 6) {
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson_step(f, a, b, fa, fm, fb, whole, tol, depth, min_depth);
}

/// Simpson over consecutive break points.
inline double simpson_pieces(const std::function<double(double)>& f, const std::vector<double>& points,
                             double tol = 1e-12) {
    double total = 0.0;
    for (std::size_t i = 1; i < points.size(); ++i)
        total += simpson(f, points[i - 1], points[i], tol / static_cast<double>(points.size()));
    return total;
}

inline double gauss(double x, double mean, double var) {
    return std::exp(-(x - mean) * (x - mean) / (2.0 * var)) / std::sqrt(2.0 * std::numbers::pi * var);
}

/// Density by conditioning on the last reset: with probability e^{-rt}
/// there was none, otherwise the age s of the last reset has density
/// r e^{-rs} on (0, t).
inline double resetting_pdf(double x, double t, double D, double x0, double xr, double r) {
    // s = u^2 removes the s^(-1/2) behaviour of the Gaussian at s -> 0.
    const auto integrand = [&](double u) {
        if (u == 0.0) return 0.0;
        const double s = u * u;
        return 2.0 * u * r * std::exp(-r * s) * gauss(x, xr, 2.0 * D * s);
    };
    const double root = std::sqrt(t);
    std::vector<double> points{0.0};
    const double knee = std::abs(x - xr) / std::sqrt(2.0 * D) * 0.5;
    if (knee > 0.0 && knee < root) points.push_back(knee);
    points.push_back(root);
    return std::exp(-r * t) * gauss(x, x0, 2.0 * D * t) + simpson_pieces(integrand, points, 1e-13);
}

/// E e^{sX_t} by the same decomposition.
inline double resetting_mgf(double s, double t, double D, double x0, double xr, double r) {
    const auto integrand = [&](double age) { return r * std::exp(-r * age + s * xr + D * s * s * age); };
    return std::exp(-r * t + s * x0 + D * s * s * t) + simpson(integrand, 0.0, t, 1e-14);
}

/// Integral of x^n times the oracle density on [lo, hi].
inline double resetting_moment(int n, double t, double D, double x0, double xr, double r, double lo,
                               double hi) {
    const auto f = [&](double x) { return std::pow(x, n) * resetting_pdf(x, t, D, x0, xr, r); };
    std::vector<double> points{lo};
    for (double b : {std::min(x0, xr), std::max(x0, xr)})
        if (b > points.back() && b < hi) points.push_back(b);
    points.push_back(hi);
    return simpson_pieces(f, points, 1e-11);
}

/// Brute-force Gaussian(0, t) * Laplace(xr, rate r) convolution at D = 1/2.
inline double normal_laplace(double x, double t, double r, double xr) {
    const double lambda = std::sqrt(2.0 * r);
    const auto f = [&](double y) {
        return gauss(x - y, 0.0, t) * 0.5 * lambda * std::exp(-lambda * std::abs(y - xr));
    };
    const double reach = 12.0 * std::sqrt(t) + 40.0 / lambda;
    return simpson_pieces(f, {xr - reach, std::min(xr, x), std::max(xr, x), xr + reach}, 1e-13);
}

}  // namespace oracle
