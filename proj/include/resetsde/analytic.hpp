#pragma once

#include <complex>
#include <string>
#include <vector>

#include "resetsde/core.hpp"
#include "resetsde/curves.hpp"

// Closed-form results for Brownian motion with Poissonian resetting.
//
// Functions taking a ProcessSpec accept any diffusivity: they map the spec to
// D = 1/2 with rescale_to_unit, evaluate there, and map back. Functions taking
// bare (x, t, r, ...) arguments are the D = 1/2 building blocks.
namespace resetsde::analytic {

/// M_t(s) = E exp(s X_t). Defined for |s| < sqrt(2r) / sqrt(2D) when r > 0;
/// throws DomainError outside. r = 0 gives the Brownian MGF for every s.
double mgf(const ProcessSpec& spec, double s, double t);

/// phi_t(s) = E exp(i s X_t), for every real s.
std::complex<double> char_fn(const ProcessSpec& spec, double s, double t);

/// Laplace density with mean x_reset and scale (2r)^(-1/2).
double laplace_pdf(double x, double r, double x_reset);
double laplace_cdf(double x, double r, double x_reset);

/// Density at x of N(0, t) + Laplace(x_reset, (2r)^(-1/2)), via erfc in
/// scaled form so that large r t neither overflows nor cancels.
double normal_laplace_conv(double x, double t, double r, double x_reset);
double normal_laplace_cdf(double x, double t, double r, double x_reset);

double gaussian_pdf(double x, double mean, double variance);
double gaussian_cdf(double x, double mean, double variance);

/// p(x, t) = f_L(x) + e^{-rt} (f_W(x) - (f_N * f_L)(x)).
/// Throws NumericalError if cancellation drives the value below -1e-12.
double pdf(const ProcessSpec& spec, double x, double t);

/// P(X_t <= x), same decomposition as pdf with every part in closed form.
double cdf(const ProcessSpec& spec, double x, double t);

double mean(const ProcessSpec& spec, double t);

/// E(L^n) for L ~ Laplace(0, (2r)^(-1/2)).
double laplace_moment(int n, double r);

/// Kummer's confluent hypergeometric function 1F1(a; b; c) by its power
/// series to 1e-12 relative. Terminating series are summed directly; other
/// series with c < 0 go through 1F1(a; b; c) = e^c 1F1(b - a; b; -c).
double kummer_phi(double a, double b, double c);

/// E(W^n) for W ~ N(x0, t).
double gaussian_moment(int n, double x0, double t);

/// E((W + L)^n) for independent W ~ N(0, t), L ~ Laplace(0, (2r)^(-1/2)).
double sum_moment(int n, double t, double r);

/// E(X_t^n). Only x_reset = 0 has a closed form; other reset points throw
/// UnsupportedCase (integrate x^n pdf instead).
double nth_moment(const ProcessSpec& spec, int n, double t);

double stationary_pdf(const ProcessSpec& spec, double x);

// Nonhomogeneous Poisson resetting with intensity r (t + 1)^p. All three
// require x0 = x_reset = 0 and throw UnsupportedCase otherwise.
std::complex<double> npp_char_fn(const ProcessSpec& spec, double s, double t);
double npp_pdf(const ProcessSpec& spec, double x, double t);
double npp_msd(const ProcessSpec& spec, double t);

enum class LimitLaw { degenerate, laplace_stationary, laplace_nonstationary, gaussian_laplace };

std::string to_string(LimitLaw law);

/// Large-time behaviour of the power-law NPP process.
struct Regime {
    double exponent = 0.0;  // MSD ~ t^exponent
    LimitLaw law = LimitLaw::laplace_stationary;
    bool msd_vanishes = false;
};

Regime classify_regime(double p);

DensityCurve tabulate_pdf(const ProcessSpec& spec, const std::vector<double>& xs, double t);
MomentTable moment_table(const ProcessSpec& spec, int n_max, double t);

}  // namespace resetsde::analytic
