#pragma once

#include <cstddef>
#include <vector>

#include "resetsde/core.hpp"
#include "resetsde/curves.hpp"

namespace resetsde::fpe {

enum class Boundary { reflecting, absorbing };

/// Uniform grid x_i = x_lo + i h, i = 0 .. n - 1, plus a time step.
struct FpeGrid {
    double x_lo = -8.0;
    double h = 1e-2;
    std::size_t n = 1601;
    double dt = 1e-3;
    Boundary boundary = Boundary::reflecting;

    double x_hi() const { return x_lo + h * static_cast<double>(n - 1); }
    double x(std::size_t i) const { return x_lo + h * static_cast<double>(i); }
    std::vector<double> xs() const;
};

/// Reflecting grid reaching 8 * max(sqrt(2 D min(t_final, 4 / r)), sqrt(D / r))
/// beyond the outermost of x0 and x_R. With t_final <= 0 only the stationary
/// scale is used.
FpeGrid default_grid(const ProcessSpec& spec, double t_final, double h = 1e-2, double dt = 1e-3);

/// Throws ConfigError unless x0 and x_R sit at least 5 of the same scales
/// inside the grid and dt <= h.
void validate_grid(const ProcessSpec& spec, const FpeGrid& grid, double t_final);

/// Discrete delta at x: mass 1 split linearly between the two nearest nodes,
/// returned as nodal values (weight / h).
std::vector<double> discrete_delta(const FpeGrid& grid, double x);

/// h-weighted inner product sum_i h a_i b_i.
double inner_product(const std::vector<double>& a, const std::vector<double>& b, double h);

/// dp/dt = D p'' + r delta(x - x_R) - r p, p(x, 0) = delta(x - x0).
///
/// Crank-Nicolson with Rannacher start-up (four implicit half steps damp the
/// delta initial condition). The sink -r p is implicit inside the
/// tridiagonal system and the constant source is added explicitly, so
/// discrete mass is conserved exactly with reflecting walls. Throws
/// NumericalError if mass drifts by more than 1e-3.
DensityCurve solve_fpe_evans(const ProcessSpec& spec, const FpeGrid& grid, double t_final);

/// dp/dt = D p'' + 2 sqrt(r D) f_L(x) delta(x - x_R) - r p, with f_L the
/// stationary Laplace density; the coefficient is evaluated at x_R before
/// discretization.
DensityCurve solve_fpe_delta_fl(const ProcessSpec& spec, const FpeGrid& grid, double t_final);

/// Solves D p'' - r p + r delta(x - x_R) = 0 and normalizes to unit mass.
/// Throws NumericalError when the system is singular (r = 0).
DensityCurve stationary_fpe(const ProcessSpec& spec, const FpeGrid& grid);

/// A g = D g'' + r (g(x_R) - g), g(x_R) interpolated linearly.
std::vector<double> apply_generator(const std::vector<double>& g, const FpeGrid& grid,
                                    const ProcessSpec& spec);

/// A* f = D f'' + r (delta(x - x_R) * integral(f) - f).
std::vector<double> apply_adjoint(const std::vector<double>& f, const FpeGrid& grid,
                                  const ProcessSpec& spec);

/// Discrete second derivative with the grid's boundary rule.
std::vector<double> second_difference(const std::vector<double>& values, const FpeGrid& grid);

}  // namespace resetsde::fpe
