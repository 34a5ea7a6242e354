#pragma once

#include <string>
#include <vector>

namespace resetsde {

enum class Provenance { analytic, fpe, histogram };

std::string to_string(Provenance provenance);

/// Tabulated density p(x, t) on an ascending grid.
struct DensityCurve {
    std::vector<double> xs;
    std::vector<double> values;
    double t = 0.0;
    Provenance provenance = Provenance::analytic;

    /// Trapezoid rule over xs.
    double integral() const;
};

/// E(X_t^n) for n = 0 .. values.size() - 1.
struct MomentTable {
    double t = 0.0;
    std::vector<double> values;
};

/// Sum of |a_i - b_i| weighted by trapezoid cell widths of a shared grid.
double l1_distance(const DensityCurve& a, const DensityCurve& b);
double linf_distance(const DensityCurve& a, const DensityCurve& b);

}  // namespace resetsde
