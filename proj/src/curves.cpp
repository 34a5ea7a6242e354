#include "resetsde/curves.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace resetsde {

std::string to_string(Provenance provenance) {
    switch (provenance) {
        case Provenance::analytic: return "analytic";
        case Provenance::fpe: return "fpe";
        case Provenance::histogram: return "histogram";
    }
    return "unknown";
}

double DensityCurve::integral() const {
    double total = 0.0;
    for (std::size_t i = 1; i < xs.size(); ++i)
        total += 0.5 * (values[i] + values[i - 1]) * (xs[i] - xs[i - 1]);
    return total;
}

namespace {

void require_same_grid(const DensityCurve& a, const DensityCurve& b) {
    if (a.xs.size() != b.xs.size() || a.values.size() != a.xs.size() ||
        b.values.size() != b.xs.size())
        throw std::invalid_argument("density curves are on different grids");
    for (std::size_t i = 0; i < a.xs.size(); ++i)
        if (std::abs(a.xs[i] - b.xs[i]) > 1e-12 * std::max(1.0, std::abs(a.xs[i])))
            throw std::invalid_argument("density curves are on different grids");
}

}  // namespace

double l1_distance(const DensityCurve& a, const DensityCurve& b) {
    require_same_grid(a, b);
    double total = 0.0;
    for (std::size_t i = 1; i < a.xs.size(); ++i) {
        const double left = std::abs(a.values[i - 1] - b.values[i - 1]);
        const double right = std::abs(a.values[i] - b.values[i]);
        total += 0.5 * (left + right) * (a.xs[i] - a.xs[i - 1]);
    }
    return total;
}

double linf_distance(const DensityCurve& a, const DensityCurve& b) {
    require_same_grid(a, b);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.xs.size(); ++i)
        worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
    return worst;
}

}  // namespace resetsde
