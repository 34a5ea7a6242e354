#pragma once

#include <functional>
#include <vector>

namespace resetsde {

struct QuadratureOptions {
    double rel_tol = 1e-11;       // refinement target
    double accept_rel = 1e-8;     // error estimate above this * L1 norm throws
    double accept_abs = 1e-300;
    unsigned max_depth = 18;
};

/// Adaptive Gauss-Kronrod (31 point) on [a, b]; either bound may be
/// infinite. Throws NumericalError if the error estimate stays above
/// the acceptance tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& options = {});

/// Same, over the consecutive pieces of an ascending list of break points.
double integrate_pieces(const std::function<double(double)>& f, const std::vector<double>& points,
                        const QuadratureOptions& options = {});

}  // namespace resetsde
