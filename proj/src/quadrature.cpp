#include "resetsde/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <sstream>

#include "resetsde/errors.hpp"

namespace resetsde {
namespace {

struct Piece {
    double value = 0.0;
    double error = 0.0;
    double l1 = 0.0;
};

Piece kronrod(const std::function<double(double)>& f, double a, double b, const QuadratureOptions& options) {
    Piece p;
    if (a == b) return p;
    p.value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        f, a, b, options.max_depth, options.rel_tol, &p.error, &p.l1);
    return p;
}

// Acceptance is judged on the whole integral so that negligible pieces
// cannot fail on their own relative error.
double accept(const Piece& total, double a, double b, const QuadratureOptions& options) {
    if (!std::isfinite(total.value) ||
        total.error > std::max(options.accept_rel * total.l1, options.accept_abs)) {
        std::ostringstream msg;
        msg << "quadrature did not converge on [" << a << ", " << b << "]: estimate " << total.value
            << ", error " << total.error << ", L1 " << total.l1;
        throw NumericalError(msg.str());
    }
    return total.value;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& options) {
    return accept(kronrod(f, a, b, options), a, b, options);
}

double integrate_pieces(const std::function<double(double)>& f, const std::vector<double>& points,
                        const QuadratureOptions& options) {
    Piece total;
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (!(points[i] > points[i - 1])) continue;
        const Piece p = kronrod(f, points[i - 1], points[i], options);
        total.value += p.value;
        total.error += p.error;
        total.l1 += p.l1;
    }
    if (points.empty()) return 0.0;
    return accept(total, points.front(), points.back(), options);
}

}  // namespace resetsde
