#include "logminor/potential.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace logminor {

double LogPotential::evaluate(PlanePoint z) const {
    // log(0) = -inf and masses are positive, so an atom hit propagates
    // to the sum without special casing.
    double acc = c0;
    for (const Atom& a : measure.atoms()) acc += a.mass * std::log(std::abs(z - a.center));
    return acc;
}

double circle_sup(const LogPotential& u, PlanePoint center, double rho, int n_samples, bool refine) {
    if (!(rho >= 0.0)) throw std::domain_error("circle_sup: rho must be nonnegative");
    if (rho == 0.0) return u.evaluate(center);

    auto at = [&](double th) {
        return u.evaluate(center + PlanePoint(rho * std::cos(th), rho * std::sin(th)));
    };
    const int n = std::max(16, n_samples);
    double best = -std::numeric_limits<double>::infinity();
    double best_th = 0.0;
    for (int k = 0; k < n; ++k) {
        const double th = 2.0 * M_PI * k / n;
        const double v = at(th);
        if (v > best) {
            best = v;
            best_th = th;
        }
    }
    if (!refine) return best;

    // Golden-section maximization on the bracket around the best sample.
    const double gr = 0.6180339887498949;
    double a = best_th - 2.0 * M_PI / n;
    double b = best_th + 2.0 * M_PI / n;
    double x1 = b - gr * (b - a);
    double x2 = a + gr * (b - a);
    double f1 = at(x1);
    double f2 = at(x2);
    for (int i = 0; i < 120 && (b - a) > 1e-14; ++i) {
        if (f1 >= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = at(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = at(x2);
        }
    }
    return std::max({best, f1, f2, at(0.5 * (a + b))});
}

double radial_sup(const LogPotential& u, double R, int n_samples, bool refine) {
    return circle_sup(u, PlanePoint(0.0, 0.0), R, n_samples, refine);
}

RadialGrowthFunction radial_growth(const LogPotential& u, int n_samples, bool refine) {
    return RadialGrowthFunction{
        [u, n_samples, refine](double R) { return radial_sup(u, R, n_samples, refine); }};
}

double order_of_function(const RadialGrowthFunction& M, const ProfileWindow& window) {
    return growth_order(M.profile, window);
}

}  // namespace logminor
