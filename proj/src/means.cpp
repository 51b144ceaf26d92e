#include "logminor/means.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace logminor {

double circle_mean_exact(const LogPotential& u, PlanePoint z, double rho) {
    if (!(rho > 0.0)) throw std::domain_error("circle_mean_exact: rho must be positive");
    double acc = u.c0;
    for (const Atom& a : u.measure.atoms())
        acc += a.mass * std::log(std::max(std::abs(a.center - z), rho));
    return acc;
}

double disk_mean_kernel(double s, double rho) {
    if (s >= rho) return std::log(s);
    const double x = s / rho;
    return std::log(rho) - 0.5 + 0.5 * x * x;
}

double disk_mean_exact(const LogPotential& u, PlanePoint z, double rho) {
    if (!(rho > 0.0)) throw std::domain_error("disk_mean_exact: rho must be positive");
    double acc = u.c0;
    for (const Atom& a : u.measure.atoms())
        acc += a.mass * disk_mean_kernel(std::abs(a.center - z), rho);
    return acc;
}

namespace {

double circle_quadrature(const LogPotential& u, PlanePoint z, double rho, int n,
                         QuadratureStats* stats) {
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        double th = 2.0 * M_PI * k / n;
        double v = u.evaluate(z + PlanePoint(rho * std::cos(th), rho * std::sin(th)));
        for (int tries = 0; !std::isfinite(v) && tries < 4; ++tries) {
            th += 16.0 * std::numeric_limits<double>::epsilon() * (tries + 1);
            v = u.evaluate(z + PlanePoint(rho * std::cos(th), rho * std::sin(th)));
            if (stats && tries == 0) ++stats->perturbed_nodes;
        }
        sum += v;
    }
    return sum / n;
}

}  // namespace

double mean_quadrature(const LogPotential& u, PlanePoint z, double rho, MeanKind kind, int n,
                       QuadratureStats* stats) {
    if (!(rho > 0.0)) throw std::domain_error("mean_quadrature: rho must be positive");
    n = std::max(64, n);
    if (kind == MeanKind::circle) return circle_quadrature(u, z, rho, n, stats);

    // t * circle_mean(t) extends continuously by 0 at t = 0 (the t ln t limit).
    const double h = rho / n;
    double sum = 0.0;
    for (int k = 1; k < n; ++k) {
        const double t = h * k;
        sum += t * circle_mean_exact(u, z, t);
    }
    sum += 0.5 * rho * circle_mean_exact(u, z, rho);
    return (2.0 / (rho * rho)) * h * sum;
}

}  // namespace logminor
