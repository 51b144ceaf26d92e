#include "logminor/minorant.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace logminor {

double PolynomialMinorant::log_modulus(PlanePoint z) const {
    double acc = log_amplitude;
    for (const ZeroEntry& zr : zeros)
        acc += static_cast<double>(zr.multiplicity) * std::log(std::abs(z - zr.center));
    return acc;
}

LogPotential PolynomialMinorant::as_potential() const {
    std::vector<Atom> atoms;
    atoms.reserve(zeros.size());
    for (const ZeroEntry& zr : zeros)
        atoms.push_back(Atom{zr.center, static_cast<double>(zr.multiplicity)});
    return LogPotential{log_amplitude, AtomicMassDistribution(std::move(atoms))};
}

PolynomialMinorant construct_minorant(const LogPotential& u, double d) {
    if (!(d > 0.0 && d <= 2.0)) throw std::domain_error("construct_minorant: d must lie in (0, 2]");
    PolynomialMinorant f;
    f.log_amplitude = u.c0 - 1.0 / d;
    f.zeros.reserve(u.measure.size());
    for (const Atom& a : u.measure.atoms()) {
        const double rounded = std::nearbyint(a.mass);
        if (std::abs(a.mass - rounded) > 1e-9 * std::max(1.0, std::abs(a.mass)))
            throw std::domain_error(
                "construct_minorant: masses must be integers (atomize_measure the input first)");
        f.zeros.push_back({a.center, static_cast<long long>(rounded)});
    }
    return f;
}

AtomicMassDistribution atomize_measure(const AtomicMassDistribution& mu) {
    std::vector<Atom> sorted = mu.atoms();
    std::sort(sorted.begin(), sorted.end(), [](const Atom& a, const Atom& b) {
        const double ra = std::abs(a.center);
        const double rb = std::abs(b.center);
        if (ra != rb) return ra < rb;
        return lex_less(a.center, b.center);
    });

    std::vector<Atom> out;
    double accumulator = 0.0;
    for (const Atom& a : sorted) {
        const double fl = std::floor(a.mass);
        double units = fl;
        accumulator += a.mass - fl;
        if (accumulator >= 1.0) {
            units += 1.0;
            accumulator -= 1.0;
        }
        if (units > 0.0) out.push_back(Atom{a.center, units});
    }
    return AtomicMassDistribution(std::move(out));
}

std::vector<PointwiseViolation> verify_pointwise(const LogPotential& u, const PolynomialMinorant& f,
                                                 std::span<const PlanePoint> grid) {
    std::vector<PointwiseViolation> violations;
    for (PlanePoint z : grid) {
        const double uv = u.evaluate(z);
        const double fv = f.log_modulus(z);
        if (fv > uv + 1e-12 * std::max(1.0, std::abs(uv)))
            violations.push_back({z, fv, uv});
    }
    return violations;
}

MeanCheckResult verify_means(const LogPotential& u, const PolynomialMinorant& f,
                             const RadiusFunction& r, std::span<const PlanePoint> grid) {
    MeanCheckResult res;
    res.worst_gap = -std::numeric_limits<double>::infinity();
    for (PlanePoint z : grid) {
        const double rho = r(z);
        const double fv = f.log_modulus(z);
        const double dm = disk_mean_exact(u, z, rho);
        const double cm = circle_mean_exact(u, z, rho);
        const double slack = 1e-12 * std::max({1.0, std::abs(dm), std::abs(cm)});
        if (fv > dm + slack) ++res.minorant_violations;
        if (dm > cm + slack) ++res.chain_violations;
        if (std::isfinite(fv)) res.worst_gap = std::max(res.worst_gap, fv - dm);
        ++res.checked;
    }
    res.pass = res.minorant_violations == 0 && res.chain_violations == 0;
    return res;
}

GrowthCheckResult verify_radial_growth(const LogPotential& u, const PolynomialMinorant& f,
                                       const RadiusFunction& r, std::span<const double> radii,
                                       int n_samples) {
    GrowthCheckResult res;
    res.pass = true;
    const LogPotential lf = f.as_potential();
    for (double R : radii) {
        if (!(R >= 0.0)) throw std::domain_error("verify_radial_growth: radii must be nonnegative");
        GrowthCheckResult::Row row;
        row.R = R;
        row.lhs = radial_sup(lf, R, n_samples, true);
        row.rhs = radial_sup(u, R + r.circle_sup(R), n_samples, true);
        if (!(row.lhs <= row.rhs + 1e-6)) res.pass = false;
        res.rows.push_back(row);
    }
    return res;
}

}  // namespace logminor
