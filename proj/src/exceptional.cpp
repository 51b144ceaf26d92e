#include "logminor/exceptional.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace logminor {

double jensen_defect(const AtomicMassDistribution& mu, PlanePoint z, double rho) {
    if (!(rho > 0.0)) throw std::domain_error("jensen_defect: rho must be positive");
    double acc = 0.0;
    for (const Atom& a : mu.atoms()) {
        const double s = std::abs(a.center - z);
        if (s == 0.0) return std::numeric_limits<double>::infinity();
        if (s <= rho) acc += a.mass * std::log(rho / s);
    }
    return acc;
}

bool is_exceptional(const AtomicMassDistribution& mu, PlanePoint z, double p_at_z, double d) {
    if (!(d > 0.0 && d <= 2.0)) throw std::domain_error("is_exceptional: d must lie in (0, 2]");
    return jensen_defect(mu, z, p_at_z) > 1.0 / d;
}

bool is_exceptional(const AtomicMassDistribution& mu, PlanePoint z, const PFunction& p, double d) {
    return is_exceptional(mu, z, p(z), d);
}

namespace {

// Window for the order precondition of build_p: finite atomic measures have
// true order 0, but the contract is stated against the windowed estimator.
ProfileWindow default_order_window(const AtomicMassDistribution& mu) {
    const double hi = std::max(2.0, 2.0 * mu.max_center_radius());
    return ProfileWindow{1.0, hi, 128};
}

void audit_p(const PFunction& p, const RadiusFunction& r) {
    // 100 radii x 100 angles, deterministic.
    for (int i = 0; i < 100; ++i) {
        const double x = std::exp(std::log(1e-4) + (std::log(1e6) - std::log(1e-4)) * i / 99.0);
        for (int j = 0; j < 100; ++j) {
            const double th = 2.0 * M_PI * j / 100.0;
            const PlanePoint z(x * std::cos(th), x * std::sin(th));
            const double pz = p(z);
            const double mid = std::pow(2.0 + std::abs(z), -p.Q);
            if (!(pz <= mid * (1.0 + 1e-12)))
                throw std::logic_error("build_p: p exceeds (2+|z|)^(-Q) at a sample point");
            if (!(mid <= r(z) * (1.0 + 1e-12)))
                throw std::logic_error("build_p: (2+|z|)^(-Q) exceeds r at a sample point");
            if (!(pz <= 0.5))
                throw std::logic_error("build_p: p exceeds 1/2 at a sample point");
        }
    }
}

}  // namespace

PFunction build_p(const RadiusFunction& r, const AtomicMassDistribution& mu, double d, double l) {
    if (!(d > 0.0 && d <= 2.0)) throw std::domain_error("build_p: d must lie in (0, 2]");
    const RadiusCheck rc = check_radius_condition(r);
    if (!rc.passes)
        throw std::domain_error("build_p: radius function fails the admissibility condition: " + rc.note);
    const double measured = order_of_measure(mu, default_order_window(mu));
    if (!(l > measured))
        throw std::domain_error("build_p: l must exceed the measured order of the measure");

    const GrowthEnvelope env = fit_growth_envelope(mu, l);
    PFunction p;
    p.Q = rc.Q;
    p.l = l;
    p.C = env.C;
    p.d = d;
    p.P = rc.Q + 1.0 + (rc.Q + l + 1.0) / d;
    p.scale = std::pow(60.0 * (l + 1.0) * env.C, -1.0 / d);
    audit_p(p, r);
    return p;
}

double sup_over_disk_radial(const PFunction& p, double power, PlanePoint z, double s) {
    if (!(power > 0.0)) throw std::domain_error("sup_over_disk_radial: power must be positive");
    if (!(s >= 0.0)) throw std::domain_error("sup_over_disk_radial: s must be nonnegative");
    return std::pow(p.scale, power) *
           std::pow(4.0 + std::max(0.0, std::abs(z) - s), -p.P * power);
}

double theorem_bound_rhs(const AtomicMassDistribution& mu, const PFunction& p, double d,
                         const std::function<bool(PlanePoint)>& region_Ss) {
    const double s = p.sup();
    double acc = 0.0;
    for (const Atom& a : mu.atoms())
        if (region_Ss(a.center)) acc += a.mass * sup_over_disk_radial(p, d, a.center, s);
    return 60.0 * acc;
}

ExceptionalSample flag_exceptional(const AtomicMassDistribution& mu, const PFunction& p, double d,
                                   std::span<const PlanePoint> candidates) {
    ExceptionalSample out;
    for (PlanePoint z : candidates) {
        const double defect = jensen_defect(mu, z, p(z));
        if (defect > 1.0 / d) {
            out.points.push_back(z);
            out.defects.push_back(defect);
        }
    }
    return out;
}

std::vector<PlanePoint> sample_search_region(const AtomicMassDistribution& mu, double s,
                                             int per_atom, Rng& rng) {
    std::vector<PlanePoint> out;
    out.reserve(mu.size() * static_cast<std::size_t>(per_atom));
    for (const Atom& a : mu.atoms()) {
        for (int k = 0; k < per_atom; ++k) {
            const double rho = s * std::exp(rng.uniform(std::log(1e-3), 0.0));
            const double th = rng.uniform(0.0, 2.0 * M_PI);
            out.push_back(a.center + PlanePoint(rho * std::cos(th), rho * std::sin(th)));
        }
    }
    return out;
}

ExceptionalCheck exceptional_cover_and_check(const AtomicMassDistribution& mu, const PFunction& p,
                                             double d, std::span<const PlanePoint> sample_S,
                                             const RadiusFunction& r, bool p_from_build) {
    ExceptionalCheck out;
    const double s = p.sup();

    ExceptionalSample flagged = flag_exceptional(mu, p, d, sample_S);
    out.flagged = flagged.points;
    out.defects = flagged.defects;

    RadiusAssignment assignment;
    assignment.entries.reserve(flagged.points.size());
    for (PlanePoint z : flagged.points) {
        const auto t = find_bad_radius(mu, z, p(z), d);
        if (!t)
            throw std::logic_error(
                "exceptional_cover_and_check: exceptional point without a bad radius "
                "(contradicts the covering construction)");
        assignment.entries.push_back({z, *t});
    }

    const RadiusAssignment selected = besicovitch_select(assignment);
    out.cover = selected.as_cover();
    out.lhs_weight = cover_weight(out.cover, d);

    // The integral side reads mu on atoms within 2s of the sample.
    auto in_Ss = [&sample_S, s](PlanePoint a) {
        for (PlanePoint z : sample_S)
            if (std::abs(a - z) <= 2.0 * s) return true;
        return false;
    };

    // The weight comparison is sound only while the selected family overlaps
    // every atom at most 19 times; audit rather than assume.
    for (const Atom& a : mu.atoms()) {
        if (!in_Ss(a.center)) continue;
        const std::size_t m = multiplicity(selected, a.center);
        out.max_atom_multiplicity = std::max(out.max_atom_multiplicity, m);
        if (m > 19)
            throw std::runtime_error(
                "exceptional_cover_and_check: selected family multiplicity exceeds 19 at an atom; "
                "the covering bound does not apply");
    }

    out.rhs_theorem1 = theorem_bound_rhs(mu, p, d, in_Ss);

    const bool theorem1_ok = out.lhs_weight <= out.rhs_theorem1 * (1.0 + 1e-12);
    bool theorem2_ok = true;
    if (p_from_build && !sample_S.empty()) {
        double sup_r = 0.0;
        for (PlanePoint z : sample_S) sup_r = std::max(sup_r, r(z));
        out.rhs_theorem2 = std::min(1.0, sup_r);
        out.checked_theorem2 = true;
        theorem2_ok = out.rhs_theorem1 <= out.rhs_theorem2 * (1.0 + 1e-12);
    }

    out.pass = theorem1_ok && theorem2_ok;
    if (!theorem1_ok)
        out.reason = "cover weight exceeds the integral bound";
    else if (!theorem2_ok)
        out.reason = "integral bound exceeds sup of r over the sample";
    return out;
}

}  // namespace logminor
