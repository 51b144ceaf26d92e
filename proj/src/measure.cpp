#include "logminor/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace logminor {

AtomicMassDistribution::AtomicMassDistribution(std::vector<Atom> atoms) {
    for (const Atom& a : atoms) {
        if (!is_finite(a.center))
            throw std::invalid_argument("AtomicMassDistribution: atom center must be finite");
        if (!(a.mass > 0.0) || !std::isfinite(a.mass))
            throw std::invalid_argument("AtomicMassDistribution: atom mass must be positive and finite");
    }
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& a, const Atom& b) { return lex_less(a.center, b.center); });
    for (const Atom& a : atoms) {
        if (!atoms_.empty() && atoms_.back().center == a.center)
            atoms_.back().mass += a.mass;
        else
            atoms_.push_back(a);
    }
    for (const Atom& a : atoms_) total_mass_ += a.mass;
    if (!std::isfinite(total_mass_))
        throw std::invalid_argument("AtomicMassDistribution: total mass must be finite");

    // Origin-centered prefix structure: radii ascending, cumulative masses.
    std::vector<std::pair<double, double>> by_radius;
    by_radius.reserve(atoms_.size());
    for (const Atom& a : atoms_) by_radius.emplace_back(std::abs(a.center), a.mass);
    std::sort(by_radius.begin(), by_radius.end());
    origin_radii_.reserve(by_radius.size());
    origin_prefix_.reserve(by_radius.size());
    double acc = 0.0;
    for (const auto& [r, m] : by_radius) {
        acc += m;
        origin_radii_.push_back(r);
        origin_prefix_.push_back(acc);
    }
}

double AtomicMassDistribution::max_center_radius() const {
    return origin_radii_.empty() ? 0.0 : origin_radii_.back();
}

double AtomicMassDistribution::radial_count(PlanePoint z, double t) const {
    if (!(t >= 0.0)) throw std::domain_error("radial_count: radius must be nonnegative");
    double sum = 0.0;
    for (const Atom& a : atoms_)
        if (std::abs(a.center - z) <= t) sum += a.mass;
    return sum;
}

double AtomicMassDistribution::radial_count(double t) const {
    if (!(t >= 0.0)) throw std::domain_error("radial_count: radius must be nonnegative");
    auto it = std::upper_bound(origin_radii_.begin(), origin_radii_.end(), t);
    if (it == origin_radii_.begin()) return 0.0;
    return origin_prefix_[static_cast<std::size_t>(it - origin_radii_.begin()) - 1];
}

std::optional<double> AtomicMassDistribution::mass_at(PlanePoint z) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), z,
                               [](const Atom& a, PlanePoint p) { return lex_less(a.center, p); });
    if (it != atoms_.end() && it->center == z) return it->mass;
    return std::nullopt;
}

double growth_order(const std::function<double(double)>& profile, const ProfileWindow& window) {
    if (!(window.t_min > 0.0) || !(window.t_max > window.t_min) || window.samples < 2)
        throw std::domain_error("growth_order: window requires 0 < t_min < t_max and >= 2 samples");

    const int n = window.samples;
    const double lx0 = std::log(window.t_min);
    const double lx1 = std::log(window.t_max);
    std::vector<double> xs(static_cast<std::size_t>(n)), ys(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double lx = lx0 + (lx1 - lx0) * i / (n - 1);
        const double t = std::exp(lx);
        const double m = profile(t);
        xs[static_cast<std::size_t>(i)] = lx;
        ys[static_cast<std::size_t>(i)] = std::log1p(std::max(0.0, m));
    }
    double xbar = 0.0, ybar = 0.0;
    for (int i = 0; i < n; ++i) {
        xbar += xs[static_cast<std::size_t>(i)];
        ybar += ys[static_cast<std::size_t>(i)];
    }
    xbar /= n;
    ybar /= n;
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
        const double dx = xs[static_cast<std::size_t>(i)] - xbar;
        num += dx * (ys[static_cast<std::size_t>(i)] - ybar);
        den += dx * dx;
    }
    return num / den;
}

double order_of_measure(const AtomicMassDistribution& mu, const ProfileWindow& window) {
    return growth_order([&mu](double t) { return mu.radial_count(t); }, window);
}

GrowthEnvelope fit_growth_envelope(const AtomicMassDistribution& mu, double l) {
    if (!(l >= 0.0) || !std::isfinite(l))
        throw std::domain_error("fit_growth_envelope: l must be nonnegative and finite");
    double best = mu.radial_count(0.0);  // ratio at t = 0, denominator 1
    for (const Atom& a : mu.atoms()) {
        const double t = std::abs(a.center);
        best = std::max(best, mu.radial_count(t) / std::pow(1.0 + t, l));
    }
    return GrowthEnvelope{std::max(1.0, best), l};
}

}  // namespace logminor
