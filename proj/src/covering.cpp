#include "logminor/covering.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace logminor {

std::optional<double> find_bad_radius(const AtomicMassDistribution& mu, PlanePoint z, double p_z,
                                      double d) {
    if (!(p_z > 0.0)) throw std::domain_error("find_bad_radius: p_z must be positive");
    if (!(d > 0.0 && d <= 2.0)) throw std::domain_error("find_bad_radius: d must lie in (0, 2]");

    std::vector<double> jumps;
    bool atom_at_z = false;
    for (const Atom& a : mu.atoms()) {
        const double s = std::abs(a.center - z);
        if (s == 0.0)
            atom_at_z = true;
        else if (s <= p_z)
            jumps.push_back(s);
    }
    std::sort(jumps.begin(), jumps.end());

    if (atom_at_z) {
        double t = std::min(p_z, std::ldexp(p_z, -20));
        if (!jumps.empty()) t = std::min(t, jumps.front());
        return t;
    }

    const double pd = std::pow(p_z, d);
    for (double t : jumps)
        if (std::pow(t, d) <= pd * mu.radial_count(z, t)) return t;
    return std::nullopt;
}

RadiusAssignment besicovitch_select(const RadiusAssignment& assignment) {
    std::vector<RadiusAssignment::Entry> sorted = assignment.entries;
    std::sort(sorted.begin(), sorted.end(),
              [](const RadiusAssignment::Entry& a, const RadiusAssignment::Entry& b) {
                  if (a.t != b.t) return a.t > b.t;
                  return lex_less(a.point, b.point);
              });

    RadiusAssignment selected;
    for (const RadiusAssignment::Entry& e : sorted) {
        bool center_covered = false;
        for (const RadiusAssignment::Entry& s : selected.entries) {
            if (std::abs(e.point - s.point) <= s.t) {
                center_covered = true;
                break;
            }
        }
        if (!center_covered) selected.entries.push_back(e);
    }
    return selected;
}

std::size_t multiplicity(const RadiusAssignment& family, PlanePoint probe) {
    std::size_t count = 0;
    for (const RadiusAssignment::Entry& e : family.entries)
        if (std::abs(probe - e.point) <= e.t) ++count;
    return count;
}

}  // namespace logminor
