#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "logminor/plane.hpp"

namespace logminor {

struct Atom {
    PlanePoint center;
    double mass = 0.0;

    bool operator==(const Atom&) const = default;
};

/// Finite positive point-mass measure on the plane. Atoms with equal centers
/// are merged at construction, so the radial counting functions have
/// well-defined jumps; the stored order is lexicographic in (re, im).
class AtomicMassDistribution {
public:
    AtomicMassDistribution() = default;
    explicit AtomicMassDistribution(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const { return atoms_; }
    bool empty() const { return atoms_.empty(); }
    std::size_t size() const { return atoms_.size(); }
    double total_mass() const { return total_mass_; }

    /// max |a_k| over atom centers; 0 for the empty measure.
    double max_center_radius() const;

    /// Mass of the closed disk of radius t about z (right-continuous,
    /// nondecreasing in t). Throws std::domain_error for t < 0.
    double radial_count(PlanePoint z, double t) const;

    /// Origin-centered counting function; O(log n) via precomputed prefix sums.
    double radial_count(double t) const;

    /// Mass sitting exactly at z, if any.
    std::optional<double> mass_at(PlanePoint z) const;

    bool operator==(const AtomicMassDistribution&) const = default;

private:
    std::vector<Atom> atoms_;            // lexicographic canonical order
    std::vector<double> origin_radii_;   // sorted |a_k|
    std::vector<double> origin_prefix_;  // cumulative mass by radius
    double total_mass_ = 0.0;
};

/// Polynomial envelope mu_rad(t) <= C (1+t)^l, C >= 1.
struct GrowthEnvelope {
    double C = 1.0;
    double l = 0.0;
};

/// Sample window for the growth-order estimator. The order is defined as a
/// limsup at +infinity; on finite data any estimator is windowed, so the
/// window is part of the contract.
struct ProfileWindow {
    double t_min = 1.0;
    double t_max = 1e4;
    int samples = 257;
};

/// Least-squares slope of ln(1 + profile^+(t)) against ln t over a
/// log-spaced sample of the window. Exactly 0 (up to rounding) for a profile
/// constant on the window. Throws std::domain_error for an empty window.
double growth_order(const std::function<double(double)>& profile, const ProfileWindow& window);

/// growth_order applied to the origin-centered counting function of mu.
double order_of_measure(const AtomicMassDistribution& mu, const ProfileWindow& window);

/// Smallest C >= 1 with mu_rad(t) <= C (1+t)^l for all t >= 0. Exact: the
/// counting function is a right-continuous step function with jumps only at
/// the atom radii and (1+t)^l is increasing, so the supremum of the ratio is
/// attained at a jump point or at t = 0.
GrowthEnvelope fit_growth_envelope(const AtomicMassDistribution& mu, double l);

}  // namespace logminor
