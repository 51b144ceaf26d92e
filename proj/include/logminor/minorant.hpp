#pragma once

#include <span>
#include <vector>

#include "logminor/means.hpp"
#include "logminor/potential.hpp"
#include "logminor/radius.hpp"

namespace logminor {

/// ln|f| of an entire function f(z) = e^{log_amplitude} * prod (z - b_k)^{nu_k},
/// f not identically zero by construction.
struct PolynomialMinorant {
    struct ZeroEntry {
        PlanePoint center;
        long long multiplicity = 1;
    };

    double log_amplitude = 0.0;
    std::vector<ZeroEntry> zeros;

    double log_modulus(PlanePoint z) const;

    /// The same function viewed as a log-potential (integer masses).
    LogPotential as_potential() const;
};

/// Minorant for an integer-atomic log-potential: zeros at the atoms with
/// multiplicities equal to the masses and amplitude c0 - 1/d, so that
/// ln|f| = u - 1/d everywhere and no exceptional set is needed. Throws
/// std::domain_error for a non-integer mass (atomize_measure handles those).
PolynomialMinorant construct_minorant(const LogPotential& u, double d);

/// Integer rounding of a measure that keeps every radial count within 1:
/// atoms sorted by |center| (lexicographic ties), masses split into floor +
/// fraction, floors kept in place, fractions accumulated in sorted order
/// with a unit mass deposited at the current center whenever the accumulator
/// reaches 1. Total output mass is the floor of the total input mass.
AtomicMassDistribution atomize_measure(const AtomicMassDistribution& mu);

struct PointwiseViolation {
    PlanePoint z;
    double log_f = 0.0;
    double u = 0.0;
};

/// Grid points where ln|f(z)| > u(z) beyond a 1e-12 mixed slack. Empty for
/// construct_minorant outputs on their own integer-atomic u.
std::vector<PointwiseViolation> verify_pointwise(const LogPotential& u, const PolynomialMinorant& f,
                                                 std::span<const PlanePoint> grid);

struct MeanCheckResult {
    bool pass = false;
    std::size_t checked = 0;
    std::size_t minorant_violations = 0;  // ln|f| > disk mean
    std::size_t chain_violations = 0;     // disk mean > circle mean (never expected)
    double worst_gap = 0.0;               // most positive ln|f| - disk mean
};

/// Checks ln|f(z)| <= disk_mean(u, z, r(z)) <= circle_mean(u, z, r(z)) on the
/// grid. The second inequality must hold unconditionally; the first is the
/// theorem being verified.
MeanCheckResult verify_means(const LogPotential& u, const PolynomialMinorant& f,
                             const RadiusFunction& r, std::span<const PlanePoint> grid);

struct GrowthCheckResult {
    struct Row {
        double R = 0.0;
        double lhs = 0.0;  // M_{ln|f|}(R)
        double rhs = 0.0;  // M_u(R + M_r(R))
    };

    bool pass = false;
    std::vector<Row> rows;
};

/// Radial-growth comparison M_{ln|f|}(R) <= M_u(R + M_r(R)) + 1e-6 at each
/// requested R, with sampled circle sups on both sides.
GrowthCheckResult verify_radial_growth(const LogPotential& u, const PolynomialMinorant& f,
                                       const RadiusFunction& r, std::span<const double> radii,
                                       int n_samples = 720);

}  // namespace logminor
