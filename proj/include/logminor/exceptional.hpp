#pragma once

#include <span>
#include <string>
#include <vector>

#include "logminor/covering.hpp"
#include "logminor/measure.hpp"
#include "logminor/radius.hpp"
#include "logminor/rng.hpp"

namespace logminor {

/// Jensen defect at scale rho: the integral of mu_z_rad(t)/t over (0, rho],
/// evaluated exactly as sum over atoms with 0 < |a_k - z| <= rho of
/// m_k ln(rho / |a_k - z|), plus +infinity when an atom sits at z itself.
double jensen_defect(const AtomicMassDistribution& mu, PlanePoint z, double rho);

/// Strict membership test for the exceptional set: defect at scale p(z)
/// exceeds 1/d. Boundary points (defect == 1/d) are not exceptional.
bool is_exceptional(const AtomicMassDistribution& mu, PlanePoint z, double p_at_z, double d);

/// The explicit comparison radius p(z) = scale * (4 + |z|)^(-P) with
///   P     = Q + 1 + (Q + l + 1)/d,
///   scale = (60 (l+1) C)^(-1/d),
/// which stays below both (2+|z|)^(-Q) and r(z) pointwise and has
/// sup p = p(0) <= 1/2.
struct PFunction {
    double scale = 0.0;
    double P = 1.0;
    // provenance
    double Q = 0.0;
    double l = 0.0;
    double C = 1.0;
    double d = 1.0;

    double at_radius(double x) const { return scale * std::pow(4.0 + x, -P); }
    double operator()(PlanePoint z) const { return at_radius(std::abs(z)); }
    double sup() const { return at_radius(0.0); }
};

bool is_exceptional(const AtomicMassDistribution& mu, PlanePoint z, const PFunction& p, double d);

/// Builds p from an admissible r and a growth envelope for mu at exponent l.
/// Throws std::domain_error when r fails the admissibility check, when
/// d is outside (0, 2], or when l does not exceed the measured (windowed)
/// order of mu. The constructed invariants p <= (2+|z|)^(-Q) <= r and
/// sup p <= 1/2 are re-verified on 10^4 deterministic sample points
/// (std::logic_error on failure).
PFunction build_p(const RadiusFunction& r, const AtomicMassDistribution& mu, double d, double l);

/// (p^power) supped over the closed disk of radius s about z. Since p is
/// radial and strictly decreasing, this is
/// scale^power * (4 + max(0, |z| - s))^(-P * power), exactly.
double sup_over_disk_radial(const PFunction& p, double power, PlanePoint z, double s);

/// Right-hand side of the content bound: 60 * sum over atoms a in the region
/// of m_a * (p^d supped over the s-disk at a), with s = sup p.
double theorem_bound_rhs(const AtomicMassDistribution& mu, const PFunction& p, double d,
                         const std::function<bool(PlanePoint)>& region_Ss);

/// Sample points flagged exceptional together with their defects.
struct ExceptionalSample {
    std::vector<PlanePoint> points;
    std::vector<double> defects;
};

ExceptionalSample flag_exceptional(const AtomicMassDistribution& mu, const PFunction& p, double d,
                                   std::span<const PlanePoint> candidates);

/// Candidate points where the defect can be positive: the defect vanishes
/// beyond distance sup p from every atom, so the search region is the union
/// of per-atom disks of radius s.
std::vector<PlanePoint> sample_search_region(const AtomicMassDistribution& mu, double s,
                                             int per_atom, Rng& rng);

struct ExceptionalCheck {
    DiskCover cover;                    // selected witness disks
    std::vector<PlanePoint> flagged;    // exceptional sample points
    std::vector<double> defects;        // aligned with flagged
    double lhs_weight = 0.0;            // cover_weight of the witness
    double rhs_theorem1 = 0.0;          // 60 * integral bound
    double rhs_theorem2 = 1.0;          // min(1, sup of r over the sample)
    std::size_t max_atom_multiplicity = 0;
    bool checked_theorem2 = false;
    bool pass = false;
    std::string reason;
};

/// Full pipeline over a finite sample S: flag exceptional points, assign bad
/// radii (guaranteed to exist for exceptional points; absence is an internal
/// contradiction and throws std::logic_error), select a bounded-overlap
/// subcover, and compare the witness weight against both theorem bounds.
/// The selected family's multiplicity is audited at the atoms the integral
/// reads; exceeding 19 aborts with std::runtime_error rather than reporting
/// a silently unsound bound. The second (theorem-2) inequality is checked
/// only when p came from build_p and the sample is nonempty.
ExceptionalCheck exceptional_cover_and_check(const AtomicMassDistribution& mu, const PFunction& p,
                                             double d, std::span<const PlanePoint> sample_S,
                                             const RadiusFunction& r, bool p_from_build = true);

}  // namespace logminor
