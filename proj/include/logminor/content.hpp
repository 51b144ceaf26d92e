#pragma once

#include <functional>
#include <span>
#include <vector>

#include "logminor/plane.hpp"

namespace logminor {

/// A d-content value together with the dimension it was computed for.
struct ContentValue {
    double d = 1.0;
    double weight = 0.0;
};

/// Finite family of closed disks acting as a covering witness.
struct DiskCover {
    std::vector<Disk> disks;

    bool covers(std::span<const PlanePoint> points) const;
    bool respects(const std::function<double(PlanePoint)>& radius_bound) const;

    /// Concatenation: a valid witness for the union of the covered sets,
    /// with additive weight.
    static DiskCover concat(const DiskCover& a, const DiskCover& b);
};

/// pi^{d/2} / Gamma(1 + d/2): the d-volume of the unit ball. Equals pi at
/// d = 2 (plane Lebesgue normalization), 2 at d = 1, 1 at d = 0.
double unit_ball_coeff(double d);

/// sum over disks of unit_ball_coeff(d) * radius^d. Throws std::domain_error
/// for d <= 0.
double cover_weight(const DiskCover& cover, double d);

struct ContentEstimate {
    ContentValue value;
    DiskCover cover;
};

/// Certified upper bound for the d-content of a finite point set under a
/// pointwise radius bound: greedy construction that repeatedly centers a
/// disk of maximal admissible radius at the first uncovered point, taking
/// points in order of decreasing admissible radius with lexicographic
/// tie-breaking. The true content (an infimum over all covers) is bounded
/// above by the returned witness weight. Throws std::domain_error if the
/// bound vanishes (or is not finite) at some point.
ContentEstimate content_upper_bound(std::span<const PlanePoint> points, double d,
                                    const std::function<double(PlanePoint)>& radius_bound);

}  // namespace logminor
