#pragma once

#include <optional>
#include <vector>

#include "logminor/content.hpp"
#include "logminor/measure.hpp"

namespace logminor {

/// Finite map z -> t_z of covering radii, one disk D(point, t) per entry.
struct RadiusAssignment {
    struct Entry {
        PlanePoint point;
        double t = 0.0;
    };

    std::vector<Entry> entries;

    DiskCover as_cover() const {
        DiskCover c;
        c.disks.reserve(entries.size());
        for (const Entry& e : entries) c.disks.push_back(Disk{e.point, e.t});
        return c;
    }
};

/// Smallest t in (0, p_z] with t^d <= p_z^d * mu_z_rad(t), or absent when no
/// such t exists. Because the counting function is a step function, the
/// candidate minimizers are exactly the jump radii |a_k - z| in (0, p_z];
/// when an atom sits at z itself any t works in the limit, and the returned
/// convention is min(p_z, smallest positive jump radius, p_z * 2^-20).
/// Absence certifies that z has no covering witness at scale p_z (and hence
/// lies outside the exceptional set). Requires p_z > 0 and d in (0, 2].
std::optional<double> find_bad_radius(const AtomicMassDistribution& mu, PlanePoint z, double p_z,
                                      double d);

/// Greedy selection in decreasing-radius order (ties broken lexicographically
/// by center): a disk is kept iff its center is not contained in any
/// already-selected closed disk. Every input center lies in some selected
/// closed disk, and the selected entries form a subsequence of the sorted
/// input with non-increasing radii.
RadiusAssignment besicovitch_select(const RadiusAssignment& assignment);

/// Number of closed disks of the family containing the probe point.
std::size_t multiplicity(const RadiusAssignment& family, PlanePoint probe);

}  // namespace logminor
