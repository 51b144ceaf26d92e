#include "logminor/content.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace logminor {

bool DiskCover::covers(std::span<const PlanePoint> points) const {
    for (PlanePoint p : points) {
        bool hit = false;
        for (const Disk& dsk : disks) {
            if (dsk.contains(p)) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

bool DiskCover::respects(const std::function<double(PlanePoint)>& radius_bound) const {
    for (const Disk& dsk : disks)
        if (!(dsk.radius <= radius_bound(dsk.center))) return false;
    return true;
}

DiskCover DiskCover::concat(const DiskCover& a, const DiskCover& b) {
    DiskCover out = a;
    out.disks.insert(out.disks.end(), b.disks.begin(), b.disks.end());
    return out;
}

double unit_ball_coeff(double d) {
    if (!(d >= 0.0)) throw std::domain_error("unit_ball_coeff: d must be nonnegative");
    return std::pow(M_PI, 0.5 * d) / std::tgamma(1.0 + 0.5 * d);
}

double cover_weight(const DiskCover& cover, double d) {
    if (!(d > 0.0)) throw std::domain_error("cover_weight: d must be positive");
    const double coeff = unit_ball_coeff(d);
    double sum = 0.0;
    for (const Disk& dsk : cover.disks) sum += coeff * std::pow(dsk.radius, d);
    return sum;
}

ContentEstimate content_upper_bound(std::span<const PlanePoint> points, double d,
                                    const std::function<double(PlanePoint)>& radius_bound) {
    if (!(d > 0.0)) throw std::domain_error("content_upper_bound: d must be positive");

    const std::size_t n = points.size();
    std::vector<double> radius(n);
    for (std::size_t i = 0; i < n; ++i) {
        radius[i] = radius_bound(points[i]);
        if (!(radius[i] > 0.0) || !std::isfinite(radius[i]))
            throw std::domain_error("content_upper_bound: radius bound must be positive at every point");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (radius[a] != radius[b]) return radius[a] > radius[b];
        return lex_less(points[a], points[b]);
    });

    DiskCover cover;
    std::vector<bool> covered(n, false);
    for (std::size_t idx : order) {
        if (covered[idx]) continue;
        const Disk dsk{points[idx], radius[idx]};
        cover.disks.push_back(dsk);
        for (std::size_t j = 0; j < n; ++j)
            if (!covered[j] && dsk.contains(points[j])) covered[j] = true;
    }
    return ContentEstimate{ContentValue{d, cover_weight(cover, d)}, std::move(cover)};
}

}  // namespace logminor
