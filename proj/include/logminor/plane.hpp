#pragma once

#include <cmath>
#include <complex>
#include <vector>

namespace logminor {

/// Point of the complex plane.
using PlanePoint = std::complex<double>;

inline bool is_finite(PlanePoint z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Strict lexicographic order on (re, im); the canonical tie-breaker everywhere.
inline bool lex_less(PlanePoint a, PlanePoint b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

/// Closed disk.
struct Disk {
    PlanePoint center;
    double radius = 0.0;

    bool contains(PlanePoint w) const { return std::abs(w - center) <= radius; }

    bool operator==(const Disk&) const = default;
};

/// Rectangular evaluation grid; nx == 1 collapses to x = xmin (same for y).
struct GridSpec {
    double xmin = -2.0, xmax = 2.0;
    double ymin = -2.0, ymax = 2.0;
    int nx = 41, ny = 41;

    std::vector<PlanePoint> points() const {
        std::vector<PlanePoint> out;
        out.reserve(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));
        for (int iy = 0; iy < ny; ++iy) {
            const double y = (ny == 1) ? ymin : ymin + (ymax - ymin) * iy / (ny - 1);
            for (int ix = 0; ix < nx; ++ix) {
                const double x = (nx == 1) ? xmin : xmin + (xmax - xmin) * ix / (nx - 1);
                out.emplace_back(x, y);
            }
        }
        return out;
    }

    bool contains(PlanePoint z) const {
        return z.real() >= xmin && z.real() <= xmax && z.imag() >= ymin && z.imag() <= ymax;
    }

    bool operator==(const GridSpec&) const = default;
};

}  // namespace logminor
