#pragma once

#include "logminor/potential.hpp"

namespace logminor {

enum class MeanKind { circle, disk };

/// Circle mean of u over the circle of radius rho about z. Closed form:
/// c0 + sum_k m_k ln max(|a_k - z|, rho); always finite for rho > 0.
double circle_mean_exact(const LogPotential& u, PlanePoint z, double rho);

/// Per-atom disk-mean kernel:
///   phi(s, rho) = ln s                            for s >= rho,
///   phi(s, rho) = ln rho - 1/2 + s^2/(2 rho^2)    for s <  rho,
/// continuous at s = rho.
double disk_mean_kernel(double s, double rho);

/// Area mean of u over the closed disk of radius rho about z:
/// c0 + sum_k m_k phi(|a_k - z|, rho).
double disk_mean_exact(const LogPotential& u, PlanePoint z, double rho);

struct QuadratureStats {
    int perturbed_nodes = 0;  // nodes that landed on an atom and were nudged
};

/// Independent quadrature oracle for the closed forms. Circle: composite
/// periodic (trapezoidal) rule with n angular nodes. Disk: composite
/// trapezoidal rule in the radius for (2/rho^2) * integral of t * circle_mean(t),
/// composed with the exact circle means at the radial nodes. n is clamped to
/// at least 64. Angular nodes landing exactly on an atom are perturbed by a
/// machine-epsilon-scale angle step and counted in `stats`.
double mean_quadrature(const LogPotential& u, PlanePoint z, double rho, MeanKind kind, int n,
                       QuadratureStats* stats = nullptr);

}  // namespace logminor
