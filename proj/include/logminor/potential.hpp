#pragma once

#include <functional>

#include "logminor/measure.hpp"

namespace logminor {

/// Subharmonic function of log-potential form,
///   u(z) = c0 + sum_k m_k ln|z - a_k|,
/// whose Riesz measure is exactly `measure`. Value is -infinity precisely on
/// the atom centers and finite elsewhere.
struct LogPotential {
    double c0 = 0.0;
    AtomicMassDistribution measure;

    double evaluate(PlanePoint z) const;
    double operator()(PlanePoint z) const { return evaluate(z); }

    bool operator==(const LogPotential&) const = default;
};

/// sup of u over the circle |w - center| = rho, from n angular samples with
/// optional golden-section refinement around the best sample. rho = 0
/// degenerates to evaluation at the center.
double circle_sup(const LogPotential& u, PlanePoint center, double rho, int n_samples = 720,
                  bool refine = true);

/// Radial growth value M_u(R) = sup_{|z| = R} u(z).
double radial_sup(const LogPotential& u, double R, int n_samples = 720, bool refine = true);

/// Radial growth profile R -> M(R); values may be -infinity.
struct RadialGrowthFunction {
    std::function<double(double)> profile;

    double operator()(double R) const { return profile(R); }
};

RadialGrowthFunction radial_growth(const LogPotential& u, int n_samples = 720, bool refine = true);

/// Windowed growth-order estimate of M (regression slope of ln(1 + M^+(R))
/// on ln R); see growth_order for the window contract.
double order_of_function(const RadialGrowthFunction& M, const ProfileWindow& window);

}  // namespace logminor
