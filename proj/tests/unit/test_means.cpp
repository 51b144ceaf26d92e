#include <doctest.h>

#include <cmath>
#include <vector>

#include "logminor/means.hpp"
#include "logminor/potential.hpp"
#include "logminor/rng.hpp"

using namespace logminor;

namespace {

LogPotential potential(double c0, std::initializer_list<Atom> atoms) {
    return LogPotential{c0, AtomicMassDistribution(std::vector<Atom>(atoms))};
}

struct Fixture {
    LogPotential u;
    PlanePoint z;
    double rho = 0.0;
};

// Random (u, z, rho) with z at least 1e-3 from every atom and every atom
// distance at least 1e-2 away from the circle radius (the kink guard under
// which the closed-form comparisons are exact and the quadrature contract
// applies).
Fixture random_fixture(Rng& rng) {
    for (;;) {
        std::vector<Atom> atoms;
        const int n = rng.uniform_int(1, 20);
        for (int i = 0; i < n; ++i)
            atoms.push_back({PlanePoint(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)),
                             3.0 * (1.0 - rng.uniform())});
        LogPotential u{rng.uniform(-1, 1), AtomicMassDistribution(std::move(atoms))};
        const PlanePoint z(rng.uniform(-2, 2), rng.uniform(-2, 2));
        bool z_ok = true;
        for (const Atom& a : u.measure.atoms())
            if (std::abs(a.center - z) < 1e-3) z_ok = false;
        if (!z_ok) continue;
        for (int tries = 0; tries < 64; ++tries) {
            const double rho = rng.uniform(0.05, 1.0);
            bool rho_ok = true;
            for (const Atom& a : u.measure.atoms())
                if (std::abs(std::abs(a.center - z) - rho) < 1e-2) rho_ok = false;
            if (rho_ok) return Fixture{std::move(u), z, rho};
        }
    }
}

}  // namespace

TEST_CASE("circle mean closed form") {
    const LogPotential lnz = potential(0.0, {{PlanePoint(0, 0), 1.0}});
    CHECK(circle_mean_exact(lnz, PlanePoint(0, 0), 1.0) == 0.0);  // Jensen mean over the unit circle
    CHECK(circle_mean_exact(lnz, PlanePoint(2, 0), 1.0) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(circle_mean_exact(lnz, PlanePoint(0.5, 0), 1.0) == 0.0);
    CHECK_THROWS_AS(circle_mean_exact(lnz, PlanePoint(0, 0), 0.0), std::domain_error);
}

TEST_CASE("disk mean closed form") {
    const LogPotential lnz = potential(0.0, {{PlanePoint(0, 0), 1.0}});
    CHECK(disk_mean_exact(lnz, PlanePoint(0, 0), 1.0) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(disk_mean_exact(lnz, PlanePoint(3, 0), 1.0) ==
          doctest::Approx(std::log(3.0)).epsilon(1e-15));
    CHECK(disk_mean_exact(lnz, PlanePoint(0, 0), std::exp(1.0)) ==
          doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("quadrature oracle agrees with the closed forms") {
    const LogPotential lnz = potential(0.0, {{PlanePoint(0, 0), 1.0}});
    CHECK(std::abs(mean_quadrature(lnz, PlanePoint(0, 0), 1.0, MeanKind::circle, 4096)) < 1e-6);
    CHECK(std::abs(mean_quadrature(lnz, PlanePoint(0, 0), 1.0, MeanKind::disk, 4096) + 0.5) < 1e-4);

    const LogPotential two = potential(0.0, {{PlanePoint(1, 0), 1.0}, {PlanePoint(-1, 0), 1.0}});
    const PlanePoint z(0.3, 0);
    const double quad = mean_quadrature(two, z, 0.5, MeanKind::circle, 8192);
    CHECK(std::abs(quad - circle_mean_exact(two, z, 0.5)) < 1e-6);
}

TEST_CASE("quadrature notes nodes that hit an atom") {
    // Atom exactly on the circle at angle 0.
    const LogPotential u = potential(0.0, {{PlanePoint(1, 0), 1.0}});
    QuadratureStats stats;
    const double v = mean_quadrature(u, PlanePoint(0, 0), 1.0, MeanKind::circle, 64, &stats);
    CHECK(std::isfinite(v));
    CHECK(stats.perturbed_nodes == 1);
}

TEST_CASE("mean inequality chain holds term-exactly off the kink") {
    Rng rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const Fixture fx = random_fixture(rng);
        const double uv = fx.u.evaluate(fx.z);
        const double dm = disk_mean_exact(fx.u, fx.z, fx.rho);
        const double cm = circle_mean_exact(fx.u, fx.z, fx.rho);
        CHECK(uv <= dm);  // zero tolerance
        CHECK(dm <= cm);  // zero tolerance
        CHECK(cm <= circle_sup(fx.u, fx.z, fx.rho, 2048, true) + 1e-9);
    }
}

TEST_CASE("Jensen identity: circle mean minus value equals the defect") {
    Rng rng(123);
    for (int trial = 0; trial < 200; ++trial) {
        const Fixture fx = random_fixture(rng);
        const double uv = fx.u.evaluate(fx.z);
        const double cm = circle_mean_exact(fx.u, fx.z, fx.rho);
        double defect = 0.0;
        for (const Atom& a : fx.u.measure.atoms()) {
            const double s = std::abs(a.center - fx.z);
            if (s <= fx.rho) defect += a.mass * std::log(fx.rho / s);
        }
        CHECK(std::abs((cm - uv) - defect) <=
              1e-12 * std::max({1.0, std::abs(cm), std::abs(uv), defect}));
    }
}

TEST_CASE("harmonicity: no atom in the closed disk gives exact equality") {
    Rng rng(321);
    for (int trial = 0; trial < 100; ++trial) {
        const Fixture fx = random_fixture(rng);
        double nearest = std::numeric_limits<double>::infinity();
        for (const Atom& a : fx.u.measure.atoms())
            nearest = std::min(nearest, std::abs(a.center - fx.z));
        if (nearest <= fx.rho) continue;
        CHECK(disk_mean_exact(fx.u, fx.z, fx.rho) == fx.u.evaluate(fx.z));
        CHECK(circle_mean_exact(fx.u, fx.z, fx.rho) == fx.u.evaluate(fx.z));
    }
}
