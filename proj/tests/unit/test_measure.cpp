#include <doctest.h>

#include <cmath>
#include <vector>

#include "logminor/measure.hpp"
#include "logminor/rng.hpp"

using namespace logminor;

namespace {

AtomicMassDistribution make(std::initializer_list<Atom> atoms) {
    return AtomicMassDistribution(std::vector<Atom>(atoms));
}

// Direct summation, independent of the sorted-prefix fast path.
double brute_radial_count(const AtomicMassDistribution& mu, PlanePoint z, double t) {
    double sum = 0.0;
    for (const Atom& a : mu.atoms())
        if (std::abs(a.center - z) <= t) sum += a.mass;
    return sum;
}

AtomicMassDistribution random_measure(Rng& rng, int max_atoms) {
    const int n = rng.uniform_int(1, max_atoms);
    std::vector<Atom> atoms;
    for (int i = 0; i < n; ++i)
        atoms.push_back(Atom{PlanePoint(rng.uniform(-2, 2), rng.uniform(-2, 2)),
                             rng.uniform(0.01, 3.0)});
    return AtomicMassDistribution(std::move(atoms));
}

}  // namespace

TEST_CASE("radial counting function") {
    const auto one = make({{PlanePoint(0, 0), 1.0}});
    CHECK(one.radial_count(PlanePoint(0, 0), 0.0) == 1.0);  // closed disk holds its center atom
    CHECK(one.radial_count(PlanePoint(0.5, 0), 0.25) == 0.0);

    const auto two = make({{PlanePoint(0, 0), 1.0}, {PlanePoint(1, 0), 2.0}});
    CHECK(two.radial_count(PlanePoint(0, 0), 1.0) == 3.0);
    CHECK(two.radial_count(PlanePoint(0, 0), 1.0) ==
          brute_radial_count(two, PlanePoint(0, 0), 1.0));

    CHECK_THROWS_AS(one.radial_count(PlanePoint(0, 0), -0.1), std::domain_error);
    CHECK_THROWS_AS(one.radial_count(-1.0), std::domain_error);
}

TEST_CASE("duplicate centers merge and invalid atoms are rejected") {
    const auto merged = make({{PlanePoint(1, 1), 0.5}, {PlanePoint(1, 1), 1.5}});
    CHECK(merged.size() == 1);
    CHECK(merged.total_mass() == 2.0);

    CHECK_THROWS_AS(make({{PlanePoint(0, 0), 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(make({{PlanePoint(0, 0), -1.0}}), std::invalid_argument);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(make({{PlanePoint(inf, 0), 1.0}}), std::invalid_argument);
}

TEST_CASE("radial count is monotone in t and right-continuous at jumps") {
    Rng rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const auto mu = random_measure(rng, 12);
        const PlanePoint z(rng.uniform(-2, 2), rng.uniform(-2, 2));
        double t1 = rng.uniform(0.0, 4.0);
        double t2 = rng.uniform(0.0, 4.0);
        if (t1 > t2) std::swap(t1, t2);
        CHECK(mu.radial_count(z, t1) <= mu.radial_count(z, t2));
    }

    // The jump radius itself carries the atom (closed disk).
    const auto mu = make({{PlanePoint(3, 4), 2.0}});
    const double jump = std::abs(PlanePoint(3, 4));
    CHECK(mu.radial_count(jump) == 2.0);
    CHECK(mu.radial_count(std::nextafter(jump, 0.0)) == 0.0);
}

TEST_CASE("growth order of a measure") {
    SUBCASE("constant profile on the window is exactly zero") {
        const auto mu = make({{PlanePoint(0, 0), 5.0}});
        CHECK(std::abs(order_of_measure(mu, {10.0, 1e4, 257})) <= 1e-12);
    }
    SUBCASE("atoms at |a_k| = k give slope 1") {
        std::vector<Atom> atoms;
        for (int k = 1; k <= 10000; ++k) atoms.push_back({PlanePoint(k, 0), 1.0});
        const AtomicMassDistribution mu{std::move(atoms)};
        CHECK(std::abs(order_of_measure(mu, {10.0, 1e4, 257}) - 1.0) < 0.05);
    }
    SUBCASE("atoms at |a_k| = k^2 give slope 1/2") {
        std::vector<Atom> atoms;
        for (int k = 1; k <= 1000; ++k)
            atoms.push_back({PlanePoint(static_cast<double>(k) * k, 0), 1.0});
        const AtomicMassDistribution mu{std::move(atoms)};
        CHECK(std::abs(order_of_measure(mu, {100.0, 1e6, 257}) - 0.5) < 0.05);
    }
    SUBCASE("empty window throws") {
        const auto mu = make({{PlanePoint(0, 0), 1.0}});
        CHECK_THROWS_AS(order_of_measure(mu, {10.0, 10.0, 64}), std::domain_error);
        CHECK_THROWS_AS(order_of_measure(mu, {0.0, 10.0, 64}), std::domain_error);
    }
}

TEST_CASE("growth envelope fit") {
    SUBCASE("ratios at jump radii") {
        const auto mu = make({{PlanePoint(0, 0), 1.0}, {PlanePoint(1, 0), 1.0}, {PlanePoint(2, 0), 1.0}});
        CHECK(fit_growth_envelope(mu, 1.0).C == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("single jump") {
        const auto mu = make({{PlanePoint(0, 0), 5.0}});
        CHECK(fit_growth_envelope(mu, 0.0).C == 5.0);
    }
    SUBCASE("empty measure floors at 1") {
        CHECK(fit_growth_envelope(AtomicMassDistribution{}, 2.0).C == 1.0);
    }
    SUBCASE("negative l throws") {
        CHECK_THROWS_AS(fit_growth_envelope(AtomicMassDistribution{}, -1.0), std::domain_error);
    }
}

TEST_CASE("fitted envelope is valid and matches a dense brute-force scan") {
    Rng rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        const auto mu = random_measure(rng, 20);
        const double l = rng.uniform(0.0, 2.0);
        const GrowthEnvelope env = fit_growth_envelope(mu, l);
        REQUIRE(env.C >= 1.0);

        for (int i = 0; i < 400; ++i) {
            const double t = rng.uniform(0.0, 2.0 * mu.max_center_radius() + 1.0);
            CHECK(mu.radial_count(t) <= env.C * std::pow(1.0 + t, l));
        }

        // Dense grid plus the exact jump radii, with brute-force counting.
        double brute = mu.radial_count(0.0);
        const double hi = 1.2 * mu.max_center_radius() + 1e-9;
        for (int i = 0; i <= 20000; ++i) {
            const double t = hi * i / 20000.0;
            brute = std::max(brute, brute_radial_count(mu, PlanePoint(0, 0), t) / std::pow(1.0 + t, l));
        }
        for (const Atom& a : mu.atoms()) {
            const double t = std::abs(a.center);
            brute = std::max(brute, brute_radial_count(mu, PlanePoint(0, 0), t) / std::pow(1.0 + t, l));
        }
        brute = std::max(1.0, brute);
        CHECK(std::abs(env.C - brute) <= 1e-12 * brute);
    }
}
