#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "logminor/covering.hpp"
#include "logminor/rng.hpp"

using namespace logminor;

namespace {

AtomicMassDistribution make(std::initializer_list<Atom> atoms) {
    return AtomicMassDistribution(std::vector<Atom>(atoms));
}

// Brute-force oracle: smallest jump radius in (0, p_z] satisfying the
// defect inequality, scanning the sorted radii directly.
std::optional<double> brute_bad_radius(const AtomicMassDistribution& mu, PlanePoint z, double p_z,
                                       double d) {
    std::vector<double> radii;
    for (const Atom& a : mu.atoms()) {
        const double s = std::abs(a.center - z);
        if (s > 0.0 && s <= p_z) radii.push_back(s);
    }
    std::sort(radii.begin(), radii.end());
    for (double t : radii)
        if (std::pow(t, d) <= std::pow(p_z, d) * mu.radial_count(z, t)) return t;
    return std::nullopt;
}

}  // namespace

TEST_CASE("bad radius at the spec fixtures") {
    const auto unit_origin = make({{PlanePoint(0, 0), 1.0}});
    const auto near = find_bad_radius(unit_origin, PlanePoint(1e-3, 0), 0.5, 1.0);
    REQUIRE(near.has_value());
    CHECK(*near == doctest::Approx(1e-3).epsilon(1e-15));

    CHECK_FALSE(find_bad_radius(unit_origin, PlanePoint(0.6, 0), 0.5, 1.0).has_value());

    const auto light = make({{PlanePoint(0, 0), 0.1}});
    CHECK_FALSE(find_bad_radius(light, PlanePoint(0.2, 0), 0.25, 2.0).has_value());
}

TEST_CASE("bad radius convention when an atom sits at the point itself") {
    const auto mu = make({{PlanePoint(0, 0), 1.0}});
    const auto t = find_bad_radius(mu, PlanePoint(0, 0), 0.5, 1.0);
    REQUIRE(t.has_value());
    CHECK(*t == doctest::Approx(std::ldexp(0.5, -20)).epsilon(1e-15));

    // A closer positive jump wins the min.
    const auto crowded = make({{PlanePoint(0, 0), 1.0}, {PlanePoint(1e-9, 0), 1.0}});
    const auto t2 = find_bad_radius(crowded, PlanePoint(0, 0), 0.5, 1.0);
    REQUIRE(t2.has_value());
    CHECK(*t2 == doctest::Approx(1e-9).epsilon(1e-12));
}

TEST_CASE("bad radius equals the brute-force smallest candidate") {
    Rng rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Atom> atoms;
        const int n = rng.uniform_int(1, 15);
        for (int i = 0; i < n; ++i)
            atoms.push_back({PlanePoint(rng.uniform(-1, 1), rng.uniform(-1, 1)),
                             rng.uniform(0.05, 2.0)});
        const AtomicMassDistribution mu{std::move(atoms)};
        const PlanePoint z(rng.uniform(-1, 1), rng.uniform(-1, 1));
        const double p_z = rng.uniform(0.01, 1.0);
        const double d = rng.uniform(0.2, 2.0);
        const auto got = find_bad_radius(mu, z, p_z, d);
        const auto expect = brute_bad_radius(mu, z, p_z, d);
        CHECK(got == expect);
    }
}

TEST_CASE("bad radius preconditions") {
    const auto mu = make({{PlanePoint(0, 0), 1.0}});
    CHECK_THROWS_AS(find_bad_radius(mu, PlanePoint(0, 0), 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(find_bad_radius(mu, PlanePoint(0, 0), 0.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(find_bad_radius(mu, PlanePoint(0, 0), 0.5, 2.5), std::domain_error);
}

TEST_CASE("greedy selection keeps a covering subfamily") {
    RadiusAssignment family;
    family.entries = {{PlanePoint(0, 0), 1.0}, {PlanePoint(0.1, 0), 1.0}, {PlanePoint(3, 0), 1.0}};
    const RadiusAssignment sel = besicovitch_select(family);
    REQUIRE(sel.entries.size() == 2);
    CHECK(sel.entries[0].point == PlanePoint(0, 0));
    CHECK(sel.entries[1].point == PlanePoint(3, 0));
    for (const auto& e : family.entries) CHECK(multiplicity(sel, e.point) >= 1);

    RadiusAssignment single;
    single.entries = {{PlanePoint(2, 2), 0.3}};
    CHECK(besicovitch_select(single).entries.size() == 1);
}

TEST_CASE("selection over a random assignment: coverage, overlap, ordering") {
    Rng rng(57);
    RadiusAssignment family;
    for (int i = 0; i < 1000; ++i)
        family.entries.push_back({PlanePoint(rng.uniform(), rng.uniform()),
                                  rng.uniform(0.01, 0.05)});
    const RadiusAssignment sel = besicovitch_select(family);

    for (const auto& e : family.entries) CHECK(multiplicity(sel, e.point) >= 1);

    std::size_t worst = 0;
    for (int i = 0; i < 10000; ++i) {
        const PlanePoint probe(rng.uniform(-0.06, 1.06), rng.uniform(-0.06, 1.06));
        worst = std::max(worst, multiplicity(sel, probe));
    }
    CHECK(worst <= 19);

    for (std::size_t i = 1; i < sel.entries.size(); ++i)
        CHECK(sel.entries[i].t <= sel.entries[i - 1].t);
}

TEST_CASE("pointwise multiplicity") {
    CHECK(multiplicity(RadiusAssignment{}, PlanePoint(0, 0)) == 0);

    RadiusAssignment concentric;
    concentric.entries = {{PlanePoint(0, 0), 1.0}, {PlanePoint(0, 0), 2.0}};
    CHECK(multiplicity(concentric, PlanePoint(0, 0)) == 2);

    RadiusAssignment star;
    for (int k = 0; k < 5; ++k) {
        const double th = 2.0 * M_PI * k / 5.0;
        star.entries.push_back({PlanePoint(0.5 * std::cos(th), 0.5 * std::sin(th)), 0.6});
    }
    CHECK(multiplicity(star, PlanePoint(0, 0)) == 5);
}
