#include <doctest.h>

#include <cmath>
#include <vector>

#include "logminor/potential.hpp"
#include "logminor/rng.hpp"

using namespace logminor;

namespace {

LogPotential potential(double c0, std::initializer_list<Atom> atoms) {
    return LogPotential{c0, AtomicMassDistribution(std::vector<Atom>(atoms))};
}

double ls_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    double xbar = 0.0, ybar = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        xbar += xs[i];
        ybar += ys[i];
    }
    xbar /= static_cast<double>(xs.size());
    ybar /= static_cast<double>(ys.size());
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        num += (xs[i] - xbar) * (ys[i] - ybar);
        den += (xs[i] - xbar) * (xs[i] - xbar);
    }
    return num / den;
}

}  // namespace

TEST_CASE("log potential evaluation") {
    const LogPotential lnz = potential(0.0, {{PlanePoint(0, 0), 1.0}});
    CHECK(lnz.evaluate(PlanePoint(2, 0)) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(lnz.evaluate(PlanePoint(0, 0)) == -std::numeric_limits<double>::infinity());

    const LogPotential shifted = potential(1.0, {{PlanePoint(1, 0), 2.0}});
    CHECK(shifted.evaluate(PlanePoint(3, 0)) ==
          doctest::Approx(1.0 + 2.0 * std::log(2.0)).epsilon(1e-15));
}

TEST_CASE("radial sup") {
    const LogPotential off_center = potential(0.0, {{PlanePoint(1, 0), 1.0}});
    CHECK(radial_sup(off_center, 2.0) == doctest::Approx(std::log(3.0)).epsilon(1e-6));

    const LogPotential centered = potential(0.0, {{PlanePoint(0, 0), 1.0}});
    CHECK(radial_sup(centered, 5.0) == doctest::Approx(std::log(5.0)).epsilon(1e-9));

    SUBCASE("two-atom sup against a dense angular oracle") {
        const LogPotential u = potential(0.0, {{PlanePoint(1, 0), 1.0}, {PlanePoint(-1, 0), 1.0}});
        double brute = -std::numeric_limits<double>::infinity();
        for (int k = 0; k < 1000000; ++k) {
            const double th = 2.0 * M_PI * k / 1000000.0;
            brute = std::max(brute, u.evaluate(PlanePoint(2.0 * std::cos(th), 2.0 * std::sin(th))));
        }
        CHECK(radial_sup(u, 2.0) == doctest::Approx(brute).epsilon(1e-6));
        CHECK(brute == doctest::Approx(std::log(5.0)).epsilon(1e-9));
    }

    SUBCASE("R = 0 degenerates to the center value") {
        CHECK(radial_sup(centered, 0.0) == -std::numeric_limits<double>::infinity());
    }
}

TEST_CASE("radial sup dominates every circle sample") {
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Atom> atoms;
        const int n = rng.uniform_int(1, 8);
        for (int i = 0; i < n; ++i)
            atoms.push_back({PlanePoint(rng.uniform(-2, 2), rng.uniform(-2, 2)),
                             rng.uniform(0.1, 2.0)});
        const LogPotential u{rng.uniform(-1, 1), AtomicMassDistribution(std::move(atoms))};
        const double R = rng.uniform(0.1, 5.0);
        const double sup = radial_sup(u, R);
        for (int k = 0; k < 32; ++k) {
            const double th = rng.uniform(0.0, 2.0 * M_PI);
            CHECK(sup >= u.evaluate(PlanePoint(R * std::cos(th), R * std::sin(th))));
        }
    }
}

TEST_CASE("growth order of radial profiles") {
    SUBCASE("negative constant profile has order exactly zero") {
        const RadialGrowthFunction M{[](double) { return -1.0; }};
        CHECK(order_of_function(M, {10.0, 1e3, 129}) == 0.0);
    }
    SUBCASE("quadratic profile has slope 2") {
        const RadialGrowthFunction M{[](double R) { return R * R; }};
        CHECK(std::abs(order_of_function(M, {10.0, 1e3, 129}) - 2.0) < 0.05);
    }
    SUBCASE("logarithmic profile: windowed slope matches the regression oracle") {
        const RadialGrowthFunction M{[](double R) { return std::log(R); }};
        const ProfileWindow w{10.0, 1e6, 257};
        // Independent regression on the same window.
        std::vector<double> xs, ys;
        for (int i = 0; i < w.samples; ++i) {
            const double lx = std::log(w.t_min) + (std::log(w.t_max) - std::log(w.t_min)) * i /
                                                      (w.samples - 1);
            xs.push_back(lx);
            ys.push_back(std::log1p(std::max(0.0, std::log(std::exp(lx)))));
        }
        const double oracle = ls_slope(xs, ys);
        CHECK(order_of_function(M, w) == doctest::Approx(oracle).epsilon(1e-12));
        // On this window the slope of ln(1 + ln R) sits near 0.13; the
        // order-0 character of logarithmic growth only emerges for wide
        // windows, so that is where the near-zero assertion belongs.
        CHECK(oracle > 0.1);
        CHECK(order_of_function(M, {1e10, 1e100, 257}) < 0.05);
    }
    SUBCASE("log-modulus-of-polynomial profiles flatten on wide windows") {
        for (double degree : {1.0, 2.0, 3.0}) {
            const RadialGrowthFunction M{[degree](double R) { return degree * std::log(R); }};
            CHECK(order_of_function(M, {1e10, 1e100, 257}) < 0.06);
        }
    }
}
