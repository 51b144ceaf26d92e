#include "logminor/radius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace logminor {

namespace {

constexpr double kQInflation = 1e-12;  // keeps (2+|z|)^(-Q) <= r pointwise after refinement slop

template <class F>
double golden_min(F f, double a, double b) {
    const double gr = 0.6180339887498949;
    double x1 = b - gr * (b - a);
    double x2 = a + gr * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int i = 0; i < 200 && (b - a) > 1e-15 * (1.0 + std::abs(a) + std::abs(b)); ++i) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = f(x2);
        }
    }
    return std::min({f(0.5 * (a + b)), f1, f2});
}

double node_x(const GridSpec& g, int ix) {
    return (g.nx == 1) ? g.xmin : g.xmin + (g.xmax - g.xmin) * ix / (g.nx - 1);
}

double node_y(const GridSpec& g, int iy) {
    return (g.ny == 1) ? g.ymin : g.ymin + (g.ymax - g.ymin) * iy / (g.ny - 1);
}

double envelope_value(const RadiusFunction::TabulatedGrid& t, double radius) {
    return radius <= t.env_R ? t.env_c : std::pow(1.0 + radius, -t.env_P);
}

}  // namespace

RadiusFunction RadiusFunction::parametric(double kappa, double q) {
    if (!(kappa > 0.0) || !std::isfinite(kappa))
        throw std::invalid_argument("RadiusFunction: kappa must be positive and finite");
    if (!(q >= 0.0) || !std::isfinite(q))
        throw std::invalid_argument("RadiusFunction: q must be nonnegative and finite");
    return RadiusFunction(Parametric{kappa, q});
}

RadiusFunction RadiusFunction::tabulated(TabulatedGrid grid) {
    const GridSpec& g = grid.grid;
    if (g.nx < 2 || g.ny < 2 || !(g.xmax > g.xmin) || !(g.ymax > g.ymin))
        throw std::invalid_argument("RadiusFunction: tabulated grid needs a nondegenerate box with nx, ny >= 2");
    if (grid.values.size() != static_cast<std::size_t>(g.nx) * static_cast<std::size_t>(g.ny))
        throw std::invalid_argument("RadiusFunction: tabulated value count must equal nx*ny");
    return RadiusFunction(std::move(grid));
}

RadiusFunction RadiusFunction::tabulated_autofit(GridSpec grid, std::vector<double> values) {
    TabulatedGrid t;
    t.grid = grid;
    t.values = std::move(values);
    RadiusFunction shaped = tabulated(std::move(t));  // reuse shape validation
    TabulatedGrid& tab = std::get<TabulatedGrid>(shaped.form_);

    double max_r = 0.0;
    for (int iy = 0; iy < grid.ny; ++iy)
        for (int ix = 0; ix < grid.nx; ++ix)
            max_r = std::max(max_r, std::hypot(node_x(grid, ix), node_y(grid, iy)));

    const double inner = 0.5 * max_r;
    const double calib = 0.8 * max_r;
    double c = std::numeric_limits<double>::infinity();
    double P = 0.0;
    bool have_c = false;
    for (int iy = 0; iy < grid.ny; ++iy) {
        for (int ix = 0; ix < grid.nx; ++ix) {
            const double rad = std::hypot(node_x(grid, ix), node_y(grid, iy));
            const double v = std::min(1.0, tab.values[static_cast<std::size_t>(iy) * grid.nx + ix]);
            if (rad <= inner) {
                c = std::min(c, v);
                have_c = true;
            } else if (rad <= calib && v > 0.0) {
                P = std::max(P, -std::log(v) / std::log(1.0 + rad));
            }
        }
    }
    tab.env_c = have_c ? c : 0.0;
    tab.env_R = inner;
    tab.env_P = std::max(0.0, P);
    return shaped;
}

double RadiusFunction::operator()(PlanePoint z) const {
    if (const Parametric* p = as_parametric())
        return std::min(1.0, p->kappa * std::pow(1.0 + std::abs(z), -p->q));

    const TabulatedGrid& t = *as_tabulated();
    const GridSpec& g = t.grid;
    if (!g.contains(z)) return std::min(1.0, envelope_value(t, std::abs(z)));

    const double fx = (z.real() - g.xmin) / (g.xmax - g.xmin) * (g.nx - 1);
    const double fy = (z.imag() - g.ymin) / (g.ymax - g.ymin) * (g.ny - 1);
    const int ix = std::clamp(static_cast<int>(fx), 0, g.nx - 2);
    const int iy = std::clamp(static_cast<int>(fy), 0, g.ny - 2);
    const double ax = std::clamp(fx - ix, 0.0, 1.0);
    const double ay = std::clamp(fy - iy, 0.0, 1.0);
    auto val = [&](int i, int j) { return t.values[static_cast<std::size_t>(j) * g.nx + i]; };
    const double v = (1 - ax) * (1 - ay) * val(ix, iy) + ax * (1 - ay) * val(ix + 1, iy) +
                     (1 - ax) * ay * val(ix, iy + 1) + ax * ay * val(ix + 1, iy + 1);
    return std::min(1.0, v);
}

double RadiusFunction::circle_sup(double R, int n_samples) const {
    if (!(R >= 0.0)) throw std::domain_error("circle_sup: R must be nonnegative");
    if (const Parametric* p = as_parametric())
        return std::min(1.0, p->kappa * std::pow(1.0 + R, -p->q));
    double best = -std::numeric_limits<double>::infinity();
    const int n = std::max(16, n_samples);
    for (int k = 0; k < n; ++k) {
        const double th = 2.0 * M_PI * k / n;
        best = std::max(best, (*this)(PlanePoint(R * std::cos(th), R * std::sin(th))));
    }
    return best;
}

namespace {

RadiusCheck check_parametric(const RadiusFunction::Parametric& p) {
    RadiusCheck out;
    out.passes = true;
    auto g = [&p](double x) {
        return std::log(std::min(1.0, p.kappa * std::pow(1.0 + x, -p.q))) / std::log(2.0 + x);
    };
    if (p.q == 0.0) {
        const double v = std::min(1.0, p.kappa);
        out.inf_estimate = (v < 1.0) ? std::log(v) / std::log(2.0) : 0.0;
        out.Q = std::max(0.0, -out.inf_estimate) * (1.0 + kQInflation);
        return out;
    }

    // Interior scan over a log grid, refined around the best bracket; the
    // exact x -> infinity limit of ln r / ln(2+|z|) is -q.
    double best = g(0.0);
    double best_x = 0.0;
    const int n = 2048;
    const double lx0 = std::log(1e-8);
    const double lx1 = std::log(1e10);
    for (int i = 0; i < n; ++i) {
        const double x = std::exp(lx0 + (lx1 - lx0) * i / (n - 1));
        const double v = g(x);
        if (v < best) {
            best = v;
            best_x = x;
        }
    }
    const double step = std::exp((lx1 - lx0) / (n - 1));
    best = std::min(best, golden_min(g, best_x / (step * step), best_x * step * step));
    out.inf_estimate = std::min(best, -p.q);
    out.Q = std::max(0.0, -out.inf_estimate) * (1.0 + kQInflation);
    return out;
}

RadiusCheck check_tabulated(const RadiusFunction::TabulatedGrid& t) {
    const GridSpec& g = t.grid;
    for (double v : t.values)
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::domain_error("check_radius_condition: tabulated grid value must be positive");

    RadiusCheck out;
    const bool env_sane = t.env_c > 0.0 && std::isfinite(t.env_c) && t.env_P >= 0.0 &&
                          std::isfinite(t.env_P) && t.env_R >= 0.0 && std::isfinite(t.env_R);

    int violations = 0;
    double worst_rad = 0.0;
    double inf_nodes = std::numeric_limits<double>::infinity();
    auto val = [&](int ix, int iy) {
        return std::min(1.0, t.values[static_cast<std::size_t>(iy) * g.nx + ix]);
    };
    for (int iy = 0; iy < g.ny; ++iy) {
        for (int ix = 0; ix < g.nx; ++ix) {
            const double rad = std::hypot(node_x(g, ix), node_y(g, iy));
            const double v = val(ix, iy);
            inf_nodes = std::min(inf_nodes, std::log(v) / std::log(2.0 + rad));
            if (env_sane && v < envelope_value(t, rad) * (1.0 - 1e-12)) {
                ++violations;
                worst_rad = std::max(worst_rad, rad);
            }
        }
    }
    out.passes = env_sane && violations == 0;
    out.inf_estimate = std::min(inf_nodes, -t.env_P);
    if (!env_sane)
        out.note = "recorded envelope constants are unusable";
    else if (violations > 0)
        out.note = std::to_string(violations) + " nodes fall below the recorded envelope (outermost at |z|=" +
                   std::to_string(worst_rad) + ")";

    // Least Q with (2+|z|)^(-Q) <= r everywhere: inside the box the bilinear
    // value on a cell is at least the smallest corner, while the right-hand
    // side peaks at the cell point closest to the origin; outside, the value
    // is the recorded envelope.
    double q_need = 0.0;
    for (int iy = 0; iy + 1 < g.ny; ++iy) {
        for (int ix = 0; ix + 1 < g.nx; ++ix) {
            const double vmin = std::min({val(ix, iy), val(ix + 1, iy), val(ix, iy + 1), val(ix + 1, iy + 1)});
            if (vmin >= 1.0) continue;
            const double cx = std::clamp(0.0, node_x(g, ix), node_x(g, ix + 1));
            const double cy = std::clamp(0.0, node_y(g, iy), node_y(g, iy + 1));
            q_need = std::max(q_need, -std::log(vmin) / std::log(2.0 + std::hypot(cx, cy)));
        }
    }
    if (env_sane) {
        double d_out = 0.0;  // smallest |z| outside the box
        if (g.contains(PlanePoint(0.0, 0.0)))
            d_out = std::min({-g.xmin, g.xmax, -g.ymin, g.ymax});
        const double c_val = std::min(1.0, t.env_c);
        if (t.env_R >= d_out && c_val < 1.0)
            q_need = std::max(q_need, -std::log(c_val) / std::log(2.0 + d_out));
        q_need = std::max(q_need, t.env_P);
    }
    out.Q = q_need * (1.0 + kQInflation);
    return out;
}

}  // namespace

RadiusCheck check_radius_condition(const RadiusFunction& r) {
    if (const auto* p = r.as_parametric()) return check_parametric(*p);
    return check_tabulated(*r.as_tabulated());
}

}  // namespace logminor
