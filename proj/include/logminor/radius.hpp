#pragma once

#include <string>
#include <variant>
#include <vector>

#include "logminor/plane.hpp"

namespace logminor {

/// Admissible covering-radius function r: C -> (0, 1].
///
/// Two forms:
///  - parametric: r(z) = min(1, kappa (1+|z|)^(-q)), whose admissibility
///    (finite infimum of ln r(z) / ln(2+|z|)) holds by construction;
///  - tabulated: bilinear grid over a bounding box with a recorded lower
///    envelope (constants c, R, P): r >= c on |z| <= R and
///    r >= (1+|z|)^(-P) beyond. Off the box the envelope itself is the value.
class RadiusFunction {
public:
    struct Parametric {
        double kappa = 1.0;
        double q = 0.0;

        bool operator==(const Parametric&) const = default;
    };

    struct TabulatedGrid {
        GridSpec grid;               // bounding box, node counts (nx, ny >= 2)
        std::vector<double> values;  // row-major, ny rows of nx
        double env_c = 0.0;          // recorded envelope constants
        double env_R = 0.0;
        double env_P = 0.0;

        bool operator==(const TabulatedGrid&) const = default;
    };

    static RadiusFunction parametric(double kappa, double q);
    static RadiusFunction constant(double value) { return parametric(value, 0.0); }
    static RadiusFunction tabulated(TabulatedGrid grid);

    /// Tabulated form whose envelope constants are fitted on the inner part
    /// of the grid (|z| up to 80% of the outermost node), leaving the
    /// boundary band to be audited against the recorded decay trend by
    /// check_radius_condition.
    static RadiusFunction tabulated_autofit(GridSpec grid, std::vector<double> values);

    double operator()(PlanePoint z) const;

    /// sup of r over the circle |z| = R; exact for the parametric form.
    double circle_sup(double R, int n_samples = 256) const;

    bool is_parametric() const { return std::holds_alternative<Parametric>(form_); }
    const Parametric* as_parametric() const { return std::get_if<Parametric>(&form_); }
    const TabulatedGrid* as_tabulated() const { return std::get_if<TabulatedGrid>(&form_); }

    bool operator==(const RadiusFunction&) const = default;

private:
    explicit RadiusFunction(std::variant<Parametric, TabulatedGrid> form) : form_(std::move(form)) {}

    std::variant<Parametric, TabulatedGrid> form_;
};

struct RadiusCheck {
    bool passes = false;
    double Q = 0.0;            // least Q >= 0 with (2+|z|)^(-Q) <= r(z) everywhere
    double inf_estimate = 0.0; // inf of ln r(z) / ln(2+|z|)
    std::string note;
};

/// Admissibility check. Parametric: infimum from the exact endpoint/limit
/// values plus a scanned-and-refined interior minimum. Tabulated: audits
/// every node against the recorded envelope (failures are reported in the
/// note, concentrated at the box boundary when the table decays faster than
/// any power). Throws std::domain_error for a tabulated grid with a zero or
/// negative value.
RadiusCheck check_radius_condition(const RadiusFunction& r);

}  // namespace logminor
