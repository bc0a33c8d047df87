#include "superconic/cubic.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>

#include "superconic/errors.hpp"

namespace superconic {

const char* to_string(LambdaBranch b) noexcept {
    switch (b) {
        case LambdaBranch::PositiveDisc: return "single";
        case LambdaBranch::TrigA: return "trigA";
        case LambdaBranch::TrigB: return "trigB";
        case LambdaBranch::TrigC: return "trigC";
    }
    return "?";
}

CubicClassification classify(double a, double b, double c, double d) {
    if (a == 0.0) throw Error(Errc::DegenerateCubic, "classify: leading coefficient is zero");
    CubicClassification cls;
    cls.q = (3.0 * a * c - b * b) / (3.0 * a * a);
    cls.r = (9.0 * a * b * c - 27.0 * a * a * d - 2.0 * b * b * b) / (27.0 * a * a * a);
    cls.disc = cls.r * cls.r + (4.0 / 27.0) * cls.q * cls.q * cls.q;

    // Boundary band around disc = 0. At a double root disc is a complete
    // cancellation of r^2 against -(4/27)q^3, so its computed value can sit
    // many decades below the term scale; a genuinely different root regime is
    // of the order of the term scale itself. A relative band plus a rounding
    // model for q and r separates the two cleanly.
    const double a2 = a * a, a3 = std::abs(a2 * a);
    const double q_scale = (3.0 * std::abs(a * c) + b * b) / (3.0 * a2);
    const double r_scale =
        (9.0 * std::abs(a * b * c) + 27.0 * a2 * std::abs(d) + 2.0 * std::abs(b * b * b)) /
        (27.0 * a3);
    const double disc_mag = cls.r * cls.r + (4.0 / 27.0) * std::abs(cls.q * cls.q * cls.q);
    cls.disc_tol = 1e-8 * disc_mag +
                   64.0 * DBL_EPSILON *
                       (2.0 * std::abs(cls.r) * r_scale +
                        (4.0 / 9.0) * cls.q * cls.q * q_scale) +
                   DBL_MIN;

    if (cls.q <= 0.0) {
        cls.rho = std::sqrt(-cls.q * cls.q * cls.q / 27.0);
        if (cls.rho > 0.0) {
            const double ct = std::clamp(cls.r / (2.0 * cls.rho), -1.0, 1.0);
            cls.theta = std::acos(ct);
        }
    }
    return cls;
}

double cubic_root(const CubicClassification& cls, LambdaBranch branch, double a, double b) {
    const double base = -b / (3.0 * a);
    const double tol = cls.disc_tol;

    if (branch == LambdaBranch::PositiveDisc) {
        if (cls.disc < -tol)
            throw Error(Errc::InvalidBranch, "cubic_root: single-root form needs disc >= 0");
        const double s = std::sqrt(std::max(cls.disc, 0.0));
        return base + std::cbrt((cls.r + s) / 2.0) + std::cbrt((cls.r - s) / 2.0);
    }

    if (cls.disc > tol)
        throw Error(Errc::InvalidBranch, "cubic_root: trig forms need disc <= 0");
    const double third = 1.0 / 3.0;
    double ang = cls.theta;
    switch (branch) {
        case LambdaBranch::TrigA: break;
        case LambdaBranch::TrigB: ang -= 2.0 * std::numbers::pi; break;
        case LambdaBranch::TrigC: ang += 2.0 * std::numbers::pi; break;
        default: break;
    }
    return base + 2.0 * std::cbrt(cls.rho) * std::cos(ang * third);
}

}  // namespace superconic
