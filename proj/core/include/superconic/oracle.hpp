#pragma once

#include <array>
#include <span>
#include <vector>

#include "superconic/oval.hpp"
#include "superconic/solution.hpp"

namespace superconic {

// Verification utilities that deliberately avoid the resolvent-cubic pipeline.
// They depend on the oval coefficients only, so agreement with the closed-form
// evaluation is evidence rather than tautology.

// Expanded oval quartic at fixed y, ascending powers of x:
//   b2^2 x^4 + 2 b2 b1 x^3 + (b1^2 + 2 b2 b0 - a2) x^2 + (2 b1 b0 - a1) x + (b0^2 - a0)
struct QuarticPoly {
    std::array<double, 5> c{};  // c[i] multiplies x^i
    double at(double x) const noexcept {
        return (((c[4] * x + c[3]) * x + c[2]) * x + c[1]) * x + c[0];
    }
    double scale_at(double x) const noexcept;
};

QuarticPoly quartic_poly(const OvalParams& p, double y);

// All real roots in x, ascending, found by a sign-change scan over the
// coefficient-bound interval with bisection, plus a deflation check for
// even-multiplicity roots the scan cannot see.
std::vector<double> quartic_roots_numeric(const OvalParams& p, double y);

// Follows the quartic root branch through the origin along ascending ys
// (ys[0] must be 0), nearest-neighbour matching with adaptive step halving.
// Once the branch leaves the reals the remaining entries are NaN.
std::vector<double> continuous_root_track(const OvalParams& p, std::span<const double> ys);

// Signed residual of the defining oval equation at (z, y); zero on the curve
// away from the z = z_i / z = z_o sign-flip planes.
double oval_signed_residual(const OvalParams& p, double z, double y);

// Refraction-law residual sin(phi - theta) - m sin(phi - theta') with the
// slope taken from the evaluated curve by central difference. All three
// stencil points must land in the Exact region.
double snell_residual(const OvalParams& p, const BranchPlan& plan, double y, double h);

}  // namespace superconic
