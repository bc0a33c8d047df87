#pragma once

#include "superconic/oval.hpp"

namespace superconic {

// Reduced parameters of a*l^3 + b*l^2 + c*l + d:
//   q = (3ac - b^2)/(3a^2)
//   r = (9abc - 27a^2 d - 2b^3)/(27a^3)
//   disc = r^2 + (4/27) q^3
// rho and theta describe the three-real-root regime; they are populated
// whenever q <= 0 and are zero otherwise.
struct CubicClassification {
    double q = 0.0;
    double r = 0.0;
    double disc = 0.0;
    double disc_tol = 0.0;  // rounding floor of disc; |disc| below it means "boundary"
    double rho = 0.0;       // sqrt(-q^3/27), > 0 when disc < 0
    double theta = 0.0;     // arccos(r/(2 rho)) in [0, pi], cos clamped to [-1, 1]
};

// Which closed-form root of the cubic to take.
enum class LambdaBranch {
    PositiveDisc,  // single real root, disc >= 0 (Cardano form)
    TrigA,         // cos(theta/3): the largest of three real roots
    TrigB,         // cos((theta - 2 pi)/3): the middle root
    TrigC          // cos((theta + 2 pi)/3): the smallest root
};

const char* to_string(LambdaBranch b) noexcept;

CubicClassification classify(double a, double b, double c, double d);
inline CubicClassification classify(const CubicCoeffs& c) {
    return classify(c.a, c.b, c.c, c.d);
}

// Evaluates the requested root formula. Throws Errc::InvalidBranch when the
// branch is inconsistent with the discriminant sign (a small |disc| boundary
// band is permitted for both families). Cube roots of negative reals are
// taken as signed real cube roots.
double cubic_root(const CubicClassification& cls, LambdaBranch branch, double a, double b);

}  // namespace superconic
