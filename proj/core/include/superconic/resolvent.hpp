#pragma once

#include <vector>

#include "superconic/cubic.hpp"
#include "superconic/oval.hpp"

namespace superconic {

// The three resolvent roots at y = 0: (0, 2k^2, 2 eps^2 m^2 sigma/(1+m)).
struct LambdaTriple {
    double l01, l02, l03;
};

LambdaTriple lambda_at_zero(const OvalParams& p);

// Second-order coefficient of the small-y expansion lambda(y) ~ l0 + l2*y^2
// for root `which` in {1,2,3} (matching lambda_at_zero's ordering). Requires
// sigma != 0 and delta != 0; used as a test oracle for small-y growth.
double lambda_y2_correction(const OvalParams& p, int which);

// Discriminant of the resolvent cubic as a polynomial in y:
//   disc(y) = d6 y^6 + d4 y^4 + d2 y^2 + d0
// d4_star and d2_star are the inner polynomials of d4 and d2.
struct DiscSextic {
    double d6, d4, d2, d0;
    double d4_star, d2_star;
    double at(double y) const noexcept {
        const double u = y * y;
        return ((d6 * u + d4) * u + d2) * u + d0;
    }
    // sum of term magnitudes, for relative residual checks
    double scale_at(double y) const noexcept {
        const double u = y * y;
        return ((std::abs(d6) * u + std::abs(d4)) * u + std::abs(d2)) * u + std::abs(d0);
    }
};

DiscSextic disc_sextic_coeffs(const OvalParams& p);

// Positive y where disc(y) = 0, ascending. The sextic is a cubic in u = y^2
// with d6 < 0 and disc(0) <= 0, so there are 0 or 2 such y (a tangential
// double root is reported twice). Roots are located by the closed-form cubic
// formulas and polished by bisection on disc(y).
std::vector<double> disc_positive_roots(const OvalParams& p);

}  // namespace superconic
