#pragma once

#include <variant>

namespace superconic {

// Defining constants of a Cartesian oval in the eta-parameterization, plus
// every derived quantity the rest of the pipeline needs. All fields are fixed
// at validation; nothing is recomputed lazily.
struct OvalParams {
    double m;        // refractive-index ratio n'/n, > 0 and != 1
    double eta_i;    // epsilon / source distance z_i
    double eta_o;    // epsilon / focus distance z_o
    double epsilon;  // positive length scale
    // derived
    double k;        // epsilon*(eta_o - m*eta_i), the scaled oval constant
    double kappa;    // k / (eta_i*eta_o) = z_i - m*z_o
    double sigma;    // (1+m)*eta_i^2 - 2*eta_i*eta_o
    double delta;    // (1+m)*eta_o^2 - 2*m*eta_i*eta_o
    double c0;       // vertex curvature (eta_i - m*eta_o)/(epsilon*(1-m))
};

// Why a parameter set fails to define a genuine quartic oval.
enum class DegenerateKind { KZero, MUnity, EtaEqual, EtaIZero, EtaOZero };

// constant + slope * y^2
struct EvenQuadratic {
    double constant = 0.0;
    double y2 = 0.0;
    double at(double y) const noexcept { return constant + y2 * (y * y); }
};

// Coefficients of (b2 x^2 + b1 x + b0)^2 = a2 x^2 + a1 x + a0 at x = eta_i*eta_o*z.
// a0 and b0 are affine in y^2; everything else is y-independent.
struct QuarticCoeffs {
    double a2, a1;
    EvenQuadratic a0;
    double b2, b1;
    EvenQuadratic b0;
};

struct CubicCoeffs {
    double a, b, c, d;
};

// Resolvent cubic a*l^3 + b*l^2 + c*l + d with b, c affine in y^2 and d
// proportional to y^2.
struct ResolventCoeffs {
    double a;
    EvenQuadratic b, c;
    double d_y2;  // d(y) = d_y2 * y^2
    CubicCoeffs at(double y) const noexcept {
        return {a, b.at(y), c.at(y), d_y2 * (y * y)};
    }
};

using ValidationResult = std::variant<OvalParams, DegenerateKind>;

// Classifies the inputs and populates the derived fields. Degenerate parameter
// sets (where the quartic machinery would divide by zero) come back as a
// DegenerateKind; non-finite or non-positive m/epsilon throw Errc::InvalidInput.
ValidationResult validate_params(double m, double eta_i, double eta_o, double epsilon);

QuarticCoeffs quartic_coeffs(const OvalParams& p);

// Closed-form resolvent coefficients; agrees with the composition from the
// quartic coefficients at every y.
ResolventCoeffs resolvent_coeffs(const OvalParams& p);

// eta_i <-> eta_o, m -> 1/m. The oval curve is invariant; applying twice
// returns the original parameters.
OvalParams swap_form(const OvalParams& p);

// Inverts the curvature relation: eta_o such that the oval with (m, eta_i,
// eta_o, epsilon) has vertex curvature c0.
double eta_o_from_curvature(double c0, double m, double eta_i, double epsilon);

}  // namespace superconic
