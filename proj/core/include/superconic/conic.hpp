#pragma once

#include <span>
#include <variant>
#include <vector>

#include "superconic/oval.hpp"
#include "superconic/solution.hpp"

namespace superconic {

struct ConicParams {
    double c0;  // vertex curvature
    double K;   // conic constant
};

struct ConicSag {
    double z;
    Region region;
};

// Explicit conic sag; past the fold (K > -1) the parabola z = c0 y^2
// continues as the interpolating curve.
ConicSag conic_sag(const ConicParams& c, double y);

// (1+K) c0 z^2 - 2 z + c0 y^2
double conic_implicit_residual(const ConicParams& c, double z, double y);

struct Asphere {
    ConicParams conic;
    std::vector<double> f;  // f[n-2] = f_{2n}, n = 2..N
};

double asphere_sag(const Asphere& a, double y);

// Conic reached by the oval as eta_i -> 0 (ellipse, -1 < K < 0) and as
// eta_o -> 0 (hyperbola, K < -1), for m > 1.
ConicParams limit_conic_eta_i_zero(double m, double eta_o, double epsilon);
ConicParams limit_conic_eta_o_zero(double m, double eta_i, double epsilon);

enum class FamilyKind { OpticalSolution, Circle, Ellipse, Hyperbola };

const char* to_string(FamilyKind k) noexcept;

struct FamilyMember {
    double eta_i;
    FamilyKind kind;
    std::variant<OvalParams, ConicParams> curve;
};

// Curves sharing (c0, m, epsilon), indexed by eta_i. eta_o follows from the
// curvature relation; degenerate eta values produce the conic members.
std::vector<FamilyMember> make_family(double c0, double m, double epsilon,
                                      std::span<const double> eta_i_list);

}  // namespace superconic
