#pragma once

#include <span>
#include <string>
#include <vector>

#include "superconic/cubic.hpp"
#include "superconic/oval.hpp"
#include "superconic/resolvent.hpp"

namespace superconic {

// Coefficients of the two quadratic factors
//   (b2 x^2 + p_plus x + q_plus)(b2 x^2 + p_minus x + q_minus)
// of the oval quartic at a given (y, lambda).
struct QuadFactors {
    double p_plus, p_minus;
    double q_plus, q_minus;
};

// The factored quartic rewritten as (A z^2 - 2 z + B) pairs:
//   A = -2 b2 eta_i eta_o / p,  B = -2 q / (eta_i eta_o p).
struct ABPair {
    double a_plus, a_minus;
    double b_plus, b_minus;
};

enum class SolutionSign { Plus, Minus };
enum class Region { Exact, Interpolated };

const char* to_string(SolutionSign s) noexcept;
const char* to_string(Region r) noexcept;

QuadFactors quad_factors(const OvalParams& p, double y, double lambda);
ABPair ab_pair(const OvalParams& p, double y, double lambda);

struct Selection {
    LambdaBranch branch;
    SolutionSign sign;
};

// Branch and sign at y = 0. For sigma*delta != 0 the branch is TrigA with the
// sign given by the root-ordering criteria; at sigma*delta = 0 the single
// Cardano root applies with the sign of k deciding.
Selection initial_selection(const OvalParams& p);

// Sign table for an arbitrary initial branch choice (sigma*delta != 0). All
// three trig branches must give the same curve near y = 0.
SolutionSign selection_for_branch(const OvalParams& p, LambdaBranch branch);

struct Segment {
    double y_lo, y_hi;
    LambdaBranch branch;
    SolutionSign sign;
};

// Partition of [0, y_max] at the positive discriminant roots. Each segment
// carries the lambda branch valid there and the solution sign that keeps z
// continuous across the joints.
struct BranchPlan {
    std::vector<Segment> segments;
    double y_max = 0.0;
    const Segment& segment_at(double ay) const;
};

BranchPlan build_branch_plan(const OvalParams& p, double y_max);

struct EvalResult {
    double z = 0.0;
    Region region = Region::Exact;
    double lambda = 0.0;
    double one_minus_ab = 0.0;
    LambdaBranch branch = LambdaBranch::TrigA;
    SolutionSign sign = SolutionSign::Plus;
};

// Sag of the optical solution at |y| (the curve is even in y). Where
// 1 - A B < 0 the interpolating curve z = B continues the same branch.
EvalResult evaluate(const OvalParams& p, const BranchPlan& plan, double y);

// evaluate(...).z plus the even polynomial sum f[n-2] * y^(2n), n = 2..N.
double evaluate_superconic(const OvalParams& p, const BranchPlan& plan,
                           std::span<const double> f, double y);

struct CurveSample {
    double y = 0.0;
    EvalResult eval{};
    double residual_quartic = 0.0;  // signed relative residual of the full quartic
    bool ok = true;
    std::string error;
};

// Per-sample evaluation with diagnostics; failures are recorded in the sample
// instead of aborting the grid. ys must be ascending.
std::vector<CurveSample> evaluate_grid(const OvalParams& p, const BranchPlan& plan,
                                       std::span<const double> ys);

// Signed relative residual of (b2 x^2+b1 x+b0)^2 - (a2 x^2+a1 x+a0) at
// x = eta_i*eta_o*z, scaled by the largest intermediate term.
double quartic_relative_residual(const OvalParams& p, double y, double z);

}  // namespace superconic
