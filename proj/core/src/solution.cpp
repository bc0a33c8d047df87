#include "superconic/solution.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <sstream>

#include "superconic/errors.hpp"

namespace superconic {

const char* to_string(SolutionSign s) noexcept {
    return s == SolutionSign::Plus ? "plus" : "minus";
}

const char* to_string(Region r) noexcept {
    return r == Region::Exact ? "exact" : "interpolated";
}

QuadFactors quad_factors(const OvalParams& p, double y, double lambda) {
    const QuarticCoeffs qc = quartic_coeffs(p);
    const double dd = qc.a2 + 2.0 * lambda * qc.b2;
    if (dd <= 0.0)
        throw Error(Errc::FactorDomain,
                    "quad_factors: a2 + 2*lambda*b2 <= 0 at y = " + std::to_string(y), y);
    const double s = std::sqrt(dd);

    QuadFactors f{};
    // The smaller-magnitude member of each +/- pair is recovered from the
    // exact product to avoid cancellation (p+ p- = b1^2 - dd, q+ q- = b0^2 - a0).
    const double pprod = qc.b1 * qc.b1 - dd;
    if (qc.b1 >= 0.0) {
        f.p_plus = qc.b1 + s;
        f.p_minus = pprod / f.p_plus;
    } else {
        f.p_minus = qc.b1 - s;
        f.p_plus = pprod / f.p_minus;
    }

    const double b0y = qc.b0.at(y);
    const double u = b0y + lambda;
    const double t = (qc.a1 + 2.0 * lambda * qc.b1) / (2.0 * s);
    const double qprod = b0y * b0y - qc.a0.at(y);
    if ((u >= 0.0) == (t >= 0.0)) {
        f.q_plus = u + t;
        f.q_minus = f.q_plus != 0.0 ? qprod / f.q_plus : 0.0;
    } else {
        f.q_minus = u - t;
        f.q_plus = f.q_minus != 0.0 ? qprod / f.q_minus : 0.0;
    }
    return f;
}

ABPair ab_pair(const OvalParams& p, double y, double lambda) {
    const QuarticCoeffs qc = quartic_coeffs(p);
    const QuadFactors f = quad_factors(p, y, lambda);
    const double scale = std::abs(f.p_plus) + std::abs(f.p_minus);
    if (std::abs(f.p_plus) <= 1e-13 * scale || std::abs(f.p_minus) <= 1e-13 * scale)
        throw Error(Errc::VanishingFactor,
                    "ab_pair: quadratic factor with vanishing linear coefficient at y = " +
                        std::to_string(y),
                    y);
    const double ee = p.eta_i * p.eta_o;
    ABPair ab{};
    ab.a_plus = -2.0 * qc.b2 * ee / f.p_plus;
    ab.a_minus = -2.0 * qc.b2 * ee / f.p_minus;
    ab.b_plus = -2.0 * f.q_plus / (ee * f.p_plus);
    ab.b_minus = -2.0 * f.q_minus / (ee * f.p_minus);
    return ab;
}

namespace {

// sigma or delta indistinguishable from zero at working precision
bool sigma_delta_vanish(const OvalParams& p) {
    const double sscale =
        (1.0 + p.m) * p.eta_i * p.eta_i + 2.0 * std::abs(p.eta_i * p.eta_o);
    const double dscale =
        (1.0 + p.m) * p.eta_o * p.eta_o + 2.0 * p.m * std::abs(p.eta_i * p.eta_o);
    return std::abs(p.sigma) <= 4.0 * DBL_EPSILON * sscale ||
           std::abs(p.delta) <= 4.0 * DBL_EPSILON * dscale;
}

}  // namespace

Selection initial_selection(const OvalParams& p) {
    if (sigma_delta_vanish(p))
        return {LambdaBranch::PositiveDisc,
                p.k > 0.0 ? SolutionSign::Plus : SolutionSign::Minus};
    return {LambdaBranch::TrigA, selection_for_branch(p, LambdaBranch::TrigA)};
}

SolutionSign selection_for_branch(const OvalParams& p, LambdaBranch branch) {
    const bool dp = p.delta > 0.0, sp = p.sigma > 0.0, kp = p.k > 0.0;
    const bool io = p.eta_i > p.eta_o;
    if (branch == LambdaBranch::PositiveDisc)
        return kp ? SolutionSign::Plus : SolutionSign::Minus;
    if (sigma_delta_vanish(p))
        throw Error(Errc::Precondition,
                    "selection_for_branch: trig criteria need sigma*delta != 0");
    bool plus = false;
    switch (branch) {
        case LambdaBranch::TrigA:
            plus = (dp && kp) || (!dp && io);
            break;
        case LambdaBranch::TrigB:
            plus = (dp && sp && io) || (dp && !sp && kp) || (!dp && kp);
            break;
        case LambdaBranch::TrigC:
            plus = (dp && sp && kp) || (dp && !sp && io) || (!dp && kp);
            break;
        default:
            break;
    }
    return plus ? SolutionSign::Plus : SolutionSign::Minus;
}

namespace {

struct RawEval {
    double z;
    double a, b;
    double lambda;
    double one_minus_ab;
    Region region;
};

RawEval eval_branch(const OvalParams& p, const ResolventCoeffs& rc, double ay,
                    LambdaBranch branch, SolutionSign sign) {
    const CubicCoeffs cc = rc.at(ay);
    const CubicClassification cls = classify(cc);
    const double lambda = cubic_root(cls, branch, cc.a, cc.b);
    const ABPair ab = ab_pair(p, ay, lambda);
    const bool plus = sign == SolutionSign::Plus;
    const double a = plus ? ab.a_plus : ab.a_minus;
    const double b = plus ? ab.b_plus : ab.b_minus;
    double omab = 1.0 - a * b;
    Region region = Region::Exact;
    if (omab < 0.0) {
        if (omab >= -1e-12) {
            omab = 0.0;  // fold-edge clamp, avoids region flicker
        } else {
            region = Region::Interpolated;
        }
    }
    const double z = region == Region::Exact ? b / (1.0 + std::sqrt(omab)) : b;
    return {z, a, b, lambda, omab, region};
}

}  // namespace

const Segment& BranchPlan::segment_at(double ay) const {
    const double slack = 1e-12 * (1.0 + y_max);
    if (ay > y_max + slack || segments.empty())
        throw Error(Errc::Precondition,
                    "segment_at: y outside the planned range", ay);
    for (std::size_t i = 0; i < segments.size(); ++i) {
        const Segment& s = segments[i];
        if (ay < s.y_hi || (ay <= s.y_hi && i + 1 == segments.size())) {
            // A joint belongs to the neighbouring single-root segment, where
            // disc = 0 lies inside the formula's validity.
            if (ay == s.y_lo && i > 0 && s.branch != LambdaBranch::PositiveDisc &&
                segments[i - 1].branch == LambdaBranch::PositiveDisc)
                return segments[i - 1];
            return s;
        }
    }
    return segments.back();
}

BranchPlan build_branch_plan(const OvalParams& p, double y_max) {
    if (!(y_max > 0.0))
        throw Error(Errc::Precondition, "build_branch_plan: y_max must be > 0");

    const ResolventCoeffs rc = resolvent_coeffs(p);
    const DiscSextic sx = disc_sextic_coeffs(p);

    std::vector<double> bounds;
    for (double r : disc_positive_roots(p))
        if (r < y_max) bounds.push_back(r);

    Selection sel = initial_selection(p);
    if (sel.branch == LambdaBranch::PositiveDisc) {
        // sigma*delta = 0: disc(0) = 0 and the single root is only usable while
        // disc >= 0. If disc dips negative immediately, continue with the trig
        // branch that matches the single root at the boundary (r > 0: largest,
        // r < 0: smallest).
        const double probe = bounds.empty() ? y_max / 64.0 : bounds.front() / 2.0;
        if (sx.at(probe) < 0.0) {
            const CubicClassification cls0 = classify(rc.at(0.0));
            sel.branch = cls0.r >= 0.0 ? LambdaBranch::TrigA : LambdaBranch::TrigC;
        }
    }

    BranchPlan plan;
    plan.y_max = y_max;

    double lo = 0.0;
    LambdaBranch branch = sel.branch;
    SolutionSign sign = sel.sign;
    for (std::size_t i = 0; i <= bounds.size(); ++i) {
        const double hi = i < bounds.size() ? bounds[i] : y_max;
        plan.segments.push_back({lo, hi, branch, sign});
        if (i == bounds.size()) break;

        // next segment's branch from the disc sign in its interior
        const double nhi = i + 1 < bounds.size() ? bounds[i + 1] : y_max;
        const double mid = 0.5 * (hi + nhi);
        LambdaBranch nb;
        if (hi == nhi || sx.at(mid) >= 0.0) {
            nb = LambdaBranch::PositiveDisc;
        } else {
            const CubicClassification cb = classify(rc.at(hi));
            nb = cb.r > 0.0 ? LambdaBranch::TrigA : LambdaBranch::TrigC;
        }

        // sign on the new segment by continuity at the joint; lambda is
        // continuous there, so matching B matches the factor pairing exactly
        const RawEval left = eval_branch(p, rc, hi, branch, sign);
        const RawEval rp = eval_branch(p, rc, hi, nb, SolutionSign::Plus);
        const RawEval rm = eval_branch(p, rc, hi, nb, SolutionSign::Minus);
        const double db_p = std::abs(rp.b - left.b);
        const double db_m = std::abs(rm.b - left.b);
        const SolutionSign ns = db_p <= db_m ? SolutionSign::Plus : SolutionSign::Minus;
        const RawEval right = ns == SolutionSign::Plus ? rp : rm;

        const double dz = std::abs(right.z - left.z);
        const double db = std::min(db_p, db_m);
        const bool near_fold = std::abs(left.one_minus_ab) <= 1e-5;
        const bool ok = dz <= 1e-7 * (1.0 + std::abs(left.z)) ||
                        (near_fold && db <= 1e-7 * (1.0 + std::abs(left.b)));
        if (!ok) {
            std::ostringstream os;
            os << "build_branch_plan: segments do not meet at y = " << hi
               << " (z left " << left.z << ", z right " << rp.z << " / " << rm.z << ")";
            throw Error(Errc::BranchPlanMismatch, os.str(), hi);
        }

        lo = hi;
        branch = nb;
        sign = ns;
    }
    return plan;
}

EvalResult evaluate(const OvalParams& p, const BranchPlan& plan, double y) {
    const double ay = std::abs(y);
    const Segment& seg = plan.segment_at(ay);
    const ResolventCoeffs rc = resolvent_coeffs(p);
    const RawEval r = eval_branch(p, rc, ay, seg.branch, seg.sign);
    return {r.z, r.region, r.lambda, r.one_minus_ab, seg.branch, seg.sign};
}

double evaluate_superconic(const OvalParams& p, const BranchPlan& plan,
                           std::span<const double> f, double y) {
    const double base = evaluate(p, plan, y).z;
    const double y2 = y * y;
    double poly = 0.0;
    for (std::size_t i = f.size(); i-- > 0;) poly = (poly + f[i]) * y2;
    poly *= y2;  // lowest term is f4 * y^4
    return base + poly;
}

double quartic_relative_residual(const OvalParams& p, double y, double z) {
    const QuarticCoeffs qc = quartic_coeffs(p);
    const double x = p.eta_i * p.eta_o * z;
    const double lhs = (qc.b2 * x + qc.b1) * x + qc.b0.at(y);
    const double rhs = (qc.a2 * x + qc.a1) * x + qc.a0.at(y);
    const double lhs_mag =
        std::abs(qc.b2 * x * x) + std::abs(qc.b1 * x) + std::abs(qc.b0.at(y));
    const double scale = lhs_mag * lhs_mag + std::abs(qc.a2 * x * x) +
                         std::abs(qc.a1 * x) + std::abs(qc.a0.at(y)) + DBL_MIN;
    return (lhs * lhs - rhs) / scale;
}

std::vector<CurveSample> evaluate_grid(const OvalParams& p, const BranchPlan& plan,
                                       std::span<const double> ys) {
    if (!std::is_sorted(ys.begin(), ys.end()))
        throw Error(Errc::Precondition, "evaluate_grid: ys must be ascending");
    std::vector<CurveSample> out;
    out.reserve(ys.size());
    for (double y : ys) {
        CurveSample s;
        s.y = y;
        try {
            s.eval = evaluate(p, plan, y);
            s.residual_quartic = quartic_relative_residual(p, std::abs(y), s.eval.z);
        } catch (const Error& e) {
            s.ok = false;
            s.error = e.what();
        }
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace superconic
