#include "superconic/resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "superconic/errors.hpp"

namespace superconic {

LambdaTriple lambda_at_zero(const OvalParams& p) {
    const double e2 = p.epsilon * p.epsilon;
    return {0.0, 2.0 * p.k * p.k, 2.0 * e2 * p.m * p.m * p.sigma / (1.0 + p.m)};
}

double lambda_y2_correction(const OvalParams& p, int which) {
    const double m = p.m, ei = p.eta_i, eo = p.eta_o;
    const double kml = eo - m * ei;
    const double den1 = (m - 1.0) * (ei - 2.0 * eo + m * ei);          // (m-1)*sigma/eta_i
    const double den2 = (m - 1.0) * (eo - 2.0 * m * ei + m * eo);      // (m-1)*delta/eta_o
    switch (which) {
        case 1:
            if (den1 == 0.0)
                throw Error(Errc::Precondition, "lambda_y2_correction: sigma vanishes");
            return 2.0 * m * m * ei * eo * eo * kml * kml / den1;
        case 2:
            if (den2 == 0.0)
                throw Error(Errc::Precondition, "lambda_y2_correction: delta vanishes");
            return 2.0 * ei * ei * eo * kml * kml / den2;
        case 3: {
            const double den = den1 * (eo - 2.0 * m * ei + m * eo);
            if (den == 0.0)
                throw Error(Errc::Precondition, "lambda_y2_correction: sigma*delta vanishes");
            const double d = ei - eo;
            return -2.0 * ei * eo * d * d * d * d * m * m * (1.0 + m) / den;
        }
        default:
            throw Error(Errc::Precondition, "lambda_y2_correction: which must be 1, 2 or 3");
    }
}

DiscSextic disc_sextic_coeffs(const OvalParams& p) {
    const double m = p.m, ei = p.eta_i, eo = p.eta_o, eps = p.epsilon;
    const double m2 = m * m, m3 = m2 * m, m4 = m2 * m2, m5 = m4 * m;
    const double e2 = eps * eps, e4 = e2 * e2, e6 = e4 * e2, e8 = e4 * e4;
    const double kml = eo - ei * m;
    const double kml4 = kml * kml * kml * kml;
    const double omp = 1.0 + m;

    DiscSextic s{};
    {
        const double d = ei - eo;
        const double ei6 = std::pow(ei, 6), eo6 = std::pow(eo, 6);
        s.d6 = -256.0 / 27.0 * e6 * ei6 * d * d * eo6 * m4 * kml4;
    }
    s.d4_star = std::pow(eo, 4) * (8.0 + 20.0 * m2 - m4) +
                4.0 * ei * eo * eo * eo * (-4.0 - 4.0 * m - 15.0 * m2 - 5.0 * m3 + m4) +
                2.0 * ei * ei * eo * eo * (2.0 + 20.0 * m + 37.0 * m2 + 20.0 * m3 + 2.0 * m4) -
                4.0 * ei * ei * ei * eo * (-1.0 + 5.0 * m + 15.0 * m2 + 4.0 * m3 + 4.0 * m4) +
                std::pow(ei, 4) * (-1.0 + 20.0 * m2 + 8.0 * m4);
    s.d4 = 64.0 * e8 * std::pow(ei, 4) * std::pow(eo, 4) * m4 * kml4 * s.d4_star /
           (27.0 * (1.0 - m) * (1.0 - m) * omp * omp);
    s.d2_star = -2.0 * std::pow(eo, 6) * omp * omp * omp +
                2.0 * std::pow(ei, 6) * m2 * omp * omp * omp +
                2.0 * ei * std::pow(eo, 5) * omp * omp * (2.0 + 6.0 * m + m2) -
                2.0 * std::pow(ei, 5) * eo * m * omp * omp * (1.0 + 6.0 * m + 2.0 * m2) +
                std::pow(ei, 4) * eo * eo *
                    (1.0 + 11.0 * m + 29.0 * m2 + 39.0 * m3 + 18.0 * m4 - 2.0 * m5) +
                4.0 * ei * ei * ei * eo * eo * eo *
                    (-1.0 - 2.0 * m + m2 - m3 + 2.0 * m4 + m5) -
                ei * ei * std::pow(eo, 4) *
                    (-2.0 + 18.0 * m + 39.0 * m2 + 29.0 * m3 + 11.0 * m4 + m5);
    s.d2 = 128.0 * e8 * e2 * ei * ei * eo * eo * m4 * kml4 * s.d2_star /
           (27.0 * (1.0 - m) * omp * omp * omp * omp);
    {
        const double k4 = p.k * p.k * p.k * p.k;
        const double sd = p.sigma * p.delta;
        s.d0 = -64.0 / 27.0 * e8 * m4 * k4 * sd * sd / (omp * omp * omp * omp);
    }
    return s;
}

namespace {

// One bisection pass on disc(y) around a closed-form candidate. The closed
// form can lose several digits when the three u-roots differ by many orders
// of magnitude, so the bracket is widened geometrically until it straddles a
// sign change.
bool polish_on_sextic(const DiscSextic& s, double& y) {
    double w = 1e-3 * (1.0 + y);
    for (int attempt = 0; attempt < 7; ++attempt) {
        double lo = std::max(y - w, 0.0);
        double hi = y + w;
        const bool neg_lo = s.at(lo) < 0.0;
        if (neg_lo != (s.at(hi) < 0.0)) {
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (mid == lo || mid == hi) break;
                if ((s.at(mid) < 0.0) == neg_lo)
                    lo = mid;
                else
                    hi = mid;
            }
            y = 0.5 * (lo + hi);
            return true;
        }
        w *= 8.0;
    }
    return false;
}

}  // namespace

std::vector<double> disc_positive_roots(const OvalParams& p) {
    const DiscSextic s = disc_sextic_coeffs(p);

    // Real roots of the cubic in u = y^2.
    std::vector<double> us;
    if (s.d0 == 0.0) {
        // sigma*delta = 0: deflate the exact u = 0 root and solve the quadratic.
        const double disc = s.d4 * s.d4 - 4.0 * s.d6 * s.d2;
        if (disc >= 0.0) {
            const double sq = std::sqrt(disc);
            // larger-magnitude root first, partner via the product
            const double q0 = -0.5 * (s.d4 + std::copysign(sq, s.d4));
            if (q0 != 0.0) {
                us.push_back(q0 / s.d6);
                us.push_back(s.d2 / q0);
            }
        }
    } else {
        const CubicClassification cls = classify(s.d6, s.d4, s.d2, s.d0);
        const double tol = cls.disc_tol;
        if (cls.disc > tol) {
            us.push_back(cubic_root(cls, LambdaBranch::PositiveDisc, s.d6, s.d4));
        } else if (cls.disc < -tol) {
            us.push_back(cubic_root(cls, LambdaBranch::TrigA, s.d6, s.d4));
            us.push_back(cubic_root(cls, LambdaBranch::TrigB, s.d6, s.d4));
            us.push_back(cubic_root(cls, LambdaBranch::TrigC, s.d6, s.d4));
        } else {
            // boundary: one single and one double root (tangential pair)
            const double base = -s.d4 / (3.0 * s.d6);
            const double rt = std::cbrt(cls.rho);
            const double sgn = cls.r >= 0.0 ? 1.0 : -1.0;
            us.push_back(base + 2.0 * sgn * rt);
            us.push_back(base - sgn * rt);
            us.push_back(base - sgn * rt);
        }
    }

    std::vector<double> ys;
    for (double u : us) {
        if (!(u > 0.0)) continue;
        double y = std::sqrt(u);
        if (!polish_on_sextic(s, y)) {
            // no sign change: keep only genuine tangential roots
            if (std::abs(s.at(y)) > 1e-9 * s.scale_at(y)) continue;
        }
        ys.push_back(y);
    }
    std::sort(ys.begin(), ys.end());

    if (ys.size() > 2) {
        throw Error(Errc::DiscRootCount,
                    "disc_positive_roots: found " + std::to_string(ys.size()) +
                        " positive roots, expected 0 or 2");
    }
    return ys;
}

}  // namespace superconic
