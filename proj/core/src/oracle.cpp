#include "superconic/oracle.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>

#include "superconic/errors.hpp"

namespace superconic {

double QuarticPoly::scale_at(double x) const noexcept {
    const double ax = std::abs(x);
    return ((((std::abs(c[4]) * ax + std::abs(c[3])) * ax + std::abs(c[2])) * ax +
             std::abs(c[1])) *
                ax +
            std::abs(c[0])) +
           DBL_MIN;
}

QuarticPoly quartic_poly(const OvalParams& p, double y) {
    const QuarticCoeffs q = quartic_coeffs(p);
    const double a0 = q.a0.at(y), b0 = q.b0.at(y);
    QuarticPoly poly;
    poly.c[4] = q.b2 * q.b2;
    poly.c[3] = 2.0 * q.b2 * q.b1;
    poly.c[2] = q.b1 * q.b1 + 2.0 * q.b2 * b0 - q.a2;
    poly.c[1] = 2.0 * q.b1 * b0 - q.a1;
    poly.c[0] = b0 * b0 - a0;
    return poly;
}

namespace {

double bisect(const QuarticPoly& poly, double lo, double hi, double tol) {
    const bool neg_lo = poly.at(lo) < 0.0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if ((poly.at(mid) < 0.0) == neg_lo)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> quartic_roots_numeric(const OvalParams& p, double y) {
    const QuarticPoly poly = quartic_poly(p, y);
    const double c4 = poly.c[4];
    const double bound =
        1.0 + std::max({std::abs(poly.c[0]), std::abs(poly.c[1]), std::abs(poly.c[2]),
                        std::abs(poly.c[3])}) /
                  std::abs(c4);

    constexpr int kIntervals = 4096;
    const double tol = 1e-13 * std::max(1.0, bound);

    // A few Newton steps after bisection: roots very close to x = 0 have a
    // local term scale far below the absolute bisection width.
    const auto polish = [&](double x) {
        for (int it = 0; it < 4; ++it) {
            const double f = poly.at(x);
            if (f == 0.0) break;
            const double df =
                ((4.0 * poly.c[4] * x + 3.0 * poly.c[3]) * x + 2.0 * poly.c[2]) * x +
                poly.c[1];
            if (df == 0.0) break;
            const double xn = x - f / df;
            if (!(std::abs(poly.at(xn)) < std::abs(f))) break;
            x = xn;
        }
        return x;
    };

    std::vector<double> roots;
    double x_prev = -bound;
    double f_prev = poly.at(x_prev);
    for (int i = 1; i <= kIntervals; ++i) {
        const double x = -bound + 2.0 * bound * i / kIntervals;
        const double f = poly.at(x);
        if (f_prev == 0.0) {
            roots.push_back(x_prev);
        } else if ((f_prev < 0.0) != (f < 0.0)) {
            roots.push_back(polish(bisect(poly, x_prev, x, tol)));
        }
        x_prev = x;
        f_prev = f;
    }
    if (f_prev == 0.0) roots.push_back(x_prev);

    // Deflation check: divide out the scanned roots and look for the real
    // roots of the remaining quadratic (even-multiplicity pairs have no sign
    // change and are invisible to the scan).
    if (roots.size() <= 2) {
        std::array<double, 5> c = poly.c;
        int deg = 4;
        for (double r : roots) {
            std::array<double, 5> nc{};
            double carry = 0.0;
            for (int i = deg; i >= 1; --i) {
                carry = c[i] + carry * r;
                nc[i - 1] = carry;
            }
            c = nc;
            --deg;
        }
        if (deg == 2 && c[2] != 0.0) {
            const double disc = c[1] * c[1] - 4.0 * c[2] * c[0];
            if (disc >= 0.0) {
                const double sq = std::sqrt(disc);
                const double q0 = -0.5 * (c[1] + std::copysign(sq, c[1]));
                roots.push_back(polish(q0 / c[2]));
                if (q0 != 0.0) roots.push_back(polish(c[0] / q0));
            }
        }
    }

    std::erase_if(roots, [&](double x) {
        return std::abs(poly.at(x)) > 1e-10 * poly.scale_at(x);
    });
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double a, double b) {
                                return std::abs(a - b) <= 1e-9 * (1.0 + std::abs(a));
                            }),
                roots.end());
    return roots;
}

namespace {

struct TrackStep {
    bool ok = false;
    double z = 0.0;
};

TrackStep track_step(const OvalParams& p, double y0, double z0, double y1, int depth) {
    const double ee = p.eta_i * p.eta_o;
    const std::vector<double> xs = quartic_roots_numeric(p, y1);

    double best = std::numeric_limits<double>::quiet_NaN();
    double d1 = std::numeric_limits<double>::infinity();
    double d2 = std::numeric_limits<double>::infinity();
    double second = 0.0;
    for (double x : xs) {
        const double z = x / ee;
        const double d = std::abs(z - z0);
        if (d < d1) {
            d2 = d1;
            second = best;
            d1 = d;
            best = z;
        } else if (d < d2) {
            d2 = d;
            second = z;
        }
    }

    const bool ambiguous = std::isfinite(d2) && std::abs(best - second) < 1e-10;
    const bool jump = !xs.empty() && d1 > 0.1 * (1.0 + std::abs(z0));
    if (!xs.empty() && !ambiguous && !jump) return {true, best};

    if (depth >= 20) {
        if (ambiguous)
            throw Error(Errc::OracleAmbiguity,
                        "continuous_root_track: two roots remain within 1e-10 after "
                        "20 refinements",
                        y1);
        return {false, 0.0};  // branch left the reals (fold crossed)
    }
    const double mid = 0.5 * (y0 + y1);
    const TrackStep first = track_step(p, y0, z0, mid, depth + 1);
    if (!first.ok) return first;
    return track_step(p, mid, first.z, y1, depth + 1);
}

}  // namespace

std::vector<double> continuous_root_track(const OvalParams& p, std::span<const double> ys) {
    if (ys.empty() || ys[0] != 0.0)
        throw Error(Errc::Precondition, "continuous_root_track: ys must start at 0");
    if (!std::is_sorted(ys.begin(), ys.end()))
        throw Error(Errc::Precondition, "continuous_root_track: ys must be ascending");

    std::vector<double> zs(ys.size(), std::numeric_limits<double>::quiet_NaN());
    zs[0] = 0.0;
    double z = 0.0;
    for (std::size_t i = 1; i < ys.size(); ++i) {
        const TrackStep step = track_step(p, ys[i - 1], z, ys[i], 0);
        if (!step.ok) break;
        z = step.z;
        zs[i] = z;
    }
    return zs;
}

double oval_signed_residual(const OvalParams& p, double z, double y) {
    // s_i * sqrt((z-z_i)^2 + y^2) scaled by eta_i equals
    // sign(eps - eta_i z) * sqrt((eta_i z - eps)^2 + (eta_i y)^2).
    const double si = p.epsilon - p.eta_i * z >= 0.0 ? 1.0 : -1.0;
    const double so = p.epsilon - p.eta_o * z >= 0.0 ? 1.0 : -1.0;
    const double di = std::hypot(p.eta_i * z - p.epsilon, p.eta_i * y);
    const double d_o = std::hypot(p.eta_o * z - p.epsilon, p.eta_o * y);
    return p.eta_o * si * di - p.m * p.eta_i * so * d_o - p.k;
}

double snell_residual(const OvalParams& p, const BranchPlan& plan, double y, double h) {
    const EvalResult em = evaluate(p, plan, y - h);
    const EvalResult e0 = evaluate(p, plan, y);
    const EvalResult ep = evaluate(p, plan, y + h);
    if (em.region != Region::Exact || e0.region != Region::Exact ||
        ep.region != Region::Exact)
        throw Error(Errc::Precondition,
                    "snell_residual: stencil leaves the exact region", y);

    const double dzdy = (ep.z - em.z) / (2.0 * h);
    const double phi = std::atan(-dzdy);
    const double z = e0.z;
    const double zi = p.epsilon / p.eta_i;
    const double zo = p.epsilon / p.eta_o;
    const double si = zi < z ? -1.0 : 1.0;
    const double so = zo < z ? -1.0 : 1.0;
    const double di = std::hypot(z - zi, y);
    const double d_o = std::hypot(z - zo, y);
    const double sin_t = si * y / di, cos_t = si * (z - zi) / di;
    const double sin_tp = so * y / d_o, cos_tp = so * (z - zo) / d_o;
    const double sphi = std::sin(phi), cphi = std::cos(phi);
    return (sphi * cos_t - cphi * sin_t) - p.m * (sphi * cos_tp - cphi * sin_tp);
}

}  // namespace superconic
