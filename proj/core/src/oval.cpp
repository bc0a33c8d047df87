#include "superconic/oval.hpp"

#include <algorithm>
#include <cmath>

#include "superconic/errors.hpp"

namespace superconic {

namespace {

OvalParams derive(double m, double eta_i, double eta_o, double epsilon) {
    OvalParams p{};
    p.m = m;
    p.eta_i = eta_i;
    p.eta_o = eta_o;
    p.epsilon = epsilon;
    p.k = epsilon * (eta_o - m * eta_i);
    p.kappa = p.k / (eta_i * eta_o);
    p.sigma = (1.0 + m) * eta_i * eta_i - 2.0 * eta_i * eta_o;
    p.delta = (1.0 + m) * eta_o * eta_o - 2.0 * m * eta_i * eta_o;
    p.c0 = (eta_i - m * eta_o) / (epsilon * (1.0 - m));
    return p;
}

}  // namespace

ValidationResult validate_params(double m, double eta_i, double eta_o, double epsilon) {
    if (!std::isfinite(m) || !std::isfinite(eta_i) || !std::isfinite(eta_o) ||
        !std::isfinite(epsilon)) {
        throw Error(Errc::InvalidInput, "validate_params: non-finite input");
    }
    if (m <= 0.0) throw Error(Errc::InvalidInput, "validate_params: m must be > 0");
    if (epsilon <= 0.0) throw Error(Errc::InvalidInput, "validate_params: epsilon must be > 0");

    constexpr double tol = 1e-14;
    if (std::abs(m - 1.0) <= tol) return DegenerateKind::MUnity;
    if (std::abs(eta_i) <= tol) return DegenerateKind::EtaIZero;
    if (std::abs(eta_o) <= tol) return DegenerateKind::EtaOZero;
    if (std::abs(eta_i - eta_o) <= tol * std::max(std::abs(eta_i), std::abs(eta_o)))
        return DegenerateKind::EtaEqual;
    const double k = epsilon * (eta_o - m * eta_i);
    if (std::abs(k) <= tol * epsilon * std::max(std::abs(eta_i) * m, std::abs(eta_o)))
        return DegenerateKind::KZero;

    return derive(m, eta_i, eta_o, epsilon);
}

QuarticCoeffs quartic_coeffs(const OvalParams& p) {
    const double m = p.m, ei = p.eta_i, eo = p.eta_o, eps = p.epsilon, k = p.k;
    QuarticCoeffs q{};
    q.a2 = 4.0 * k * k * m * m;
    q.a1 = -2.0 * q.a2 * eps * ei;
    q.a0 = {q.a2 * eps * eps * ei * ei, q.a2 * ei * ei * eo * eo};
    q.b2 = 1.0 - m * m;
    q.b1 = -2.0 * eps * (eo - m * m * ei);
    q.b0 = {eps * eps * (eo * eo - m * m * ei * ei) - k * k,
            (1.0 - m * m) * ei * ei * eo * eo};
    return q;
}

ResolventCoeffs resolvent_coeffs(const OvalParams& p) {
    const double m = p.m, ei = p.eta_i, eo = p.eta_o, eps = p.epsilon;
    const double e2 = eps * eps;
    const double kml = eo - m * ei;  // k / epsilon
    ResolventCoeffs r{};
    r.a = 1.0 - m * m;
    r.b = {2.0 * e2 * (m - 1.0) *
               (eo * eo * (1.0 + m) + 2.0 * ei * ei * m * m * (1.0 + m) -
                2.0 * ei * eo * m * (1.0 + 2.0 * m)),
           2.0 * ei * ei * eo * eo * (m * m - 1.0) * (m * m - 1.0)};
    r.c = {4.0 * e2 * e2 * m * m * (1.0 - m) * ei * (ei - 2.0 * eo + m * ei) * kml * kml,
           8.0 * e2 * m * m * (1.0 - m * m) * ei * ei * eo * eo * kml * kml};
    r.d_y2 = 8.0 * e2 * e2 * m * m * m * m * ei * ei * eo * eo * kml * kml * kml * kml;
    return r;
}

OvalParams swap_form(const OvalParams& p) {
    return derive(1.0 / p.m, p.eta_o, p.eta_i, p.epsilon);
}

double eta_o_from_curvature(double c0, double m, double eta_i, double epsilon) {
    return (eta_i - epsilon * (1.0 - m) * c0) / m;
}

}  // namespace superconic
