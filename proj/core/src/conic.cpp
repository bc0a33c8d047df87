#include "superconic/conic.hpp"

#include <cmath>

#include "superconic/errors.hpp"

namespace superconic {

const char* to_string(FamilyKind k) noexcept {
    switch (k) {
        case FamilyKind::OpticalSolution: return "optical_solution";
        case FamilyKind::Circle: return "circle";
        case FamilyKind::Ellipse: return "ellipse";
        case FamilyKind::Hyperbola: return "hyperbola";
    }
    return "?";
}

ConicSag conic_sag(const ConicParams& c, double y) {
    const double t = 1.0 - (1.0 + c.K) * c.c0 * c.c0 * y * y;
    if (t >= 0.0) return {c.c0 * y * y / (1.0 + std::sqrt(t)), Region::Exact};
    return {c.c0 * y * y, Region::Interpolated};
}

double conic_implicit_residual(const ConicParams& c, double z, double y) {
    return (1.0 + c.K) * c.c0 * z * z - 2.0 * z + c.c0 * y * y;
}

double asphere_sag(const Asphere& a, double y) {
    const double y2 = y * y;
    double poly = 0.0;
    for (std::size_t i = a.f.size(); i-- > 0;) poly = (poly + a.f[i]) * y2;
    poly *= y2;
    return conic_sag(a.conic, y).z + poly;
}

ConicParams limit_conic_eta_i_zero(double m, double eta_o, double epsilon) {
    return {eta_o / (epsilon * (1.0 - 1.0 / m)), -1.0 / (m * m)};
}

ConicParams limit_conic_eta_o_zero(double m, double eta_i, double epsilon) {
    return {eta_i / (epsilon * (1.0 - m)), -m * m};
}

std::vector<FamilyMember> make_family(double c0, double m, double epsilon,
                                      std::span<const double> eta_i_list) {
    if (!(m > 1.0)) throw Error(Errc::InvalidInput, "make_family: m must be > 1");
    if (!(epsilon > 0.0)) throw Error(Errc::InvalidInput, "make_family: epsilon must be > 0");

    std::vector<FamilyMember> out;
    out.reserve(eta_i_list.size());
    for (double ei : eta_i_list) {
        const double eo = eta_o_from_curvature(c0, m, ei, epsilon);
        FamilyMember member{ei, FamilyKind::OpticalSolution, ConicParams{c0, 0.0}};
        const ValidationResult v = validate_params(m, ei, eo, epsilon);
        if (const OvalParams* p = std::get_if<OvalParams>(&v)) {
            member.curve = *p;
        } else {
            switch (std::get<DegenerateKind>(v)) {
                case DegenerateKind::EtaIZero:
                    member.kind = FamilyKind::Ellipse;
                    member.curve = ConicParams{c0, -1.0 / (m * m)};
                    break;
                case DegenerateKind::EtaOZero:
                    member.kind = FamilyKind::Hyperbola;
                    member.curve = ConicParams{c0, -m * m};
                    break;
                case DegenerateKind::EtaEqual:
                case DegenerateKind::KZero:
                    member.kind = FamilyKind::Circle;
                    member.curve = ConicParams{c0, 0.0};
                    break;
                case DegenerateKind::MUnity:
                    // unreachable: m > 1 was checked above
                    throw Error(Errc::InvalidInput, "make_family: degenerate m");
            }
        }
        out.push_back(std::move(member));
    }
    return out;
}

}  // namespace superconic
