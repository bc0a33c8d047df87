#include <doctest.h>

#include <cmath>

#include "superconic/errors.hpp"
#include "superconic/oracle.hpp"
#include "superconic/oval.hpp"
#include "support.hpp"

using namespace sct;

TEST_SUITE_BEGIN("oval");

TEST_CASE("validation populates the derived fields") {
    const OvalParams p = params_of(1.5, 0.3, 0.26, 0.6);
    CHECK(p.k == doctest::Approx(-0.114).epsilon(1e-12));
    CHECK(p.sigma == doctest::Approx(0.069).epsilon(1e-12));
    CHECK(p.delta == doctest::Approx(-0.065).epsilon(1e-12));
    CHECK(p.c0 == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(p.kappa == doctest::Approx(p.k / (0.3 * 0.26)).epsilon(1e-14));
}

TEST_CASE("degenerate classification") {
    CHECK(std::get<DegenerateKind>(validate_params(1.5, 0.18, 0.18, 0.6)) ==
          DegenerateKind::EtaEqual);
    CHECK(std::get<DegenerateKind>(validate_params(1.5, 0.072, 0.108, 0.6)) ==
          DegenerateKind::KZero);
    CHECK(std::get<DegenerateKind>(validate_params(1.0, 0.3, 0.26, 0.6)) ==
          DegenerateKind::MUnity);
    CHECK(std::get<DegenerateKind>(validate_params(1.5, 0.0, 0.26, 0.6)) ==
          DegenerateKind::EtaIZero);
    CHECK(std::get<DegenerateKind>(validate_params(1.5, 0.3, 0.0, 0.6)) ==
          DegenerateKind::EtaOZero);
    // order: m = 1 wins over equal etas
    CHECK(std::get<DegenerateKind>(validate_params(1.0, 0.18, 0.18, 0.6)) ==
          DegenerateKind::MUnity);
}

TEST_CASE("invalid inputs throw") {
    CHECK_THROWS_AS(validate_params(-1.0, 0.3, 0.26, 0.6), Error);
    CHECK_THROWS_AS(validate_params(1.5, 0.3, 0.26, 0.0), Error);
    CHECK_THROWS_AS(validate_params(std::nan(""), 0.3, 0.26, 0.6), Error);
    try {
        validate_params(-1.0, 0.3, 0.26, 0.6);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InvalidInput);
    }
}

TEST_CASE("quartic coefficients") {
    const OvalParams p = params_of(1.5, 0.3, 0.26, 0.6);
    const QuarticCoeffs q = quartic_coeffs(p);
    CHECK(q.a2 == doctest::Approx(0.1169640).epsilon(1e-10));
    CHECK(q.a1 == doctest::Approx(-0.04210704).epsilon(1e-10));
    CHECK(q.b2 == doctest::Approx(-1.25).epsilon(1e-14));
    CHECK(q.b1 == doctest::Approx(0.498).epsilon(1e-12));
    CHECK(q.b0.at(0.0) == doctest::Approx(-0.06156).epsilon(1e-10));

    ParamGen gen(11);
    for (int i = 0; i < 100; ++i) {
        const OvalParams r = gen.next();
        const QuarticCoeffs qr = quartic_coeffs(r);
        CHECK(qr.a2 > 0.0);
        CHECK(qr.a0.at(0.0) ==
              doctest::Approx(qr.a2 * r.epsilon * r.epsilon * r.eta_i * r.eta_i)
                  .epsilon(1e-14));
    }
}

TEST_CASE("expanded quartic matches the squared form") {
    ParamGen gen(12);
    for (int i = 0; i < 200; ++i) {
        const OvalParams p = gen.next();
        const double y = gen.uniform(0.0, 1.5);
        const QuarticCoeffs q = quartic_coeffs(p);
        const QuarticPoly poly = quartic_poly(p, y);
        const double x = gen.uniform(-0.6, 0.6);
        const double lhs = (q.b2 * x + q.b1) * x + q.b0.at(y);
        const double direct = lhs * lhs - ((q.a2 * x + q.a1) * x + q.a0.at(y));
        CHECK(poly.at(x) == doctest::Approx(direct).epsilon(1e-12).scale(poly.scale_at(x)));
    }
}

TEST_CASE("resolvent closed form equals the generic composition") {
    ParamGen gen(13);
    for (int i = 0; i < 300; ++i) {
        const OvalParams p = gen.next();
        const double y = gen.uniform(0.0, 2.0);
        const QuarticCoeffs q = quartic_coeffs(p);
        const double a0 = q.a0.at(y), b0 = q.b0.at(y);
        // composition route, divided by 8
        const double a = q.b2;
        const double b = (q.a2 + 4.0 * q.b2 * b0 - q.b1 * q.b1) / 2.0;
        const double c = q.a2 * b0 + a0 * q.b2 - q.a1 * q.b1 / 2.0;
        const double d = q.a2 * a0 / 2.0 - q.a1 * q.a1 / 8.0;

        const CubicCoeffs cf = resolvent_coeffs(p).at(y);
        CHECK(cf.a == doctest::Approx(a).epsilon(1e-12));
        CHECK(cf.b == doctest::Approx(b).epsilon(1e-12));
        CHECK(cf.c == doctest::Approx(c).epsilon(1e-12).scale(std::abs(q.a2 * b0) +
                                                              std::abs(a0 * q.b2) +
                                                              std::abs(q.a1 * q.b1)));
        CHECK(cf.d == doctest::Approx(d).epsilon(1e-12).scale(
                          std::abs(q.a2 * a0) / 2.0 + q.a1 * q.a1 / 8.0));
    }
}

TEST_CASE("resolvent structure") {
    ParamGen gen(14);
    for (int i = 0; i < 50; ++i) {
        const OvalParams p = gen.next();
        const ResolventCoeffs rc = resolvent_coeffs(p);
        CHECK(rc.at(0.0).d == 0.0);
        CHECK(rc.a == doctest::Approx(1.0 - p.m * p.m).epsilon(1e-14));
    }
    CHECK(resolvent_coeffs(params_of(1.5, 0.3, 0.26, 0.6)).a ==
          doctest::Approx(-1.25).epsilon(1e-14));
}

TEST_CASE("swap form") {
    const OvalParams p = params_of(1.5, 0.3, 0.26, 0.6);
    const OvalParams s = swap_form(p);
    CHECK(s.m == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(s.eta_i == 0.26);
    CHECK(s.eta_o == 0.3);
    CHECK(s.epsilon == 0.6);

    const OvalParams ss = swap_form(s);
    CHECK(ss.m == doctest::Approx(p.m).epsilon(1e-15));
    CHECK(ss.eta_i == p.eta_i);
    CHECK(ss.eta_o == p.eta_o);

    ParamGen gen(15);
    for (int i = 0; i < 100; ++i) {
        const OvalParams q = gen.next();
        CHECK(swap_form(q).c0 == doctest::Approx(q.c0).epsilon(1e-12));
    }
}

TEST_CASE("eta_o from curvature") {
    CHECK(eta_o_from_curvature(0.3, 1.5, 0.3, 0.6) == doctest::Approx(0.26).epsilon(1e-14));
    CHECK(eta_o_from_curvature(0.3, 1.5, 0.0, 0.6) == doctest::Approx(0.06).epsilon(1e-14));
    const double eo = eta_o_from_curvature(0.3, 1.5, -0.09, 0.6);
    CHECK(eo == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK(std::get<DegenerateKind>(validate_params(1.5, -0.09, eo, 0.6)) ==
          DegenerateKind::EtaOZero);

    ParamGen gen(16);
    for (int i = 0; i < 100; ++i) {
        const OvalParams p = gen.next();
        const double back = eta_o_from_curvature(p.c0, p.m, p.eta_i, p.epsilon);
        CHECK(back == doctest::Approx(p.eta_o).epsilon(1e-12));
    }
}

TEST_SUITE_END();
