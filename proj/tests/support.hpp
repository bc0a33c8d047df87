#pragma once

#include <cmath>
#include <random>
#include <variant>
#include <vector>

#include "superconic/oval.hpp"

namespace sct {

using namespace superconic;

// Fig.-1 style family member: c0 = 0.3, m = 1.5, epsilon = 0.6.
inline OvalParams member(double eta_i) {
    const double eta_o = eta_o_from_curvature(0.3, 1.5, eta_i, 0.6);
    return std::get<OvalParams>(validate_params(1.5, eta_i, eta_o, 0.6));
}

inline OvalParams params_of(double m, double ei, double eo, double eps) {
    return std::get<OvalParams>(validate_params(m, ei, eo, eps));
}

// Random parameters with m in (1, 3], eta in [-0.5, 0.5], kept away from the
// degenerate manifolds where the quartic machinery is ill-conditioned.
class ParamGen {
public:
    explicit ParamGen(std::uint64_t seed) : rng_(seed) {}

    OvalParams next() {
        std::uniform_real_distribution<double> um(1.01, 3.0);
        std::uniform_real_distribution<double> ue(-0.5, 0.5);
        for (;;) {
            const ValidationResult v = validate_params(um(rng_), ue(rng_), ue(rng_), 0.6);
            const OvalParams* p = std::get_if<OvalParams>(&v);
            if (!p) continue;
            if (std::abs(p->eta_i) < 0.02 || std::abs(p->eta_o) < 0.02) continue;
            if (std::abs(p->eta_i - p->eta_o) < 0.01) continue;
            if (std::abs(p->k) < 1e-3) continue;
            if (std::abs(p->sigma) < 1e-3 || std::abs(p->delta) < 1e-3) continue;
            return *p;
        }
    }

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng_);
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline std::vector<double> grid(double y_max, int n) {
    std::vector<double> ys(n);
    for (int i = 0; i < n; ++i) ys[i] = y_max * i / (n - 1);
    return ys;
}

}  // namespace sct
