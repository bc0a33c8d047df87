#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace superconic {

enum class Errc {
    InvalidInput,      // non-finite or out-of-domain constructor arguments
    DegenerateCubic,   // leading cubic coefficient is zero
    InvalidBranch,     // branch/discriminant-sign mismatch
    FactorDomain,      // a2 + 2*lambda*b2 <= 0, quadratic factorization impossible
    VanishingFactor,   // |p_plus| or |p_minus| below tolerance
    BranchPlanMismatch,// segments do not meet continuously
    DiscRootCount,     // more positive discriminant roots than the theory allows
    OracleAmbiguity,   // root tracking cannot disambiguate after refinement
    Precondition       // generic precondition violation
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg,
          double where = std::numeric_limits<double>::quiet_NaN())
        : std::runtime_error(msg), code_(code), where_(where) {}

    Errc code() const noexcept { return code_; }
    // y (or other abscissa) at which the failure occurred, NaN if not positional
    double where() const noexcept { return where_; }

private:
    Errc code_;
    double where_;
};

}  // namespace superconic
