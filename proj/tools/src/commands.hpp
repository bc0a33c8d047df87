#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "curve_spec.hpp"

namespace superconic::cli {

// Exit codes shared by all commands.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFail = 1;
inline constexpr int kInvalid = 2;
inline constexpr int kIoError = 3;

// Writes one curve as CSV (or a JSON array when format == "json") to `out`,
// diagnostics to `err`.
int cmd_sample(const CurveSpec& spec, const std::string& format, std::ostream& out,
               std::ostream& err);

// Emits family.json and family.svg into out_dir.
int cmd_family(const CurveSpec& spec, const std::string& out_dir, std::ostream& err);

// Runs the requested oracle suites against an oval spec; one summary line per
// suite on `out`. Empty `suites` runs all of them.
int cmd_verify(const CurveSpec& spec, const std::vector<std::string>& suites,
               std::ostream& out, std::ostream& err);

// Convergence table for the conic limits: sweeps eta_i at fixed eta_o
// (ellipse limit) or eta_o at fixed eta_i (hyperbola limit).
int cmd_limits(const CurveSpec& spec, const std::vector<double>& sweep, std::ostream& out,
               std::ostream& err);

// 17-significant-digit formatting; parses back to the identical double.
std::string fmt17(double v);

}  // namespace superconic::cli
