#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "superconic/conic.hpp"
#include "superconic/errors.hpp"
#include "superconic/oracle.hpp"
#include "superconic/oval.hpp"
#include "superconic/resolvent.hpp"
#include "superconic/solution.hpp"

namespace superconic::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string fmt2(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::vector<double> make_grid(double y_max, int samples) {
    std::vector<double> ys(samples);
    for (int i = 0; i < samples; ++i) ys[i] = y_max * i / (samples - 1);
    return ys;
}

double even_poly(const std::vector<double>& f, double y) {
    const double y2 = y * y;
    double poly = 0.0;
    for (std::size_t i = f.size(); i-- > 0;) poly = (poly + f[i]) * y2;
    return poly * y2;
}

std::optional<OvalParams> validated_oval(const CurveSpec& spec, std::ostream& err) {
    const ValidationResult v =
        validate_params(*spec.m, *spec.eta_i, *spec.eta_o, *spec.epsilon);
    if (const OvalParams* p = std::get_if<OvalParams>(&v)) return *p;
    const char* names[] = {"k = 0", "m = 1", "eta-i = eta-o", "eta-i = 0", "eta-o = 0"};
    err << "degenerate parameters (" << names[int(std::get<DegenerateKind>(v))]
        << "): not a quartic oval\n";
    return std::nullopt;
}

struct Row {
    double y = 0.0;
    double z = 0.0;
    std::string region;
    std::string branch = "-";
    std::optional<double> lambda;
    double one_minus_ab = 0.0;
    double residual = 0.0;
    bool ok = true;
};

std::vector<Row> sample_rows(const CurveSpec& spec, CurveKind kind, std::ostream& err,
                             bool* failed) {
    *failed = false;
    const std::vector<double> ys = make_grid(spec.y_max, spec.samples);
    std::vector<Row> rows;
    rows.reserve(ys.size());

    if (kind == CurveKind::Conic) {
        const ConicParams c{*spec.c0, *spec.K};
        for (double y : ys) {
            const ConicSag s = conic_sag(c, y);
            Row r;
            r.y = y;
            r.z = s.z + even_poly(spec.asphere, y);
            r.region = to_string(s.region);
            r.one_minus_ab = 1.0 - (1.0 + c.K) * c.c0 * c.c0 * y * y;
            r.residual = conic_implicit_residual(c, s.z, y);
            rows.push_back(std::move(r));
        }
        return rows;
    }

    const std::optional<OvalParams> p = validated_oval(spec, err);
    if (!p) {
        *failed = true;
        return rows;
    }
    try {
        const BranchPlan plan = build_branch_plan(*p, spec.y_max);
        for (const CurveSample& s : evaluate_grid(*p, plan, ys)) {
            Row r;
            r.y = s.y;
            if (s.ok) {
                r.z = s.eval.z + even_poly(spec.asphere, s.y);
                r.region = to_string(s.eval.region);
                r.branch = to_string(s.eval.branch);
                r.lambda = s.eval.lambda;
                r.one_minus_ab = s.eval.one_minus_ab;
                r.residual = s.residual_quartic;
            } else {
                r.ok = false;
                r.region = "error";
                r.z = std::numeric_limits<double>::quiet_NaN();
                r.one_minus_ab = r.residual = std::numeric_limits<double>::quiet_NaN();
            }
            rows.push_back(std::move(r));
        }
    } catch (const Error& e) {
        err << "evaluation failed: " << e.what() << "\n";
        *failed = true;
    }
    return rows;
}

}  // namespace

int cmd_sample(const CurveSpec& spec, const std::string& format, std::ostream& out,
               std::ostream& err) {
    const KindResult kr = resolve_kind(spec);
    if (!kr.ok) {
        err << kr.error << "\n";
        return kInvalid;
    }
    if (kr.kind == CurveKind::Family) {
        err << "sample takes a single curve; use the family command\n";
        return kInvalid;
    }
    bool failed = false;
    const std::vector<Row> rows = sample_rows(spec, kr.kind, err, &failed);
    if (failed) return kInvalid;

    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const Row& r : rows) {
            ordered_json o;
            o["y"] = r.y;
            o["z"] = r.z;
            o["region"] = r.region;
            o["branch"] = r.branch;
            if (r.lambda)
                o["lambda"] = *r.lambda;
            else
                o["lambda"] = nullptr;
            o["one_minus_AB"] = r.one_minus_ab;
            o["residual_quartic"] = r.residual;
            arr.push_back(std::move(o));
        }
        out << arr.dump(2) << "\n";
        return kOk;
    }
    if (format != "csv") {
        err << "unsupported format for sample: " << format << "\n";
        return kInvalid;
    }
    out << "y,z,region,branch,lambda,one_minus_AB,residual_quartic\n";
    for (const Row& r : rows) {
        out << fmt17(r.y) << ',' << fmt17(r.z) << ',' << r.region << ',' << r.branch << ','
            << (r.lambda ? fmt17(*r.lambda) : std::string()) << ',' << fmt17(r.one_minus_ab)
            << ',' << fmt17(r.residual) << "\n";
    }
    return kOk;
}

namespace {

struct Polyline {
    std::vector<std::pair<double, double>> pts;  // (z, y)
    bool dashed = false;
    std::string label;
};

void svg_document(const std::vector<Polyline>& curves, std::ostream& out) {
    constexpr double kW = 800.0, kH = 600.0, kMargin = 50.0;
    double zmin = 0.0, zmax = 0.0, ymin = 0.0, ymax = 0.0;
    bool first = true;
    for (const Polyline& c : curves)
        for (auto [z, y] : c.pts) {
            if (first) {
                zmin = zmax = z;
                ymin = ymax = y;
                first = false;
            }
            zmin = std::min(zmin, z);
            zmax = std::max(zmax, z);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    const double zpad = 0.05 * std::max(zmax - zmin, 1e-12);
    const double ypad = 0.05 * std::max(ymax - ymin, 1e-12);
    zmin -= zpad;
    zmax += zpad;
    ymin -= ypad;
    ymax += ypad;
    const auto px = [&](double z) {
        return kMargin + (z - zmin) / (zmax - zmin) * (kW - 2.0 * kMargin);
    };
    const auto py = [&](double y) {
        return kH - kMargin - (y - ymin) / (ymax - ymin) * (kH - 2.0 * kMargin);
    };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
           "viewBox=\"0 0 800 600\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
    // axes through the origin when visible
    if (zmin < 0.0 && zmax > 0.0) {
        out << "<line x1=\"" << fmt2(px(0)) << "\" y1=\"" << fmt2(py(ymin)) << "\" x2=\""
            << fmt2(px(0)) << "\" y2=\"" << fmt2(py(ymax))
            << "\" stroke=\"#888888\" stroke-width=\"0.5\"/>\n";
    }
    if (ymin < 0.0 && ymax > 0.0) {
        out << "<line x1=\"" << fmt2(px(zmin)) << "\" y1=\"" << fmt2(py(0)) << "\" x2=\""
            << fmt2(px(zmax)) << "\" y2=\"" << fmt2(py(0))
            << "\" stroke=\"#888888\" stroke-width=\"0.5\"/>\n";
    }
    out << "<text x=\"" << fmt2(kW - kMargin + 8) << "\" y=\"" << fmt2(py(0.0) + 4)
        << "\" font-size=\"14\">z</text>\n";
    out << "<text x=\"" << fmt2(px(0.0) - 4) << "\" y=\"" << fmt2(kMargin - 10)
        << "\" font-size=\"14\">y</text>\n";

    for (const Polyline& c : curves) {
        out << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\"";
        if (c.dashed) out << " stroke-dasharray=\"6 4\"";
        out << " points=\"";
        bool sep = false;
        for (auto [z, y] : c.pts) {
            if (sep) out << ' ';
            out << fmt2(px(z)) << ',' << fmt2(py(y));
            sep = true;
        }
        out << "\"/>\n";
    }
    double ly = kMargin;
    for (const Polyline& c : curves) {
        out << "<text x=\"" << fmt2(kW - kMargin - 150) << "\" y=\"" << fmt2(ly)
            << "\" font-size=\"12\">" << c.label << (c.dashed ? " (conic)" : "")
            << "</text>\n";
        ly += 16.0;
    }
    out << "</svg>\n";
}

}  // namespace

int cmd_family(const CurveSpec& spec, const std::string& out_dir, std::ostream& err) {
    const KindResult kr = resolve_kind(spec);
    if (!kr.ok || kr.kind != CurveKind::Family) {
        err << (kr.ok ? "family needs (c0, m, epsilon, eta-i list)" : kr.error) << "\n";
        return kInvalid;
    }
    std::vector<FamilyMember> members;
    try {
        members = make_family(*spec.c0, *spec.m, *spec.epsilon, spec.eta_i_list);
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kInvalid;
    }

    ordered_json doc;
    doc["c0"] = *spec.c0;
    doc["m"] = *spec.m;
    doc["epsilon"] = *spec.epsilon;
    doc["y_max"] = spec.y_max;
    doc["samples"] = spec.samples;
    doc["members"] = ordered_json::array();

    std::vector<Polyline> curves;
    const std::vector<double> ys = make_grid(spec.y_max, spec.samples);
    for (const FamilyMember& mem : members) {
        ordered_json jm;
        jm["eta_i"] = mem.eta_i;
        jm["kind"] = to_string(mem.kind);

        Polyline line;
        {
            std::ostringstream label;
            label << "eta_i=" << mem.eta_i;
            line.label = label.str();
        }
        if (mem.kind == FamilyKind::OpticalSolution) {
            const OvalParams& p = std::get<OvalParams>(mem.curve);
            jm["params"] = {{"m", p.m},         {"eta_i", p.eta_i}, {"eta_o", p.eta_o},
                            {"epsilon", p.epsilon}, {"k", p.k},     {"kappa", p.kappa},
                            {"sigma", p.sigma}, {"delta", p.delta}, {"c0", p.c0}};
            try {
                const BranchPlan plan = build_branch_plan(p, spec.y_max);
                for (const CurveSample& s : evaluate_grid(p, plan, ys))
                    if (s.ok) line.pts.emplace_back(s.eval.z, s.y);
            } catch (const Error& e) {
                err << "family member eta_i = " << mem.eta_i
                    << ": evaluation failed: " << e.what() << "\n";
                return kInvalid;
            }
        } else {
            const ConicParams& c = std::get<ConicParams>(mem.curve);
            jm["conic"] = {{"c0", c.c0}, {"K", c.K}};
            line.dashed = true;
            for (double y : ys) line.pts.emplace_back(conic_sag(c, y).z, y);
        }
        // the curve is even in y: mirror to negative aperture
        std::vector<std::pair<double, double>> full;
        for (auto it = line.pts.rbegin(); it != line.pts.rend(); ++it)
            full.emplace_back(it->first, -it->second);
        for (std::size_t i = 1; i < line.pts.size(); ++i) full.push_back(line.pts[i]);
        line.pts = std::move(full);
        curves.push_back(std::move(line));
        doc["members"].push_back(std::move(jm));
    }

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    std::ofstream jf(fs::path(out_dir) / "family.json", std::ios::binary);
    if (!jf) {
        err << "cannot write " << out_dir << "/family.json\n";
        return kIoError;
    }
    jf << doc.dump(2) << "\n";
    std::ofstream sf(fs::path(out_dir) / "family.svg", std::ios::binary);
    if (!sf) {
        err << "cannot write " << out_dir << "/family.svg\n";
        return kIoError;
    }
    svg_document(curves, sf);
    if (!jf.good() || !sf.good()) {
        err << "write failure in " << out_dir << "\n";
        return kIoError;
    }
    return kOk;
}

namespace {

struct SuiteResult {
    std::string name;
    double max_residual = 0.0;
    double tol = 0.0;
    double worst_y = 0.0;
    bool pass = true;
    std::string note;
};

void take(SuiteResult& s, double residual, double y) {
    const double a = std::abs(residual);
    if (a > s.max_residual) {
        s.max_residual = a;
        s.worst_y = y;
    }
}

}  // namespace

int cmd_verify(const CurveSpec& spec, const std::vector<std::string>& suites,
               std::ostream& out, std::ostream& err) {
    const KindResult kr = resolve_kind(spec);
    if (!kr.ok || kr.kind != CurveKind::Oval) {
        err << (kr.ok ? "verify needs an oval spec (m, eta-i, eta-o, epsilon)" : kr.error)
            << "\n";
        return kInvalid;
    }
    const std::optional<OvalParams> p = validated_oval(spec, err);
    if (!p) return kInvalid;

    auto wants = [&](const char* name) {
        return suites.empty() ||
               std::find(suites.begin(), suites.end(), name) != suites.end();
    };

    double y_max = spec.y_max;
    std::vector<double> disc_roots;
    try {
        disc_roots = disc_positive_roots(*p);
        if (spec.y_max == 1.0) {  // default: derive from the first branch switch
            y_max = disc_roots.empty() ? 2.0 : std::min(2.0, 1.5 * disc_roots.front());
        }
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kInvalid;
    }

    std::vector<SuiteResult> results;
    try {
        const BranchPlan plan = build_branch_plan(*p, y_max);
        const std::vector<double> ys = make_grid(y_max, 101);
        const std::vector<CurveSample> samples = evaluate_grid(*p, plan, ys);

        if (wants("quartic")) {
            SuiteResult s;
            s.name = "quartic";
            s.tol = 1e-8;
            for (const CurveSample& cs : samples) {
                if (!cs.ok || cs.eval.region != Region::Exact) continue;
                take(s, cs.residual_quartic, cs.y);
            }
            s.pass = s.max_residual <= s.tol;
            results.push_back(s);

            SuiteResult f;
            f.name = "factor";
            f.tol = 1e-9;
            for (const CurveSample& cs : samples) {
                if (!cs.ok || cs.eval.region != Region::Exact) continue;
                const double z = cs.eval.z;
                const double lam = cs.eval.lambda;
                const ABPair ab = ab_pair(*p, cs.y, lam);
                const bool plus = cs.eval.sign == SolutionSign::Plus;
                const double A = plus ? ab.a_plus : ab.a_minus;
                const double B = plus ? ab.b_plus : ab.b_minus;
                const double scale = 1.0 + std::abs(A * z * z) + 2.0 * std::abs(z) + std::abs(B);
                take(f, (A * z * z - 2.0 * z + B) / scale, cs.y);
            }
            f.pass = f.max_residual <= f.tol;
            results.push_back(f);
        }
        if (wants("tracking")) {
            SuiteResult s;
            s.name = "tracking";
            s.tol = 1e-8;
            const std::vector<double> zs = continuous_root_track(*p, ys);
            for (std::size_t i = 0; i < ys.size(); ++i) {
                if (!samples[i].ok || samples[i].eval.region != Region::Exact) continue;
                if (!std::isfinite(zs[i])) continue;
                take(s, samples[i].eval.z - zs[i], ys[i]);
            }
            s.pass = s.max_residual <= s.tol;
            results.push_back(s);
        }
        if (wants("snell")) {
            SuiteResult s;
            s.name = "snell";
            s.tol = 1e-6;
            const double h = 1e-6;
            int done = 0;
            for (int j = 1; j <= 20; ++j) {
                const double y = y_max * j / 21.0;
                try {
                    take(s, snell_residual(*p, plan, y, h), y);
                    ++done;
                } catch (const Error&) {
                    // stencil fell outside the exact region; skip the point
                }
            }
            s.pass = s.max_residual <= s.tol && done > 0;
            if (done == 0) s.note = " (no usable interior points)";
            results.push_back(s);
        }
        if (wants("symmetry")) {
            SuiteResult s;
            s.name = "symmetry";
            s.tol = 1e-9;
            const OvalParams sw = swap_form(*p);
            const BranchPlan plan_sw = build_branch_plan(sw, y_max);
            for (double y : ys)
                take(s, evaluate(*p, plan, y).z - evaluate(sw, plan_sw, y).z, y);
            s.pass = s.max_residual <= s.tol;
            results.push_back(s);
        }
        if (wants("limits")) {
            SuiteResult s;
            s.name = "limits";
            s.tol = 1e-4;
            if (p->m > 1.0 && std::abs(p->eta_o) > 1e-12) {
                const ConicParams lim =
                    limit_conic_eta_i_zero(p->m, p->eta_o, p->epsilon);
                double prev = std::numeric_limits<double>::infinity();
                bool monotone = true;
                double sup = 0.0;
                for (double ei : {1e-3, 1e-4, 1e-5, 1e-6}) {
                    const ValidationResult v =
                        validate_params(p->m, ei, p->eta_o, p->epsilon);
                    const OvalParams& q = std::get<OvalParams>(v);
                    const BranchPlan qplan = build_branch_plan(q, y_max);
                    sup = 0.0;
                    for (double y : ys) {
                        const EvalResult e = evaluate(q, qplan, y);
                        if (e.region == Region::Exact)
                            sup = std::max(sup, std::abs(e.z - conic_sag(lim, y).z));
                    }
                    monotone = monotone && sup < prev;
                    prev = sup;
                }
                s.max_residual = sup;
                s.pass = monotone && sup <= s.tol;
                if (!monotone) s.note = " (not monotone)";
            } else {
                s.note = " (skipped: needs m > 1 and eta-o != 0)";
            }
            results.push_back(s);
        }
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kInvalid;
    }

    bool all_pass = true;
    for (const SuiteResult& s : results) {
        out << "suite " << s.name << ": max_residual=" << fmt17(s.max_residual)
            << " tol=" << fmt17(s.tol) << (s.pass ? " PASS" : " FAIL");
        if (!s.pass) out << " worst_y=" << fmt17(s.worst_y);
        out << s.note << "\n";
        all_pass = all_pass && s.pass;
    }
    return all_pass ? kOk : kVerifyFail;
}

int cmd_limits(const CurveSpec& spec, const std::vector<double>& sweep, std::ostream& out,
               std::ostream& err) {
    if (!spec.m || !spec.epsilon || (!spec.eta_i && !spec.eta_o) ||
        (spec.eta_i && spec.eta_o)) {
        err << "limits needs --m, --epsilon and exactly one of --eta-i / --eta-o\n";
        return kInvalid;
    }
    if (sweep.empty()) {
        err << "limits needs a --sweep list of positive, decreasing eta values\n";
        return kInvalid;
    }
    for (std::size_t i = 0; i < sweep.size(); ++i) {
        if (!(sweep[i] > 0.0) || (i > 0 && sweep[i] >= sweep[i - 1])) {
            err << "sweep values must be positive and decreasing\n";
            return kInvalid;
        }
    }
    const bool ellipse_mode = spec.eta_o.has_value();  // eta_i -> 0 at fixed eta_o
    const ConicParams lim =
        ellipse_mode ? limit_conic_eta_i_zero(*spec.m, *spec.eta_o, *spec.epsilon)
                     : limit_conic_eta_o_zero(*spec.m, *spec.eta_i, *spec.epsilon);

    const double y_max = spec.y_max == 1.0 ? 2.0 : spec.y_max;
    const std::vector<double> ys = make_grid(y_max, spec.samples);

    out << "eta,sup_exact,sup_interp\n";
    for (double eta : sweep) {
        const double ei = ellipse_mode ? eta : *spec.eta_i;
        const double eo = ellipse_mode ? *spec.eta_o : eta;
        const ValidationResult v = validate_params(*spec.m, ei, eo, *spec.epsilon);
        const OvalParams* p = std::get_if<OvalParams>(&v);
        if (!p) {
            err << "sweep value " << fmt17(eta) << " degenerates the oval\n";
            return kInvalid;
        }
        try {
            const BranchPlan plan = build_branch_plan(*p, y_max);
            double sup_exact = 0.0, sup_interp = 0.0;
            for (double y : ys) {
                const EvalResult e = evaluate(*p, plan, y);
                if (e.region == Region::Exact) {
                    sup_exact = std::max(sup_exact, std::abs(e.z - conic_sag(lim, y).z));
                } else {
                    sup_interp =
                        std::max(sup_interp, std::abs(e.z - lim.c0 * y * y));
                }
            }
            out << fmt17(eta) << ',' << fmt17(sup_exact) << ',' << fmt17(sup_interp)
                << "\n";
        } catch (const Error& e) {
            err << "sweep value " << fmt17(eta) << ": " << e.what() << "\n";
            return kInvalid;
        }
    }
    return kOk;
}

}  // namespace superconic::cli
