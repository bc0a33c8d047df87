// Acceptance suite: runs every top-level requirement at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exits nonzero if any fail.
//
// Usage: superconic_acceptance [path-to-cli-binary]

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "superconic/conic.hpp"
#include "superconic/errors.hpp"
#include "superconic/oracle.hpp"
#include "superconic/oval.hpp"
#include "superconic/resolvent.hpp"
#include "superconic/solution.hpp"

using namespace superconic;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int id;
    std::string name;
    bool pass;
    std::string detail;
};

std::vector<Outcome> g_results;

void record(int id, const std::string& name, const std::function<std::string()>& body) {
    Outcome o{id, name, true, ""};
    try {
        o.detail = body();  // empty string = pass, otherwise failure detail
        o.pass = o.detail.empty();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    g_results.push_back(std::move(o));
}

std::vector<double> make_grid(double y_max, int n) {
    std::vector<double> ys(n);
    for (int i = 0; i < n; ++i) ys[i] = y_max * i / (n - 1);
    return ys;
}

OvalParams fig1_member(double eta_i) {
    const double eta_o = eta_o_from_curvature(0.3, 1.5, eta_i, 0.6);
    return std::get<OvalParams>(validate_params(1.5, eta_i, eta_o, 0.6));
}

const double kFig1Etas[6] = {0.3, 0.15, 0.01, -0.01, -0.15, -0.3};

// random parameters in the stated box, excluding degeneracies and their
// ill-conditioned neighbourhoods
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}
    OvalParams next() {
        std::uniform_real_distribution<double> um(1.0 + 1e-2, 3.0);
        std::uniform_real_distribution<double> ue(-0.5, 0.5);
        for (;;) {
            const ValidationResult v = validate_params(um(rng_), ue(rng_), ue(rng_), 0.6);
            const OvalParams* p = std::get_if<OvalParams>(&v);
            if (!p) continue;
            if (std::abs(p->eta_i) < 0.02 || std::abs(p->eta_o) < 0.02) continue;
            if (std::abs(p->eta_i - p->eta_o) < 0.01) continue;
            if (std::abs(p->k) < 1e-3 || std::abs(p->sigma) < 1e-3 ||
                std::abs(p->delta) < 1e-3)
                continue;
            return *p;
        }
    }
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng_);
    }

private:
    std::mt19937_64 rng_;
};

double criterion_y_max(const OvalParams& p) {
    const std::vector<double> roots = disc_positive_roots(p);
    return roots.empty() ? 2.0 : std::min(2.0, 1.5 * roots.front());
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string shell_quote(const std::string& s) { return "'" + s + "'"; }

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    record(1, "origin membership for random parameter sets", [] {
        Gen gen(1001);
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            const OvalParams p = gen.next();
            const BranchPlan plan = build_branch_plan(p, criterion_y_max(p));
            worst = std::max(worst, std::abs(evaluate(p, plan, 0.0).z));
        }
        if (worst > 1e-12)
            return "max |z(0)| = " + std::to_string(worst) + " exceeds 1e-12";
        return std::string();
    });

    record(2, "quartic membership on random curves", [] {
        Gen gen(1002);
        double worst_q = 0.0, worst_f = 0.0;
        for (int i = 0; i < 200; ++i) {
            const OvalParams p = gen.next();
            const double y_max = criterion_y_max(p);
            const BranchPlan plan = build_branch_plan(p, y_max);
            const std::vector<double> ys = make_grid(y_max, 101);
            for (const CurveSample& s : evaluate_grid(p, plan, ys)) {
                if (!s.ok || s.eval.region != Region::Exact) continue;
                worst_q = std::max(worst_q, std::abs(s.residual_quartic));
                const ABPair ab = ab_pair(p, s.y, s.eval.lambda);
                const bool plus = s.eval.sign == SolutionSign::Plus;
                const double a = plus ? ab.a_plus : ab.a_minus;
                const double b = plus ? ab.b_plus : ab.b_minus;
                const double scale =
                    1.0 + std::abs(a * s.eval.z * s.eval.z) + 2.0 * std::abs(s.eval.z) +
                    std::abs(b);
                worst_f = std::max(worst_f,
                                   std::abs(a * s.eval.z * s.eval.z - 2.0 * s.eval.z + b) /
                                       scale);
            }
        }
        std::ostringstream os;
        if (worst_q > 1e-8) os << "quartic residual " << worst_q << " > 1e-8; ";
        if (worst_f > 1e-9) os << "factor residual " << worst_f << " > 1e-9";
        return os.str();
    });

    record(3, "closed form agrees with the tracked quartic root (C1..C6)", [] {
        double worst = 0.0;
        for (double ei : kFig1Etas) {
            const OvalParams p = fig1_member(ei);
            const double y_max = criterion_y_max(p);
            const BranchPlan plan = build_branch_plan(p, y_max);
            const std::vector<double> ys = make_grid(y_max, 101);
            const std::vector<double> zs = continuous_root_track(p, ys);
            for (std::size_t i = 0; i < ys.size(); ++i) {
                const EvalResult e = evaluate(p, plan, ys[i]);
                if (e.region != Region::Exact) continue;
                if (!std::isfinite(zs[i])) return std::string("tracker lost the branch");
                worst = std::max(worst, std::abs(e.z - zs[i]));
            }
        }
        if (worst > 1e-8)
            return "max |z - track| = " + std::to_string(worst) + " exceeds 1e-8";
        return std::string();
    });

    record(4, "vertex curvature c0 = 0.3 for every family member", [] {
        const double h = 1e-3;
        double worst = 0.0;
        for (double ei : kFig1Etas) {
            const OvalParams p = fig1_member(ei);
            const BranchPlan plan = build_branch_plan(p, 1.0);
            const double fd = (evaluate(p, plan, h).z - 2.0 * evaluate(p, plan, 0.0).z +
                               evaluate(p, plan, -h).z) /
                              (h * h);
            worst = std::max(worst, std::abs(fd - 0.3) / 0.3);
        }
        if (worst > 1e-4)
            return "relative curvature error " + std::to_string(worst) + " exceeds 1e-4";
        return std::string();
    });

    record(5, "resolvent roots, small-y growth and trig ordering", [] {
        // lambda(0) = (0, 2k^2, 2 eps^2 m^2 sigma/(1+m)) as cubic roots
        Gen gen(1005);
        for (int i = 0; i < 50; ++i) {
            const OvalParams p = gen.next();
            const LambdaTriple l = lambda_at_zero(p);
            const CubicCoeffs c = resolvent_coeffs(p).at(0.0);
            const double scale =
                std::max({std::abs(c.a), std::abs(c.b), std::abs(c.c), std::abs(c.d)});
            for (double lam : {l.l01, l.l02, l.l03}) {
                const double v = ((c.a * lam + c.b) * lam + c.c) * lam + c.d;
                if (std::abs(v) > 1e-10 * scale)
                    return std::string("lambda(0) is not a resolvent root");
            }
        }
        // growth at y = 1e-3 against the y^2 coefficients, for the family set
        for (double ei : kFig1Etas) {
            const OvalParams p = fig1_member(ei);
            const double y = 1e-3;
            const ResolventCoeffs rc = resolvent_coeffs(p);
            const CubicClassification cls = classify(rc.at(y));
            const LambdaTriple l0 = lambda_at_zero(p);
            // match each trig branch to its y=0 root by ordering
            struct Pair {
                double l0;
                int which;
            };
            std::vector<Pair> ordered = {{l0.l01, 1}, {l0.l02, 2}, {l0.l03, 3}};
            std::sort(ordered.begin(), ordered.end(),
                      [](const Pair& a, const Pair& b) { return a.l0 < b.l0; });
            const LambdaBranch by_rank[3] = {LambdaBranch::TrigC, LambdaBranch::TrigB,
                                             LambdaBranch::TrigA};
            for (int rank = 0; rank < 3; ++rank) {
                const double l2 = lambda_y2_correction(p, ordered[rank].which);
                const double lam = cubic_root(cls, by_rank[rank], rc.a, rc.b.at(y));
                if (std::abs(lam - ordered[rank].l0 - l2 * y * y) > 1e-3 * std::abs(l2) * y * y)
                    return std::string("small-y lambda growth off at eta_i = ") +
                           std::to_string(ei);
            }
        }
        // ordering over 1000 random three-real-root cubics
        int seen = 0;
        while (seen < 1000) {
            const double a = gen.uniform(0.5, 2.0) * (gen.uniform(0, 1) < 0.5 ? -1 : 1);
            const double b = gen.uniform(-3, 3), c = gen.uniform(-3, 3), d = gen.uniform(-3, 3);
            const CubicClassification cls = classify(a, b, c, d);
            if (!(cls.disc < -cls.disc_tol)) continue;
            ++seen;
            const double la = cubic_root(cls, LambdaBranch::TrigA, a, b);
            const double lb = cubic_root(cls, LambdaBranch::TrigB, a, b);
            const double lc = cubic_root(cls, LambdaBranch::TrigC, a, b);
            if (!(lc <= lb + 1e-14 && lb <= la + 1e-14))
                return std::string("trig root ordering violated");
        }
        return std::string();
    });

    record(6, "continuity across branch switches, final branch trigC (C1)", [] {
        const OvalParams c1 = fig1_member(0.3);
        const std::vector<double> roots = disc_positive_roots(c1);
        if (roots.size() != 2) return std::string("expected two switches for C1");
        const BranchPlan plan = build_branch_plan(c1, 3.5);
        for (double y0 : roots) {
            const double jump =
                std::abs(evaluate(c1, plan, y0 + 1e-6).z - evaluate(c1, plan, y0 - 1e-6).z);
            if (jump > 1e-6)
                return "jump " + std::to_string(jump) + " at y = " + std::to_string(y0);
        }
        if (plan.segments.back().branch != LambdaBranch::TrigC)
            return std::string("final segment is not trigC");
        return std::string();
    });

    record(7, "ellipse limit of the oval (eta_i -> 0)", [] {
        const ConicParams lim = limit_conic_eta_i_zero(1.5, 0.26, 0.6);
        const std::vector<double> ys = make_grid(2.0, 101);
        double prev = 1e300, sup_exact = 0.0, sup_interp = 0.0;
        for (double ei : {1e-3, 1e-4, 1e-5, 1e-6}) {
            const OvalParams p =
                std::get<OvalParams>(validate_params(1.5, ei, 0.26, 0.6));
            const BranchPlan plan = build_branch_plan(p, 2.0);
            sup_exact = sup_interp = 0.0;
            for (double y : ys) {
                const EvalResult e = evaluate(p, plan, y);
                if (e.region == Region::Exact)
                    sup_exact = std::max(sup_exact, std::abs(e.z - conic_sag(lim, y).z));
                else
                    sup_interp = std::max(sup_interp, std::abs(e.z - lim.c0 * y * y));
            }
            if (sup_exact >= prev) return std::string("sup-error is not monotone");
            prev = sup_exact;
        }
        std::ostringstream os;
        if (sup_exact > 1e-4) os << "exact-region error " << sup_exact << " > 1e-4; ";
        if (sup_interp > 1e-4) os << "interpolated-region error " << sup_interp << " > 1e-4";
        return os.str();
    });

    record(8, "hyperbola limit of the oval (eta_o -> 0)", [] {
        const ConicParams lim = limit_conic_eta_o_zero(1.5, -0.09, 0.6);
        const std::vector<double> ys = make_grid(2.0, 101);
        std::ostringstream os;
        {
            const OvalParams p =
                std::get<OvalParams>(validate_params(1.5, -0.09, 1e-6, 0.6));
            const BranchPlan plan = build_branch_plan(p, 2.0);
            double sup = 0.0;
            for (double y : ys)
                sup = std::max(sup, std::abs(evaluate(p, plan, y).z - conic_sag(lim, y).z));
            if (sup > 1e-4) os << "sup error " << sup << " > 1e-4; ";
        }
        for (double eo : {1e-3, 1e-4, 1e-5, 1e-6}) {
            const OvalParams p =
                std::get<OvalParams>(validate_params(1.5, -0.09, eo, 0.6));
            const std::vector<double> roots = disc_positive_roots(p);
            if (!roots.empty()) {
                os << "disc_positive_roots not empty at eta_o = " << eo << " (roots y = ";
                for (std::size_t i = 0; i < roots.size(); ++i)
                    os << (i ? ", " : "") << roots[i];
                os << "; the sextic genuinely vanishes there - the roots recede like "
                      "0.22/eta_o and only disappear in the exact limit); ";
            }
        }
        return os.str();
    });

    record(9, "the parameter swap leaves the curve invariant", [] {
        Gen gen(1009);
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const OvalParams p = gen.next();
            const double y_max = criterion_y_max(p);
            const BranchPlan plan = build_branch_plan(p, y_max);
            const OvalParams s = swap_form(p);
            const BranchPlan splan = build_branch_plan(s, y_max);
            for (double y : make_grid(y_max, 101))
                worst = std::max(worst,
                                 std::abs(evaluate(p, plan, y).z - evaluate(s, splan, y).z));
        }
        if (worst > 1e-9)
            return "max pointwise difference " + std::to_string(worst) + " exceeds 1e-9";
        return std::string();
    });

    record(10, "refraction law on C1 and C3", [] {
        const double h = 1e-6;
        double worst = 0.0;
        for (double ei : {0.3, 0.01}) {
            const OvalParams p = fig1_member(ei);
            const double y_max = criterion_y_max(p);
            const BranchPlan plan = build_branch_plan(p, y_max);
            for (int j = 1; j <= 20; ++j)
                worst = std::max(worst,
                                 std::abs(snell_residual(p, plan, y_max * j / 21.0, h)));
        }
        if (worst > 1e-6)
            return "max residual " + std::to_string(worst) + " exceeds 1e-6";
        return std::string();
    });

    record(11, "family of curves reproduces the reference classification", [&] {
        const std::vector<double> etas = {0.3, 0.18, 0.15, 0.072, 0.01,
                                          0.0, -0.01, -0.09, -0.15, -0.3};
        const std::vector<FamilyMember> fam = make_family(0.3, 1.5, 0.6, etas);
        if (fam.size() != 10) return std::string("family size != 10");
        int counts[4] = {0, 0, 0, 0};
        for (const FamilyMember& m : fam) ++counts[int(m.kind)];
        if (counts[int(FamilyKind::OpticalSolution)] != 6 ||
            counts[int(FamilyKind::Circle)] != 2 ||
            counts[int(FamilyKind::Ellipse)] != 1 ||
            counts[int(FamilyKind::Hyperbola)] != 1)
            return std::string("member kinds do not match 6/2/1/1");

        const ConicParams d1 = std::get<ConicParams>(fam[1].curve);
        const ConicParams d2 = std::get<ConicParams>(fam[3].curve);
        if (d1.c0 != d2.c0 || d1.K != d2.K || d1.K != 0.0)
            return std::string("the two circle members differ");
        const ConicParams d3 = std::get<ConicParams>(fam[5].curve);
        if (std::abs(d3.c0 - 0.3) > 1e-12 || std::abs(d3.K + 4.0 / 9.0) > 1e-12)
            return std::string("ellipse member is not (0.3, -4/9)");
        const ConicParams d4 = std::get<ConicParams>(fam[7].curve);
        if (std::abs(d4.c0 - 0.3) > 1e-12 || std::abs(d4.K + 2.25) > 1e-12)
            return std::string("hyperbola member is not (0.3, -2.25)");

        // C3 hugs the ellipse D3; C1 does not
        const OvalParams c1 = fig1_member(0.3);
        const OvalParams c3 = fig1_member(0.01);
        const BranchPlan p1 = build_branch_plan(c1, 2.0);
        const BranchPlan p3 = build_branch_plan(c3, 2.0);
        double dev1 = 0.0, dev3 = 0.0;
        for (double y : make_grid(2.0, 101)) {
            const double zd = conic_sag(d3, y).z;
            dev1 = std::max(dev1, std::abs(evaluate(c1, p1, y).z - zd));
            dev3 = std::max(dev3, std::abs(evaluate(c3, p3, y).z - zd));
        }
        if (!(dev3 < dev1)) return std::string("C3 does not hug the ellipse more than C1");

        if (!cli.empty()) {
            const fs::path dir = fs::temp_directory_path() / "superconic_acc_family";
            fs::remove_all(dir);
            const std::string cmd =
                shell_quote(cli) +
                " family --c0 0.3 --m 1.5 --epsilon 0.6 "
                "--eta-i 0.3,0.18,0.15,0.072,0.01,0,-0.01,-0.09,-0.15,-0.3 "
                "--ymax 2 --samples 101 --out " +
                shell_quote(dir.string());
            if (std::system(cmd.c_str()) != 0) return std::string("cli family run failed");
            const nlohmann::json doc = nlohmann::json::parse(slurp(dir / "family.json"));
            if (doc.at("members").size() != 10)
                return std::string("cli family.json does not list 10 members");
        }
        return std::string();
    });

    record(12, "superconic extension is exactly additive", [] {
        Gen gen(1012);
        const OvalParams p = fig1_member(0.3);
        const BranchPlan plan = build_branch_plan(p, 2.0);
        for (int i = 0; i < 200; ++i) {
            std::vector<double> f(1 + i % 5);
            for (double& v : f) v = gen.uniform(-0.5, 0.5);
            const double y = gen.uniform(0.0, 2.0);
            double poly = 0.0;
            double pw = y * y * y * y;
            for (double v : f) {
                poly += v * pw;
                pw *= y * y;
            }
            const double got = evaluate_superconic(p, plan, f, y) - evaluate(p, plan, y).z;
            if (std::abs(got - poly) > 1e-15 * (1.0 + std::abs(poly)))
                return std::string("additivity violated");
        }
        return std::string();
    });

    record(13, "sample and family output is byte-identical across runs", [&] {
        if (cli.empty()) return std::string("cli binary path not provided");
        const fs::path base = fs::temp_directory_path() / "superconic_acc_det";
        fs::remove_all(base);
        fs::create_directories(base);

        const std::string sample_cmd =
            shell_quote(cli) +
            " sample --m 1.5 --eta-i 0.3 --eta-o 0.26 --epsilon 0.6 --ymax 2 "
            "--samples 101";
        for (int run = 1; run <= 2; ++run) {
            const std::string cmd = sample_cmd + " > " +
                                    shell_quote((base / ("s" + std::to_string(run))).string());
            if (std::system(cmd.c_str()) != 0) return std::string("cli sample run failed");
        }
        if (slurp(base / "s1") != slurp(base / "s2"))
            return std::string("sample output differs between runs");

        for (int run = 1; run <= 2; ++run) {
            const std::string cmd =
                shell_quote(cli) +
                " family --c0 0.3 --m 1.5 --epsilon 0.6 "
                "--eta-i 0.3,0.18,0.15,0.072,0.01,0,-0.01,-0.09,-0.15,-0.3 "
                "--ymax 2 --samples 101 --out " +
                shell_quote((base / ("f" + std::to_string(run))).string());
            if (std::system(cmd.c_str()) != 0) return std::string("cli family run failed");
        }
        if (slurp(base / "f1" / "family.json") != slurp(base / "f2" / "family.json"))
            return std::string("family.json differs between runs");
        if (slurp(base / "f1" / "family.svg") != slurp(base / "f2" / "family.svg"))
            return std::string("family.svg differs between runs");
        return std::string();
    });

    int failures = 0;
    for (const Outcome& o : g_results) {
        std::printf("[%s] %2d. %s%s%s\n", o.pass ? "PASS" : "FAIL", o.id, o.name.c_str(),
                    o.detail.empty() ? "" : " -- ", o.detail.c_str());
        if (!o.pass) ++failures;
    }
    std::printf("%zu criteria, %d failed\n", g_results.size(), failures);
    return failures == 0 ? 0 : 1;
}
